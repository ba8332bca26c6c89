from itertools import combinations_with_replacement, product

import pytest

from kodaira import golden
from kodaira.abelian import abelian_groups_of_order, element_order
from kodaira.enumeration import (
    ABELIAN_BOTH_SIDES_NOTE,
    NONABELIAN_ORDER_RANGE,
    UNBOUNDED_FLAG,
    Feasibility,
    abelian_feasible,
    check_row_consistency,
    enumerate_graph_rows,
    enumerate_sig4_rows,
    graph_sigma,
    m1_commutator_feasible,
    max_disjoint_graphs,
    nonabelian_order,
)


def zero_sum_order_types(group, m):
    """Sorted order tuples of all m-tuples of group elements summing to zero."""
    elems = list(group.elements())
    out = set()
    for head in product(elems, repeat=m - 1):
        s = group.zero()
        for x in head:
            s = s + x
        last = -s
        out.add(tuple(sorted(element_order(x) for x in head + (last,))))
    return out


@pytest.mark.parametrize("d", range(2, 17))
def test_abelian_feasible_brute_force(d):
    groups = abelian_groups_of_order(d)
    divisors = [r for r in range(2, d + 1) if d % r == 0]
    for m in (1, 2, 3, 4):
        achievable = {g: zero_sum_order_types(g, m) for g in groups}
        for r in combinations_with_replacement(divisors, m):
            feas = abelian_feasible(d, r)
            expect = tuple(g for g in groups if tuple(sorted(r)) in achievable[g])
            assert feas.groups == expect
            if not expect:
                assert feas.status is Feasibility.INFEASIBLE
            elif len(expect) == len(groups):
                assert feas.status is Feasibility.FEASIBLE
            else:
                assert feas.status is Feasibility.CONSTRAINED


def _factor(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def only_abelian(n):
    """Every group of order n is abelian iff n is cube-free and no prime q | n
    divides p^i - 1 for a prime power p^a || n and 1 <= i <= a."""
    f = _factor(n)
    if any(a >= 3 for a in f.values()):
        return False
    for p, a in f.items():
        for q in f:
            if q != p and any((p ** i - 1) % q == 0 for i in range(1, a + 1)):
                return False
    return True


def test_nonabelian_orders_match_arithmetic_criterion():
    lo, hi = NONABELIAN_ORDER_RANGE
    for n in range(lo, hi + 1):
        assert nonabelian_order(n) == (not only_abelian(n)), n
    with pytest.raises(ValueError):
        nonabelian_order(33)


def test_m1_rules():
    assert not m1_commutator_feasible(6, 2)
    assert m1_commutator_feasible(8, 2)
    assert not m1_commutator_feasible(4, 2)
    assert max_disjoint_graphs(2) == 3 and max_disjoint_graphs(3) == 6
    assert max_disjoint_graphs(4) is None


def test_graph_sigma():
    assert graph_sigma(3, 2, (2, 2)) == 4
    assert graph_sigma(2, 27, (3,)) == 16


def test_table1_reproduced():
    rows = enumerate_graph_rows(16)
    assert len(rows) == 32
    assert [sum(1 for r in rows if r.sigma == s) for s in (4, 8, 12, 16)] == [3, 6, 11, 12]
    assert golden.compare_table1(rows) == []
    assert all(check_row_consistency(r) for r in rows)
    flagged = [r for r in rows if UNBOUNDED_FLAG in r.flags]
    assert all(r.b >= 4 and len(r.r) > 2 for r in flagged)


def test_table1_parallel_is_identical():
    assert enumerate_graph_rows(16, jobs=4) == enumerate_graph_rows(16)


def test_graph_rows_small_bound():
    rows = enumerate_graph_rows(4)
    assert [(r.b, r.d, r.r) for r in rows] == [(2, 8, (2,)), (3, 2, (2, 2)), (2, 4, (2, 2))]
    with pytest.raises(ValueError):
        enumerate_graph_rows(6)


def test_table2_reproduced():
    rows = enumerate_sig4_rows()
    assert len(rows) == 16
    assert [r.label for r in rows] == [f"G{i}" for i in range(1, 5)] + [f"C{i}" for i in range(1, 13)]
    assert golden.compare_table2(rows) == []
    assert all(check_row_consistency(r) for r in rows)
    for r in rows:
        assert (r.kind == "G") == all(c.d == 1 for c in r.components)
        for c in r.components:
            assert c.d * (r.b - 1) == c.e * (r.f - 1)
            assert c.g_D == c.d * (r.b - 1) + 1
    noted = {r.label for r in rows if ABELIAN_BOTH_SIDES_NOTE in r.notes}
    assert noted == {"C5", "C6", "C8"}


def test_table2_parallel_is_identical():
    assert enumerate_sig4_rows(jobs=3) == enumerate_sig4_rows()
