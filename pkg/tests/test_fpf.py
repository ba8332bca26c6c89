from itertools import product
from math import gcd

import pytest

from kodaira import golden
from kodaira.fpf import (
    FpfType,
    NielsenClass,
    config_classes,
    counts_by_genus,
    enumerate_fpf,
    exceptional_report,
    nielsen_classes,
)


def classes(t):
    return {c.values for c in nielsen_classes(t)}


def ordered_tuple_oracle(t: FpfType):
    """All ordered tuples with the right orders, summing to 0, read as multisets."""
    d = t.d
    choices = [[a for a in range(1, d) if d // gcd(d, a) == r] for r in t.orders]
    out = set()
    for vals in product(*choices):
        if sum(vals) % d:
            continue
        if t.q == 0:
            g = 0
            for v in vals:
                g = gcd(g, v)
            if gcd(g, d) != 1:
                continue
        out.add(NielsenClass(d, vals).values)
    return out


def test_small_genus_types():
    assert enumerate_fpf(2) == [FpfType(2, 6, 0, (2, 2, 3, 3))]
    assert set(enumerate_fpf(3)) - set(enumerate_fpf(2)) == {FpfType(3, 2, 2), FpfType(3, 4, 1, (2, 2))}


def test_counts_and_golden_set():
    types = enumerate_fpf(9)
    assert len(types) == 53
    assert counts_by_genus(types) == {2: 1, 3: 2, 4: 4, 5: 6, 6: 5, 7: 12, 8: 9, 9: 14}
    assert golden.compare_fpf_types(types, 9) == []


def test_types_are_consistent():
    for t in enumerate_fpf(9):
        assert t.hurwitz_ok()
        assert all(1 < r < t.d and t.d % r == 0 for r in t.orders)
        if t.ramified:
            assert len(t.orders) >= 2


def test_bad_genus_bound():
    with pytest.raises(ValueError):
        enumerate_fpf(1)


@pytest.mark.parametrize("t", enumerate_fpf(9), ids=str)
def test_nielsen_classes_match_tuple_oracle(t):
    if not t.ramified:
        assert classes(t) == {()}
        return
    got = classes(t)
    assert got == ordered_tuple_oracle(t)
    assert got, "every listed type is realized"
    # closed under negation
    assert {c.negate().values for c in nielsen_classes(t)} == got


def test_nielsen_examples():
    assert classes(FpfType(9, 10, 1, (5, 5))) == {(2, 8), (4, 6)}
    assert classes(FpfType(3, 4, 1, (2, 2))) == {(2, 2)}
    assert classes(FpfType(9, 8, 1, (2, 4, 4))) == {(4, 2, 2), (4, 6, 6)}
    assert classes(FpfType(8, 18, 0, (2, 2, 9, 9))) == {(9, 9, 2, 16), (9, 9, 4, 14), (9, 9, 8, 10)}


def test_config_classes_examples():
    orbit_sizes = lambda t: sorted(len(o) for o in config_classes(t))
    assert orbit_sizes(FpfType(7, 6, 1, (3, 3, 3))) == [2]
    assert orbit_sizes(FpfType(9, 10, 1, (5, 5))) == [1, 1]
    assert orbit_sizes(FpfType(8, 6, 0, (2, 2, 3, 3, 3, 3, 3))) == [2]


def test_genus7_order12_has_two_orbits():
    orbits = config_classes(FpfType(7, 12, 0, (3, 4, 4, 6)))
    got = {frozenset(c.values for c in o) for o in orbits}
    expect = {frozenset({(4, 3, 3, 2), (8, 9, 9, 10)}), frozenset({(4, 9, 9, 2), (8, 3, 3, 10)})}
    assert got == expect


def test_exceptional_report_against_printed_table():
    report = exceptional_report(9)
    assert len(report) == 14
    diffs = golden.compare_exceptional(report, 9)
    assert golden.blocking(diffs) == []
    flagged = [d for d in diffs if d.kind == "flagged"]
    assert len(flagged) == 2
    assert {d.subject for d in flagged} == {str(FpfType(7, 12, 0, (3, 4, 4, 6))),
                                           str(FpfType(9, 12, 0, (2, 3, 3, 4, 4)))}


def test_exceptional_report_genus2_is_empty():
    assert exceptional_report(2) == []
