from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from kodaira.abelian import FiniteAbelianGroup, element_order
from kodaira.corpus import TABLE4_IDS, load_entry, run_document
from kodaira.io import decode_number, monodromy_problem_from_payload
from kodaira.linalg import IntMatrix, lattice_index
from kodaira.monodromy import (
    ComponentAction,
    MonodromyProblem,
    RelativeClass,
    apply_monodromy,
    minimal_pullback_degree,
    monodromy_class,
    obstruction,
    pullback_problem,
    realize,
    stabilizer_index,
    stabilizer_lattice,
)
from kodaira.surface import InvalidDataError

GROUPS = [FiniteAbelianGroup((2,)), FiniteAbelianGroup((3,)), FiniteAbelianGroup((4,)),
          FiniteAbelianGroup((2, 2))]


@st.composite
def problems(draw, max_b=2, max_f=2):
    b = draw(st.integers(1, max_b))
    f = draw(st.integers(1, max_f))
    g = draw(st.sampled_from(GROUPS))
    nonzero = [x for x in g.elements() if not x.is_zero()]
    comps = []
    for _ in range(draw(st.integers(1, 3))):
        rows = draw(st.lists(st.lists(st.integers(-2, 2), min_size=2 * b, max_size=2 * b),
                             min_size=2 * f, max_size=2 * f))
        w = draw(st.sampled_from(nonzero))
        comps.append(ComponentAction(IntMatrix.from_rows(rows, 2 * b), w, e=draw(st.integers(1, 3))))
    return MonodromyProblem(b, f, g, tuple(comps))


def exponent(g: FiniteAbelianGroup) -> int:
    return max(element_order(x) for x in g.elements())


@settings(max_examples=150, deadline=None)
@given(problems())
def test_fixed_set_is_kernel_of_iota(p):
    theta = monodromy_class(p)
    e = exponent(p.group)
    fixed = 0
    for alpha in product(range(e), repeat=2 * p.b):
        is_fixed = apply_monodromy(p, theta, alpha) == theta
        in_kernel = all(x.is_zero() for x in p.iota(alpha))
        assert is_fixed == in_kernel
        fixed += is_fixed
    # iota factors through (Z/e)^{2b}, so the kernel has index |image|
    assert fixed * stabilizer_index(p) == e ** (2 * p.b)


@settings(max_examples=100, deadline=None)
@given(problems())
def test_stabilizer_lattice(p):
    lat = stabilizer_lattice(p)
    assert lattice_index(lat) == stabilizer_index(p)
    for j in range(lat.cols):
        assert all(x.is_zero() for x in p.iota(lat.col(j)))


@settings(max_examples=60, deadline=None)
@given(problems())
def test_realization_is_idempotent(p):
    deg = minimal_pullback_degree(p)
    assume(deg <= 64)
    q = pullback_problem(p)
    assert q.b == deg * (p.b - 1) + 1
    assert obstruction(q).is_zero()
    assert stabilizer_index(q) == 1


def test_apply_monodromy_uses_boundary_of_theta():
    g = FiniteAbelianGroup((3,))
    p = MonodromyProblem(1, 1, g, (ComponentAction(IntMatrix.identity(2), g.element([1])),))
    theta = RelativeClass((g.zero(), g.zero()), (g.element([2]),))
    moved = apply_monodromy(p, theta, (1, 0))
    assert moved.free_part == (g.element([2]), g.zero())
    assert moved.boundary == theta.boundary
    with pytest.raises(InvalidDataError):
        apply_monodromy(p, RelativeClass((g.zero(),) * 2, ()), (1, 0))
    with pytest.raises(ValueError):
        apply_monodromy(p, theta, (1, 0, 0))


def test_problem_validation():
    g = FiniteAbelianGroup((2,))
    with pytest.raises(InvalidDataError):
        MonodromyProblem(2, 2, g, (ComponentAction(IntMatrix.identity(2), g.element([1])),))
    with pytest.raises(InvalidDataError):
        MonodromyProblem(2, 2, g, ())
    with pytest.raises(InvalidDataError):
        ComponentAction(IntMatrix.identity(4), g.element([1]), r=3)


def test_zero_matrix_degree_is_obstruction_order():
    g = FiniteAbelianGroup((3,))
    comps = (ComponentAction(IntMatrix.zeros(4, 4), g.element([1])),)
    p = MonodromyProblem(2, 2, g, comps)
    rep = realize(p)
    assert rep.stabilizer_index == 1
    assert rep.obstruction_order == 3 == rep.minimal_degree


@pytest.mark.parametrize("gid", TABLE4_IDS)
def test_table_rows(gid):
    doc = load_entry(gid)
    res = run_document(doc)
    assert res.ok, res.mismatches
    assert decode_number(res.computed["row"]["sigma"]) % 4 == 0


@pytest.mark.parametrize("gid", TABLE4_IDS)
def test_corpus_pullback_is_idempotent(gid):
    p = monodromy_problem_from_payload(load_entry(gid)["payload"])
    q = pullback_problem(p)
    assert obstruction(q).is_zero() and stabilizer_index(q) == 1


def test_pullback_degree_must_be_multiple_of_index():
    p = monodromy_problem_from_payload(load_entry("free-involution-b3")["payload"])
    with pytest.raises(ValueError):
        pullback_problem(p, 2)
