from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kodaira.abelian import FiniteAbelianGroup
from kodaira.fibration import (
    FibrationComponent,
    FreeAction,
    InvariantRow,
    VirtualFibration,
    double_etale_signature,
    fibre_side_signature,
    free_action_possible,
    pullback,
    realized_invariants,
    virtual_invariants,
    virtual_signature,
)
from kodaira.surface import InvalidDataError


def graph_fibration(b, n, rs):
    return VirtualFibration(b, b, n, tuple(FibrationComponent(1, 1, r) for r in rs))


def test_graph_type_signature():
    vf = graph_fibration(3, 2, (2, 2))
    inv = virtual_invariants(vf)
    assert inv.sigma == 4
    assert inv.c2 == 2 * -4 * (-4 - 1)
    assert inv.sigma == (inv.c1_squared - 2 * inv.c2) / 3
    assert inv.slope == inv.c1_squared / inv.c2


def test_single_graph_sl23():
    # three graphs with weight of order 3 on genus 2
    vf = graph_fibration(2, 3, (3, 3, 3))
    assert virtual_signature(vf) == Fraction(16, 3)
    row = realized_invariants(vf, 9)
    assert row.as_tuple() == (10, 7, 2, 55, 216, 576, 48, Fraction(8, 3))


def test_empty_divisor_has_zero_signature():
    vf = VirtualFibration(2, 3, 4, ())
    assert virtual_signature(vf) == 0


def test_component_validation():
    g = FiniteAbelianGroup((4,))
    with pytest.raises(ValueError):
        FibrationComponent(1, 1, 2, g.element([1]))
    with pytest.raises(ValueError):
        FibrationComponent(0, 1, 2)
    with pytest.raises(ValueError):
        VirtualFibration(3, 2, 2, (FibrationComponent(1, 1, 2),), etale_both_ways=True)
    with pytest.raises(ValueError):
        VirtualFibration(1, 2, 2, ())


def test_pullback_scales_base():
    vf = graph_fibration(3, 2, (2, 2))
    pb = pullback(vf, 4)
    assert pb.b == 9
    assert [c.e for c in pb.components] == [4, 4]
    assert [c.d for c in pb.components] == [1, 1]
    assert virtual_signature(pb) == 4 * virtual_signature(vf)


def test_realized_row_free_involution():
    vf = graph_fibration(3, 2, (2, 2))
    row = realized_invariants(vf, 4)
    assert row.as_tuple() == (9, 6, 3, 21, 160, 368, 16, Fraction(23, 10))


def test_non_integral_genus_is_rejected():
    vf = VirtualFibration(2, 2, 2, (FibrationComponent(1, 1, 3),))
    with pytest.raises(InvalidDataError):
        realized_invariants(vf, 1)


def test_invariant_row_checks():
    with pytest.raises(InvalidDataError):
        InvariantRow(2, 2, 2, 2, Fraction(4), Fraction(9), Fraction(0), Fraction(9, 4))


@st.composite
def etale_inputs(draw):
    b = draw(st.integers(2, 8))
    f = draw(st.integers(2, 8))
    g = gcd(b - 1, f - 1)
    m = draw(st.integers(1, 4))
    comps = []
    for _ in range(m):
        k = draw(st.integers(1, 3))
        d, e = k * (f - 1) // g, k * (b - 1) // g
        comps.append(FibrationComponent(d, e, draw(st.integers(2, 9))))
    return VirtualFibration(b, f, draw(st.integers(1, 64)), tuple(comps), etale_both_ways=True)


@settings(max_examples=500, deadline=None)
@given(etale_inputs())
def test_double_etale_signature_agrees(vf):
    assert double_etale_signature(vf) == virtual_signature(vf) == fibre_side_signature(vf)


def test_free_action_predicate():
    assert free_action_possible(5, 8) is FreeAction.IMPOSSIBLE
    assert free_action_possible(2, 2) is FreeAction.IMPOSSIBLE
    assert free_action_possible(5, 4, FiniteAbelianGroup((2, 2))) is FreeAction.EXISTS_FOR_ABELIAN
    assert free_action_possible(3, 2) is FreeAction.NECESSARY_CONDITIONS_MET
    assert free_action_possible(33, 32, FiniteAbelianGroup((2,) * 5)) is FreeAction.IMPOSSIBLE
    assert free_action_possible(33, 32, generators_needed=4) is FreeAction.EXISTS_FOR_ABELIAN
    with pytest.raises(ValueError):
        free_action_possible(5, 4, FiniteAbelianGroup((3,)))
