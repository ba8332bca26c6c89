"""Virtual Kodaira fibrations and their numerical invariants.

A virtual fibration is a product ``F x B`` with a branch divisor made of
components ``D_i`` (degree ``d_i`` over ``B`` and ``e_i`` over ``F``) and
local monodromy of order ``r_i`` in a finite group ``G``.  Every invariant
here is an exact ``Fraction``.

The branch divisor meets a fibre ``F x {pt}`` in ``sum d_i`` points, which
is what enters the Chern numbers.  For graphs of automorphisms ``d = e = 1``
and the two weightings coincide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction

from .abelian import AbelianElement, FiniteAbelianGroup, element_order
from .surface import InvalidDataError


@dataclass(frozen=True)
class FibrationComponent:
    d: int
    e: int
    r: int
    weight: AbelianElement | None = None

    def __post_init__(self):
        if self.d < 1 or self.e < 1:
            raise ValueError("component degrees must be >= 1")
        if self.r < 2:
            raise ValueError("ramification order must be >= 2")
        if self.weight is not None and element_order(self.weight) != self.r:
            raise ValueError(f"weight {self.weight} has order {element_order(self.weight)}, not r={self.r}")


@dataclass(frozen=True)
class VirtualFibration:
    b: int
    f: int
    group: FiniteAbelianGroup | int
    components: tuple[FibrationComponent, ...]
    etale_both_ways: bool = False

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.b < 2 or self.f < 2:
            raise ValueError("base and fibre genus must be >= 2")
        if isinstance(self.group, int) and self.group < 1:
            raise ValueError("group order must be positive")
        for c in self.components:
            if c.weight is not None and isinstance(self.group, FiniteAbelianGroup) and c.weight.group != self.group:
                raise ValueError("component weight is not in the fibration's group")
        if self.etale_both_ways:
            for c in self.components:
                if c.d * (self.b - 1) != c.e * (self.f - 1):
                    raise ValueError(
                        f"component (d={c.d}, e={c.e}) is not etale over both factors: "
                        f"{c.d}*{self.b - 1} != {c.e}*{self.f - 1}")

    @property
    def order(self) -> int:
        return self.group if isinstance(self.group, int) else self.group.order

    @property
    def is_graph_type(self) -> bool:
        return all(c.d == 1 for c in self.components) or all(c.e == 1 for c in self.components)

    def component_genera(self) -> list[int]:
        """``g(D_i) = d_i (b - 1) + 1`` for etale components."""
        return [c.d * (self.b - 1) + 1 for c in self.components]


def euler(g: int) -> int:
    return 2 - 2 * g


@dataclass(frozen=True)
class VirtualInvariants:
    c2: Fraction
    c1_squared: Fraction
    sigma: Fraction
    slope: Fraction | None


def virtual_invariants(vf: VirtualFibration) -> VirtualInvariants:
    n, eB, eF = vf.order, euler(vf.b), euler(vf.f)
    punct = sum((c.d * Fraction(c.r - 1, c.r) for c in vf.components), Fraction(0))
    ram = sum((c.d * Fraction(c.r * c.r - 1, c.r * c.r) for c in vf.components), Fraction(0))
    c2 = n * eB * (eF - punct)
    c1sq = 2 * c2 - n * eB * ram
    sigma = (c1sq - 2 * c2) / 3
    return VirtualInvariants(c2, c1sq, sigma, c1sq / c2 if c2 else None)


def virtual_signature(vf: VirtualFibration) -> Fraction:
    return virtual_invariants(vf).sigma


def double_etale_signature(vf: VirtualFibration) -> Fraction:
    """``(2/3)|G|(f-1) sum e_i (1 - 1/r_i^2)`` for etale-compatible data."""
    if not vf.etale_both_ways:
        raise ValueError("double_etale_signature needs an etale_both_ways fibration")
    s = sum((c.e * (1 - Fraction(1, c.r * c.r)) for c in vf.components), Fraction(0))
    return Fraction(2, 3) * vf.order * (vf.f - 1) * s


def fibre_side_signature(vf: VirtualFibration) -> Fraction:
    """``(2/3)|G|(b-1) sum d_i (1 - 1/r_i^2)``, the same signature read from the other factor."""
    s = sum((c.d * (1 - Fraction(1, c.r * c.r)) for c in vf.components), Fraction(0))
    return Fraction(2, 3) * vf.order * (vf.b - 1) * s


def pullback(vf: VirtualFibration, deg: int) -> VirtualFibration:
    """Pull back along an unramified degree-``deg`` cover of ``B``.

    Each component keeps its degree over the new base and its degree over
    ``F`` is multiplied by ``deg``.
    """
    if deg < 1:
        raise ValueError("pullback degree must be >= 1")
    comps = tuple(replace(c, e=c.e * deg) for c in vf.components)
    return replace(vf, b=deg * (vf.b - 1) + 1, components=comps)


@dataclass(frozen=True)
class InvariantRow:
    g_B1: int
    g_F1: int
    g_B2: int
    g_F2: int
    c2: Fraction
    c1_squared: Fraction
    sigma: Fraction
    slope: Fraction | None

    COLUMNS = ("g(B1)", "g(F1)", "g(B2)", "g(F2)", "c2", "c1^2", "sigma", "slope")

    def __post_init__(self):
        if self.sigma != (self.c1_squared - self.c2 * 2) / 3:
            raise InvalidDataError("sigma != (c1^2 - 2 c2)/3")
        if self.c2 and self.slope != Fraction(self.c1_squared) / self.c2:
            raise InvalidDataError("slope != c1^2/c2")

    def as_tuple(self) -> tuple:
        return (self.g_B1, self.g_F1, self.g_B2, self.g_F2, self.c2, self.c1_squared, self.sigma, self.slope)


def _genus_from(two_g_minus_two: Fraction, what: str) -> int:
    if two_g_minus_two.denominator != 1 or two_g_minus_two.numerator % 2:
        raise InvalidDataError(f"non-integral genus for {what}: 2g-2 = {two_g_minus_two}")
    return two_g_minus_two.numerator // 2 + 1


def realized_invariants(vf: VirtualFibration, deg: int) -> InvariantRow:
    """Invariants of the surface obtained after pulling back by ``deg``.

    ``F1`` is the ``G``-cover of ``F`` branched at the points of ``D`` on a
    fibre; ``F2`` is the ``G``-cover of the pulled back base branched at the
    points of ``D`` over a point of ``F``.
    """
    if deg < 1:
        raise ValueError("pullback degree must be >= 1")
    n = vf.order
    g_B1 = deg * (vf.b - 1) + 1
    br_F = sum((c.d * (1 - Fraction(1, c.r)) for c in vf.components), Fraction(0))
    br_B = sum((c.e * (1 - Fraction(1, c.r)) for c in vf.components), Fraction(0))
    g_F1 = _genus_from(n * (2 * vf.f - 2 + br_F), "F1")
    g_F2 = _genus_from(n * (2 * g_B1 - 2 + deg * br_B), "F2")
    inv = virtual_invariants(pullback(vf, deg))
    if inv.c2 != euler(g_B1) * euler(g_F1):
        raise InvalidDataError("c2 disagrees with e(B1) e(F1)")
    return InvariantRow(g_B1, g_F1, vf.f, g_F2, inv.c2, inv.c1_squared, inv.sigma, inv.slope)


class FreeAction(enum.Enum):
    IMPOSSIBLE = "impossible"
    NECESSARY_CONDITIONS_MET = "necessary-conditions-met"
    EXISTS_FOR_ABELIAN = "exists-for-abelian"


def free_action_possible(g: int, n: int, group: FiniteAbelianGroup | None = None,
                         generators_needed: int | None = None) -> FreeAction:
    """Can a group of order ``n`` act freely on a curve of genus ``g``?

    A free action means an unramified cover onto a curve of genus ``q`` with
    ``2g - 2 = n (2q - 2)``, and ``q >= 2`` since ``g >= 2``.  An abelian
    group then acts freely iff it needs at most ``2q`` generators.  Passing
    ``group`` (or ``generators_needed`` for an abelian group given only by
    its rank) enables that check; otherwise only the numerical condition is
    reported.
    """
    if g < 2 or n < 1:
        raise ValueError("need g >= 2 and n >= 1")
    if group is not None and group.order != n:
        raise ValueError(f"group {group} does not have order {n}")
    if (g - 1) % n:
        return FreeAction.IMPOSSIBLE
    q = (g - 1) // n + 1
    if q < 2:
        return FreeAction.IMPOSSIBLE
    rank = group.rank if group is not None else generators_needed
    if rank is None:
        return FreeAction.NECESSARY_CONDITIONS_MET
    return FreeAction.EXISTS_FOR_ABELIAN if rank <= 2 * q else FreeAction.IMPOSSIBLE
