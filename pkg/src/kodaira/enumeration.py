"""Exhaustive numerical searches for small virtual signature.

Two searches are implemented:

* graph type: ``sigma = (2/3)(b-1) d sum (1 - 1/r_i^2)`` with ``d = |G|``,
  divisible by 4 and at most ``sigma_max``;
* double etale with ``sigma = 4``: components with degrees ``(d_i, e_i)``
  satisfying ``d_i (b-1) = e_i (f-1)``.

Facts about non-abelian groups and disjoint graphs that cannot be derived
by a small computation are kept as explicit tables below.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import lcm
from typing import Iterable, Sequence

from .abelian import FiniteAbelianGroup, abelian_groups_of_order, element_order
from .fibration import FibrationComponent, VirtualFibration, double_etale_signature, virtual_invariants

# Orders <= 32 admitting a non-abelian group.  Every order not listed is
# cube-free with no prime power p^k | n satisfying p^k = 1 mod q for another
# prime q | n, which forces all groups of that order to be abelian.
NONABELIAN_ORDERS = frozenset({6, 8, 10, 12, 14, 16, 18, 20, 21, 22, 24, 26, 27, 28, 30, 32})
NONABELIAN_ORDER_RANGE = (2, 32)

# Single puncture: the loop around it is a commutator, so its image must be
# a non-trivial commutator of the required order.  The only non-abelian
# group of order 6 is S3, whose commutator subgroup A3 has no element of
# order 2.
M1_EXCEPTIONS = frozenset({(6, 2)})

# Maximal number of pairwise disjoint graphs of automorphisms of a curve of
# genus b, where known: 3 in genus 2 and 6 in genus 3.  No bound is used in
# higher genus.
MAX_DISJOINT_GRAPHS = {2: 3, 3: 6}

UNBOUNDED_FLAG = "unbounded-graph-count"


class Feasibility(enum.Enum):
    INFEASIBLE = "infeasible"
    FEASIBLE = "feasible"
    CONSTRAINED = "constrained"


@dataclass(frozen=True)
class AbelianFeasibility:
    status: Feasibility
    groups: tuple[FiniteAbelianGroup, ...]
    all_groups: tuple[FiniteAbelianGroup, ...]

    @property
    def excluded(self) -> tuple[FiniteAbelianGroup, ...]:
        return tuple(g for g in self.all_groups if g not in self.groups)


def _zero_sum_exists(group: FiniteAbelianGroup, orders: Sequence[int]) -> bool:
    by_order: dict[int, list[tuple[int, ...]]] = {}
    for x in group.elements():
        by_order.setdefault(element_order(x), []).append(x.coords)
    ns = group.invariant_factors
    sums = {(0,) * len(ns)}
    for r in orders:
        elems = by_order.get(r)
        if not elems:
            return False
        sums = {tuple((s + e) % n for s, e, n in zip(acc, x, ns)) for acc in sums for x in elems}
    return (0,) * len(ns) in sums


def abelian_feasible(d: int, r: Sequence[int]) -> AbelianFeasibility:
    """Which abelian groups of order ``d`` have elements of orders ``r_1..r_m`` summing to zero."""
    if d < 1:
        raise ValueError("order must be positive")
    groups = tuple(abelian_groups_of_order(d))
    ok = tuple(g for g in groups if _zero_sum_exists(g, r))
    if not ok:
        status = Feasibility.INFEASIBLE
    elif len(ok) == len(groups):
        status = Feasibility.FEASIBLE
    else:
        status = Feasibility.CONSTRAINED
    return AbelianFeasibility(status, ok, groups)


def nonabelian_order(d: int) -> bool:
    lo, hi = NONABELIAN_ORDER_RANGE
    if not lo <= d <= hi:
        raise ValueError(f"order {d} outside the supported range {lo}..{hi}")
    return d in NONABELIAN_ORDERS


def m1_commutator_feasible(d: int, r: int) -> bool:
    return nonabelian_order(d) and (d, r) not in M1_EXCEPTIONS


def max_disjoint_graphs(b: int) -> int | None:
    if b < 2:
        raise ValueError("genus must be >= 2")
    return MAX_DISJOINT_GRAPHS.get(b)


# --- graph type --------------------------------------------------------------


@dataclass(frozen=True)
class GraphTypeRow:
    sigma: int
    b: int
    d: int
    r: tuple[int, ...]
    annotation: str = ""
    flags: tuple[str, ...] = ()

    def key(self) -> tuple:
        return (self.sigma, self.b, self.d, tuple(sorted(self.r, reverse=True)))

    def virtual_fibration(self) -> VirtualFibration:
        return VirtualFibration(self.b, self.b, self.d, tuple(FibrationComponent(1, 1, ri) for ri in self.r))


def graph_sigma(b: int, d: int, r: Sequence[int]) -> Fraction:
    return Fraction(2, 3) * (b - 1) * d * sum((Fraction(x * x - 1, x * x) for x in r), Fraction(0))


def _divisors(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if n % k == 0]


def _graph_rows_for(b: int, d: int, sigma_max: int) -> list[GraphTypeRow]:
    out = []
    bound = 2 * sigma_max
    m_max = bound // ((b - 1) * d)
    bmax = max_disjoint_graphs(b)
    for m in range(1, m_max + 1):
        if bmax is not None and m > bmax:
            continue
        for r in combinations_with_replacement(_divisors(d), m):
            s = graph_sigma(b, d, r)
            if s.denominator != 1 or s <= 0 or s > sigma_max or s.numerator % 4:
                continue
            r = tuple(sorted(r, reverse=True))
            ann = _annotate(d, r)
            if ann is None:
                continue
            flags = (UNBOUNDED_FLAG,) if bmax is None and m > 2 else ()
            out.append(GraphTypeRow(int(s), b, d, r, ann, flags))
    return out


def _annotate(d: int, r: tuple[int, ...]) -> str | None:
    """Annotation for a surviving row, or ``None`` if the row is excluded."""
    if len(r) == 1:
        return "non-abelian" if m1_commutator_feasible(d, r[0]) else None
    feas = abelian_feasible(d, r)
    nonab = nonabelian_order(d)
    if feas.status is Feasibility.INFEASIBLE:
        return "non-abelian" if nonab else None
    if feas.status is Feasibility.FEASIBLE:
        return ""
    excluded = feas.excluded
    if nonab and len(excluded) == 1 and excluded[0].is_cyclic():
        return "non-cyclic"
    return ", ".join(g.label() for g in feas.groups)


def enumerate_graph_rows(sigma_max: int = 16, jobs: int = 1) -> list[GraphTypeRow]:
    if sigma_max < 0 or sigma_max % 4:
        raise ValueError("sigma_max must be a non-negative multiple of 4")
    bound = 2 * sigma_max  # (b-1) d m <= 2 sigma_max since (r^2-1)/r^2 >= 3/4
    pairs = [(b, d) for b in range(2, bound + 2) for d in range(2, bound // (b - 1) + 1)]
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as ex:
            chunks = list(ex.map(lambda bd: _graph_rows_for(bd[0], bd[1], sigma_max), pairs))
    else:
        chunks = [_graph_rows_for(b, d, sigma_max) for b, d in pairs]
    rows = [row for chunk in chunks for row in chunk]
    return sorted(rows, key=_graph_sort_key)


def _graph_sort_key(row: GraphTypeRow):
    return (row.sigma, len(row.r), row.r, -row.b, row.d)


# --- signature four, double etale ---------------------------------------------


@dataclass(frozen=True)
class SigFourComponent:
    g_D: int
    d: int
    e: int


@dataclass(frozen=True)
class SigFourRow:
    b: int
    f: int
    order: int
    components: tuple[SigFourComponent, ...]
    r: tuple[int, ...]
    label: str = ""
    notes: tuple[str, ...] = ()

    @property
    def kind(self) -> str:
        """``G`` when every component is a graph over ``B`` (``d_i = 1``), else ``C``."""
        return "G" if all(c.d == 1 for c in self.components) else "C"

    def key(self) -> tuple:
        return (self.b, self.f, self.order,
                tuple(sorted((c.g_D, c.d, c.e) for c in self.components)))

    def virtual_fibration(self) -> VirtualFibration:
        comps = tuple(FibrationComponent(c.d, c.e, r) for c, r in zip(self.components, self.r))
        return VirtualFibration(self.b, self.f, self.order, comps, etale_both_ways=True)


SIG4_BOUNDS = {"order": (2, 8), "f": (2, 5), "m": (1, 4), "e": (1, 4)}

ABELIAN_BOTH_SIDES_NOTE = "abelian G needs sum d_i >= 2 and sum e_i >= 2"


def _sig4_candidates(order: int, f: int) -> Iterable[SigFourRow]:
    lo_m, hi_m = SIG4_BOUNDS["m"]
    lo_e, hi_e = SIG4_BOUNDS["e"]
    comp_choices = [(e, r) for e in range(lo_e, hi_e + 1) for r in _divisors(order)]
    # sigma = 4 means sum e (r^2 - 1)/r^2 = 6 / (|G| (f - 1)); compare over a common denominator
    den = lcm(*(r * r for r in _divisors(order)))
    weight = {(e, r): e * (r * r - 1) * (den // (r * r)) for e, r in comp_choices}
    target = Fraction(6 * den, order * (f - 1))
    if target.denominator != 1:
        return
    target = target.numerator
    for m in range(lo_m, hi_m + 1):
        for comps in combinations_with_replacement(comp_choices, m):
            if sum(weight[c] for c in comps) != target:
                continue
            # b - 1 must divide every e_i (f - 1)
            for b in range(2, min(e * (f - 1) for e, _ in comps) + 2):
                if any((e * (f - 1)) % (b - 1) for e, _ in comps):
                    continue
                parts = tuple(SigFourComponent(e * (f - 1) // (b - 1) * (b - 1) + 1, e * (f - 1) // (b - 1), e)
                              for e, _ in comps)
                yield SigFourRow(b, f, order, parts, tuple(r for _, r in comps))


def _sig4_excluded(row: SigFourRow) -> bool:
    m = len(row.components)
    sum_d = sum(c.d for c in row.components)
    if sum_d == 1:
        # a single graph meeting each fibre once: the puncture loop is a
        # commutator, so G must be non-abelian
        if not m1_commutator_feasible(row.order, row.r[0]):
            return True
    if row.kind == "G" and row.b == row.f:
        bound = max_disjoint_graphs(row.b)
        if bound is not None and m > bound:
            return True
    return False


def enumerate_sig4_rows(jobs: int = 1) -> list[SigFourRow]:
    lo_g, hi_g = SIG4_BOUNDS["order"]
    lo_f, hi_f = SIG4_BOUNDS["f"]
    pairs = [(n, f) for n in range(lo_g, hi_g + 1) for f in range(lo_f, hi_f + 1)]

    def run(nf):
        return [row for row in _sig4_candidates(*nf) if not _sig4_excluded(row)]

    if jobs > 1:
        with ThreadPoolExecutor(jobs) as ex:
            chunks = list(ex.map(run, pairs))
    else:
        chunks = [run(nf) for nf in pairs]
    seen = {}
    for row in (r for chunk in chunks for r in chunk):
        seen.setdefault(row.key(), row)
    rows = []
    for row in seen.values():
        pairs = sorted(zip(row.components, row.r), key=lambda cr: (cr[0].g_D, cr[0].d, cr[0].e, cr[1]))
        comps, rs = tuple(c for c, _ in pairs), tuple(r for _, r in pairs)
        # sum d_i = 1 already forces G non-abelian; otherwise flag rows that
        # an abelian G could not realize
        sd, se = sum(c.d for c in comps), sum(c.e for c in comps)
        notes = (ABELIAN_BOTH_SIDES_NOTE,) if sd >= 2 and se < 2 else ()
        rows.append(SigFourRow(row.b, row.f, row.order, comps, rs, "", notes))
    rows.sort(key=lambda r: (r.kind != "G", r.key()))
    return assign_sig4_labels(rows)


def assign_sig4_labels(rows: list[SigFourRow]) -> list[SigFourRow]:
    """Attach the conventional labels ``G1..``/``C1..`` by matching the bundled golden table."""
    from .golden import sig4_labels

    labels = sig4_labels()
    out = []
    for row in rows:
        lab = labels.get(row.key(), "")
        out.append(SigFourRow(row.b, row.f, row.order, row.components, row.r, lab, row.notes))

    def order_key(r):
        if r.label:
            return (0, r.label[0] != "G", int(r.label[1:]))
        return (1, r.kind != "G", r.key())

    return sorted(out, key=order_key)


def check_row_consistency(row: GraphTypeRow | SigFourRow) -> bool:
    """Re-evaluate the signature through the fibration formulas."""
    vf = row.virtual_fibration()
    if isinstance(row, GraphTypeRow):
        return virtual_invariants(vf).sigma == row.sigma
    return double_etale_signature(vf) == 4 and virtual_invariants(vf).sigma == 4
