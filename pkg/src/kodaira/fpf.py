"""Fixed-point-free automorphisms of curves of small genus.

An automorphism ``phi`` of order ``d`` on a curve of genus ``b`` is encoded
by the cyclic cover ``B -> B/<phi>`` with quotient genus ``q`` and branch
values ``a_1..a_m`` in ``Z/d``.  It acts without fixed points iff every
``a_i`` generates a proper non-trivial subgroup, i.e. ``1 < ord(a_i) < d``.
The multiset of branch values (the Nielsen type) classifies ``phi`` up to
topological conjugacy; configurations of two disjoint graphs are classified
up to replacing ``phi`` by its inverse, which negates every value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement, product
from math import gcd
from typing import Iterable, Sequence

from .linalg import lcm


@dataclass(frozen=True, order=True)
class FpfType:
    b: int
    d: int
    q: int
    orders: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(sorted(self.orders)))

    @property
    def ramified(self) -> bool:
        return bool(self.orders)

    def hurwitz_ok(self) -> bool:
        chi = 2 * self.q - 2 + sum((1 - Fraction(1, r) for r in self.orders), Fraction(0))
        return 2 * self.b - 2 == self.d * chi

    def label(self) -> str:
        if not self.orders:
            return f"({self.q}|-)"
        parts = []
        for r in sorted(set(self.orders)):
            k = self.orders.count(r)
            parts.append(str(r) if k == 1 else f"{r}^{k}")
        return f"({self.q}|" + ",".join(parts) + ")"

    def __str__(self) -> str:
        return f"b={self.b} d={self.d} {self.label()}"


@dataclass(frozen=True, order=True)
class NielsenClass:
    """A multiset of branch values in ``Z/d``, stored sorted by (order, value)."""

    d: int
    values: tuple[int, ...]

    def __post_init__(self):
        d = self.d
        vals = tuple(sorted((v % d for v in self.values), key=lambda a: (d // gcd(d, a), a)))
        object.__setattr__(self, "values", vals)

    def negate(self) -> "NielsenClass":
        return NielsenClass(self.d, tuple(-v for v in self.values))

    def counts(self) -> dict[int, int]:
        """The Nielsen type ``(n_a)``: how often each value occurs."""
        out: dict[int, int] = {}
        for v in self.values:
            out[v] = out.get(v, 0) + 1
        return out

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"


def _order(a: int, d: int) -> int:
    return d // gcd(d, a)


def _proper_divisors(d: int) -> list[int]:
    return [r for r in range(2, d) if d % r == 0]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n ** 0.5) + 1))


def _zero_sum_possible(d: int, orders: Sequence[int]) -> bool:
    sums = {0}
    for r in orders:
        step = d // r
        elems = [step * u for u in range(1, r) if gcd(u, r) == 1]
        sums = {(s + a) % d for s in sums for a in elems}
    return 0 in sums


def _admissible(d: int, q: int, orders: Sequence[int]) -> bool:
    if q == 0 and reduce(lcm, orders, 1) != d:
        return False
    return _zero_sum_possible(d, orders)


def unramified_types(b_max: int) -> list[FpfType]:
    out = []
    for b in range(2, b_max + 1):
        for d in range(2, b):
            if (b - 1) % d == 0:
                out.append(FpfType(b, d, (b - 1) // d + 1))
    return out


def ramified_types(b_max: int, d_max: int | None = None) -> list[FpfType]:
    """Exhaustive search with ``d <= 4 b_max + 2``."""
    d_max = 4 * b_max + 2 if d_max is None else d_max
    limit = 2 * b_max - 2
    out = []
    for d in range(4, d_max + 1):
        divs = _proper_divisors(d)
        if not divs:
            continue
        q = 0
        # with m >= 2 each term is >= 1/2, so d (2q - 1) <= 2 b_max - 2
        while d * (2 * q - 1) <= limit:
            m = 2
            while d * (2 * q - 2 + Fraction(m, 2)) <= limit:
                for orders in combinations_with_replacement(divs, m):
                    two_b_minus_two = d * (2 * q - 2 + sum((1 - Fraction(1, r) for r in orders), Fraction(0)))
                    if two_b_minus_two.denominator != 1 or two_b_minus_two.numerator % 2:
                        continue
                    b = two_b_minus_two.numerator // 2 + 1
                    if 2 <= b <= b_max and _admissible(d, q, orders):
                        out.append(FpfType(b, d, q, orders))
                m += 1
            q += 1
    return out


def enumerate_fpf(b_max: int) -> list[FpfType]:
    if not 2 <= b_max <= 12:
        raise ValueError("b_max must lie in 2..12")
    types = sorted(set(unramified_types(b_max)) | set(ramified_types(b_max)),
                   key=lambda t: (t.b, -t.q, -len(t.orders) == 0, t.d, t.orders))
    for t in types:
        if not t.hurwitz_ok():
            raise AssertionError(f"Hurwitz identity fails for {t}")
        if t.ramified and _is_prime(t.d):
            raise AssertionError(f"ramified fixed-point-free type with prime order {t}")
    return types


def counts_by_genus(types: Iterable[FpfType]) -> dict[int, int]:
    out: dict[int, int] = {}
    for t in types:
        out[t.b] = out.get(t.b, 0) + 1
    return dict(sorted(out.items()))


def nielsen_classes(t: FpfType) -> list[NielsenClass]:
    if not t.ramified:
        return [NielsenClass(t.d, ())]
    d = t.d
    if t.q == 0 and reduce(lcm, t.orders, 1) != d:
        return []
    per_order = []
    for r in sorted(set(t.orders)):
        k = t.orders.count(r)
        elems = [d // r * u for u in range(1, r) if gcd(u, r) == 1]
        per_order.append(list(combinations_with_replacement(elems, k)))
    out = set()
    for choice in product(*per_order):
        vals = tuple(v for part in choice for v in part)
        if sum(vals) % d == 0:
            out.add(NielsenClass(d, vals))
    return sorted(out)


def config_classes(t: FpfType) -> list[tuple[NielsenClass, ...]]:
    """Nielsen classes grouped into orbits of negation."""
    seen = set()
    orbits = []
    for c in nielsen_classes(t):
        if c in seen:
            continue
        orbit = tuple(sorted({c, c.negate()}))
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


@dataclass(frozen=True)
class ExceptionalEntry:
    type: FpfType
    orbits: tuple[tuple[NielsenClass, ...], ...]

    @property
    def class_count(self) -> int:
        return sum(len(o) for o in self.orbits)


def exceptional_report(b_max: int) -> list[ExceptionalEntry]:
    out = []
    for t in enumerate_fpf(b_max):
        classes = nielsen_classes(t)
        if len(classes) > 1:
            out.append(ExceptionalEntry(t, tuple(config_classes(t))))
    return out


def generating_vector_for(t: FpfType, cls: NielsenClass):
    """A cyclic generating vector realizing ``cls`` (``a_1 -> 1`` when ``q > 0``)."""
    from .surface import cyclic_vector

    return cyclic_vector(t.d, t.q, cls.values)
