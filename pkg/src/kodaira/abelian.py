"""Finite abelian groups given by a list of cyclic factors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

from .linalg import lcm, snf


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z/n_1 + ... + Z/n_k``.  The empty list is the trivial group.

    Factors are kept in the order given; ``normalized()`` returns the
    invariant-factor form where each factor divides the next.
    """

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(int(n) for n in self.invariant_factors))
        for n in self.invariant_factors:
            if n < 2:
                raise ValueError(f"cyclic factors must be >= 2, got {n}")

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls(() if n == 1 else (n,))

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        """Minimal number of generators."""
        return len(self.normalized().invariant_factors)

    def normalized(self) -> "FiniteAbelianGroup":
        diag = snf([[n if i == j else 0 for j in range(len(self.invariant_factors))]
                    for i, n in enumerate(self.invariant_factors)], track_u=False).diagonal
        return FiniteAbelianGroup(tuple(d for d in diag if d > 1))

    def is_cyclic(self) -> bool:
        return self.rank <= 1

    def isomorphic(self, other: "FiniteAbelianGroup") -> bool:
        return self.normalized() == other.normalized()

    def element(self, coords: Sequence[int]) -> "AbelianElement":
        return AbelianElement(self, tuple(coords))

    def zero(self) -> "AbelianElement":
        return AbelianElement(self, (0,) * len(self.invariant_factors))

    def elements(self) -> Iterator["AbelianElement"]:
        for coords in product(*(range(n) for n in self.invariant_factors)):
            yield AbelianElement(self, coords)

    def label(self) -> str:
        if not self.invariant_factors:
            return "1"
        return "x".join(f"Z/{n}" for n in self.invariant_factors)

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class AbelianElement:
    group: FiniteAbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        ns = self.group.invariant_factors
        if len(self.coords) != len(ns):
            raise ValueError(f"element of {self.group} needs {len(ns)} coordinates")
        object.__setattr__(self, "coords", tuple(int(c) % n for c, n in zip(self.coords, ns)))

    def _check(self, other: "AbelianElement"):
        if other.group != self.group:
            raise ValueError("elements live in different groups")

    def __add__(self, other: "AbelianElement") -> "AbelianElement":
        self._check(other)
        return AbelianElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AbelianElement") -> "AbelianElement":
        self._check(other)
        return AbelianElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AbelianElement":
        return AbelianElement(self.group, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "AbelianElement":
        return AbelianElement(self.group, tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + ")"


def element_order(g: AbelianElement) -> int:
    return reduce(lcm, (n // gcd(n, c) for n, c in zip(g.group.invariant_factors, g.coords)), 1)


def element_sum(elems: Iterable[AbelianElement], group: FiniteAbelianGroup) -> AbelianElement:
    out = group.zero()
    for e in elems:
        out = out + e
    return out


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def abelian_groups_of_order(n: int) -> list[FiniteAbelianGroup]:
    """All abelian groups of order ``n`` up to isomorphism, in invariant-factor form.

    Ordered with the cyclic group first.
    """
    if n < 1:
        raise ValueError("order must be positive")
    per_prime = []
    for p, e in sorted(_factorize(n).items()):
        per_prime.append([tuple(p ** k for k in part) for part in _partitions(e)])
    groups = []
    for choice in product(*per_prime):
        factors = [f for part in choice for f in part]
        groups.append(FiniteAbelianGroup(tuple(factors)).normalized())
    groups.sort(key=lambda g: (len(g.invariant_factors), g.invariant_factors))
    return groups
