"""Orbifold surface groups, generating vectors and the homology of covers.

The orbifold group with signature ``(q | r_1..r_m)`` is presented as::

    < a_1..a_q, b_1..b_q, c_1..c_m | [a_1,b_1]...[a_q,b_q] c_1...c_m, c_j^{r_j} >

with ``[a, b] = a b a^-1 b^-1``.  Generators are numbered in that order.  A
generating vector sends them onto a finite group ``K``; the kernel is the
fundamental group of a closed surface, and conjugating by a lift of
``k in K`` gives an integer matrix on its first homology.

Words are lists of ``(generator, +1 | -1)`` pairs read left to right, and
group elements multiply left to right as well (``g * h`` means first ``g``
then ``h`` when both are read as words).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from math import gcd
from typing import Iterable, Sequence

from .abelian import FiniteAbelianGroup
from .linalg import (
    IntMatrix,
    Poly,
    poly_divmod,
    poly_mul,
    poly_pow,
    snf,
    xn_minus_one,
)

MAX_KERNEL_INDEX = 128

Word = list[tuple[int, int]]


class InvalidDataError(ValueError):
    """Input data is inconsistent (non-integral genus, bad relation, ...)."""


@dataclass(frozen=True)
class OrbifoldSignature:
    q: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "periods", tuple(int(r) for r in self.periods))
        if self.q < 0:
            raise ValueError("quotient genus must be >= 0")
        if any(r < 2 for r in self.periods):
            raise ValueError("periods must be >= 2")

    @property
    def m(self) -> int:
        return len(self.periods)

    @property
    def n_generators(self) -> int:
        return 2 * self.q + self.m

    def generator_names(self) -> list[str]:
        return ([f"a{i + 1}" for i in range(self.q)] + [f"b{i + 1}" for i in range(self.q)]
                + [f"c{j + 1}" for j in range(self.m)])

    def long_relator(self) -> Word:
        q = self.q
        w: Word = []
        for i in range(q):
            a, b = i, q + i
            w += [(a, 1), (b, 1), (a, -1), (b, -1)]
        w += [(2 * q + j, 1) for j in range(self.m)]
        return w

    def relators(self) -> list[Word]:
        out = [self.long_relator()]
        for j, r in enumerate(self.periods):
            out.append([(2 * self.q + j, 1)] * r)
        return out

    def orbifold_euler(self) -> Fraction:
        """``2q - 2 + sum(1 - 1/r)``; the cover of degree n has ``2b - 2 = n`` times this."""
        return 2 * self.q - 2 + sum((1 - Fraction(1, r) for r in self.periods), Fraction(0))

    def __str__(self) -> str:
        return f"({self.q}|" + ",".join(map(str, self.periods)) + ")"


class FiniteGroup:
    """A finite group as a multiplication table on ``0..n-1``.

    Abelian groups built with ``from_abelian`` remember their
    ``FiniteAbelianGroup`` and use coordinate tuples as labels.
    """

    def __init__(self, table: Sequence[Sequence[int]], identity: int = 0,
                 labels: Sequence[str] | None = None, name: str = "",
                 abelian: FiniteAbelianGroup | None = None, check: bool = True):
        n = len(table)
        if n == 0:
            raise ValueError("empty group")
        if n > MAX_KERNEL_INDEX:
            raise ValueError(f"group order {n} exceeds the supported cap {MAX_KERNEL_INDEX}")
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.identity = int(identity)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self.name = name
        self.abelian = abelian
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise ValueError("labels must be distinct and one per element")
        if check:
            self._verify()
        self.inverses = tuple(row.index(self.identity) for row in self.table)
        self._by_label = {lab: i for i, lab in enumerate(self.labels)}

    def _verify(self):
        n, t, e = len(self.table), self.table, self.identity
        for row in t:
            if len(row) != n or sorted(row) != list(range(n)):
                raise ValueError("multiplication table rows must be permutations")
        for i in range(n):
            if t[e][i] != i or t[i][e] != i:
                raise ValueError("identity index is not an identity")
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise ValueError("multiplication table is not associative")

    @classmethod
    def from_abelian(cls, group: FiniteAbelianGroup) -> "FiniteGroup":
        elems = [e.coords for e in group.elements()]
        index = {c: i for i, c in enumerate(elems)}
        ns = group.invariant_factors
        table = [[index[tuple((x + y) % n for x, y, n in zip(a, b, ns))] for b in elems] for a in elems]
        labels = [",".join(map(str, c)) for c in elems]
        return cls(table, index[(0,) * len(ns)], labels, name=group.label(), abelian=group, check=False)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls.from_abelian(FiniteAbelianGroup.cyclic(n))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def element(self, ref) -> int:
        """Resolve a label, a coordinate list (abelian groups) or an index."""
        if isinstance(ref, bool):
            raise TypeError("booleans are not group elements")
        if isinstance(ref, str):
            if ref in self._by_label:
                return self._by_label[ref]
            raise KeyError(f"no element labelled {ref!r} in {self.name or 'group'}")
        if isinstance(ref, (list, tuple)):
            if self.abelian is None:
                raise TypeError("coordinate references need an abelian group")
            coords = tuple(int(c) % n for c, n in zip(ref, self.abelian.invariant_factors))
            if len(ref) != len(self.abelian.invariant_factors):
                raise ValueError("wrong number of coordinates")
            return self._by_label[",".join(map(str, coords))]
        if isinstance(ref, int):
            if self.abelian is not None and len(self.abelian.invariant_factors) == 1:
                return self.element([ref])
            if 0 <= ref < self.order:
                return ref
            raise KeyError(f"element index {ref} out of range")
        raise TypeError(f"cannot interpret {ref!r} as a group element")

    def evaluate(self, word: Word, images: Sequence[int]) -> int:
        out = self.identity
        for g, s in word:
            x = images[g] if s > 0 else self.inv(images[g])
            out = self.table[out][x]
        return out

    def generated_subgroup(self, gens: Iterable[int]) -> set[int]:
        gens = list(gens)
        seen = {self.identity}
        todo = deque([self.identity])
        while todo:
            x = todo.popleft()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return seen

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


def load_group_table(name: str) -> FiniteGroup:
    """Load one of the bundled groups: ``SL2_3``, ``D4``, ``Q8``, ``D6``."""
    path = resources.files("kodaira") / "data" / "groups" / f"{name}.json"
    try:
        raw = json.loads(path.read_text())
    except FileNotFoundError:
        raise KeyError(f"no bundled group named {name!r}") from None
    return group_from_json(raw)


def group_from_json(raw: dict) -> FiniteGroup:
    if "abelian" in raw:
        return FiniteGroup.from_abelian(FiniteAbelianGroup(tuple(raw["abelian"])))
    if "bundled" in raw:
        return load_group_table(raw["bundled"])
    n = int(raw["order"])
    flat = raw["table"]
    if len(flat) != n * n:
        raise ValueError("flat multiplication table has the wrong length")
    table = [flat[i * n:(i + 1) * n] for i in range(n)]
    return FiniteGroup(table, raw.get("identity", 0), raw.get("labels"), name=raw.get("name", ""))


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True, eq=False)
class GeneratingVector:
    signature: OrbifoldSignature
    group: FiniteGroup
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    gammas: tuple[int, ...]

    @classmethod
    def build(cls, signature: OrbifoldSignature, group: FiniteGroup,
              alphas=(), betas=(), gammas=()) -> "GeneratingVector":
        return cls(signature, group,
                   tuple(group.element(a) for a in alphas),
                   tuple(group.element(b) for b in betas),
                   tuple(group.element(c) for c in gammas))

    @property
    def images(self) -> tuple[int, ...]:
        return self.alphas + self.betas + self.gammas

    @cached_property
    def report(self) -> ValidationReport:
        return validate(self)


def validate(vec: GeneratingVector) -> ValidationReport:
    sig, grp = vec.signature, vec.group
    probs = []
    if len(vec.alphas) != sig.q or len(vec.betas) != sig.q:
        probs.append(f"need {sig.q} alpha and beta images")
    if len(vec.gammas) != sig.m:
        probs.append(f"need {sig.m} gamma images")
    if probs:
        return ValidationReport(tuple(probs))
    if grp.evaluate(sig.long_relator(), vec.images) != grp.identity:
        probs.append("long relation does not hold")
    for j, (g, r) in enumerate(zip(vec.gammas, sig.periods)):
        o = grp.element_order(g)
        if o != r:
            probs.append(f"gamma {j + 1} has order {o}, expected {r}")
    if len(grp.generated_subgroup(vec.images)) != grp.order:
        probs.append("images do not generate the group")
    return ValidationReport(tuple(probs))


def cover_genus(sig: OrbifoldSignature, n: int, orders: Sequence[int] | None = None) -> int:
    """Genus ``b`` of the degree-``n`` cover with ``2b - 2 = n * chi_orb``."""
    if orders is not None and tuple(orders) != sig.periods:
        raise InvalidDataError(f"branch orders {tuple(orders)} do not match periods {sig.periods}")
    two_b_minus_two = n * sig.orbifold_euler()
    if two_b_minus_two.denominator != 1 or two_b_minus_two % 2:
        raise InvalidDataError(f"non-integral genus from {sig} and n={n}")
    b = int(two_b_minus_two) // 2 + 1
    if b < 0:
        raise InvalidDataError(f"negative genus from {sig} and n={n}")
    return b


# --- Reidemeister-Schreier ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class KernelPresentation:
    """Presentation of ``ker(rho)`` together with its abelianization.

    Cosets are the elements of the finite group.  ``schreier`` lists the
    non-tree pairs ``(coset, generator)``; ``relations`` has one row per
    rewritten relator.  The abelianization is ``Z^rank`` with coordinates
    ``(x @ smith.V)[smith.rank:]`` for a vector ``x`` over ``schreier``.
    """

    vector: GeneratingVector
    transversal: tuple[tuple[tuple[int, int], ...], ...]
    tree: frozenset[tuple[int, int]]
    schreier: tuple[tuple[int, int], ...]
    relations: IntMatrix
    smith: object = field(repr=False)

    @cached_property
    def _index(self) -> dict[tuple[int, int], int]:
        return {s: i for i, s in enumerate(self.schreier)}

    @property
    def rank(self) -> int:
        return len(self.schreier) - self.smith.rank

    def rewrite(self, word: Iterable[tuple[int, int]], start: int | None = None) -> list[int]:
        """Abelianized Reidemeister-Schreier rewrite of a word lying in the kernel."""
        grp = self.vector.group
        imgs = self.vector.images
        c = grp.identity if start is None else start
        out = [0] * len(self.schreier)
        idx = self._index
        for g, s in word:
            if s > 0:
                k = idx.get((c, g))
                if k is not None:
                    out[k] += 1
                c = grp.mul(c, imgs[g])
            else:
                c = grp.mul(c, grp.inv(imgs[g]))
                k = idx.get((c, g))
                if k is not None:
                    out[k] -= 1
        return out

    def project(self, x: Sequence[int]) -> tuple[int, ...]:
        y = IntMatrix(1, len(x), tuple(x)) @ self.smith.V
        return y.entries[self.smith.rank:]

    def schreier_word(self, k: int) -> Word:
        c, g = self.schreier[k]
        grp = self.vector.group
        d = grp.mul(c, self.vector.images[g])
        return list(self.transversal[c]) + [(g, 1)] + invert_word(self.transversal[d])

    def basis_representatives(self) -> list[tuple[int, ...]]:
        """Vectors over the Schreier generators mapping to the standard basis."""
        r = self.smith.rank
        return [self.smith.V_inv.row(r + j) for j in range(self.rank)]


def invert_word(word: Sequence[tuple[int, int]]) -> Word:
    return [(g, -s) for g, s in reversed(word)]


def kernel_presentation(vec: GeneratingVector) -> KernelPresentation:
    rep = validate(vec)
    if not rep.ok:
        raise InvalidDataError("invalid generating vector: " + "; ".join(rep.problems))
    grp, sig = vec.group, vec.signature
    imgs = vec.images
    ngen = sig.n_generators
    # BFS Schreier tree over positive edges in generator order
    transversal: dict[int, tuple[tuple[int, int], ...]] = {grp.identity: ()}
    tree = set()
    todo = deque([grp.identity])
    while todo:
        c = todo.popleft()
        for g in range(ngen):
            d = grp.mul(c, imgs[g])
            if d not in transversal:
                transversal[d] = transversal[c] + ((g, 1),)
                tree.add((c, g))
                todo.append(d)
    if len(transversal) != grp.order:
        raise InvalidDataError("generating vector is not surjective")
    schreier = tuple((c, g) for c in range(grp.order) for g in range(ngen) if (c, g) not in tree)
    kp = KernelPresentation(vec, tuple(transversal[c] for c in range(grp.order)), frozenset(tree),
                            schreier, IntMatrix.zeros(0, len(schreier)), None)
    rows = []
    for rel in sig.relators():
        for c in range(grp.order):
            rows.append(kp.rewrite(rel, start=c))
    rel_matrix = IntMatrix.from_rows(rows, len(schreier))
    dec = snf(rel_matrix, track_u=False)
    torsion = [d for d in dec.diagonal if d > 1]
    if torsion:
        raise InvalidDataError(f"abelianized kernel has torsion {torsion}")
    object.__setattr__(kp, "relations", rel_matrix)
    object.__setattr__(kp, "smith", dec)
    expected = 2 * cover_genus(sig, grp.order)
    if kp.rank != expected:
        raise InvalidDataError(f"abelianized kernel has rank {kp.rank}, expected {expected}")
    return kp


@dataclass(frozen=True, eq=False)
class HomologyAction:
    cover_genus: int
    matrices: dict[int, IntMatrix]

    @property
    def basis_size(self) -> int:
        return 2 * self.cover_genus


def homology_action(vec: GeneratingVector, k, presentation: KernelPresentation | None = None) -> IntMatrix:
    """Matrix of ``eta -> l eta l^-1`` on ``H_1`` of the cover, ``l`` a lift of ``k``.

    Acts on column vectors; ``k -> M_k`` is a homomorphism.
    """
    kp = presentation or kernel_presentation(vec)
    grp = vec.group
    try:
        k = grp.element(k)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidDataError(f"{k!r} is not an element of the group") from exc
    lift = list(kp.transversal[k])
    lift_inv = invert_word(lift)
    images = []
    for s in range(len(kp.schreier)):
        conj = lift + kp.schreier_word(s) + lift_inv
        images.append(kp.rewrite(conj))
    cols = []
    for rep in kp.basis_representatives():
        total = [0] * len(kp.schreier)
        for s, coef in enumerate(rep):
            if coef:
                for t, v in enumerate(images[s]):
                    if v:
                        total[t] += coef * v
        cols.append(kp.project(total))
    n = kp.rank
    return IntMatrix.from_rows(cols, n).T if n else IntMatrix.zeros(0, 0)


def homology_actions(vec: GeneratingVector, elements: Iterable | None = None) -> HomologyAction:
    kp = kernel_presentation(vec)
    elems = range(vec.group.order) if elements is None else [vec.group.element(e) for e in elements]
    return HomologyAction(kp.rank // 2, {k: homology_action(vec, k, kp) for k in elems})


def cyclic_subgroup_signature(vec: GeneratingVector, k) -> OrbifoldSignature:
    """Signature of the cover ``C -> C/<k>`` for the subgroup generated by ``k``.

    Over the ``j``-th branch point of ``C -> C/G`` the points of ``C`` are the
    cosets ``g <c_j>`` with stabilizers conjugate to ``<c_j>``.  Each orbit of
    ``<k>`` on them is a branch point of ``C -> C/<k>`` whose period is the
    size of the stabilizer in ``<k>``.
    """
    grp = vec.group
    k = grp.element(k)
    h = grp.generated_subgroup([k])
    d = len(h)
    periods = []
    for c in vec.gammas:
        sub = grp.generated_subgroup([c])
        cosets = {frozenset(grp.mul(g, s) for s in sub) for g in range(grp.order)}
        seen: set[frozenset] = set()
        for coset in cosets:
            if coset in seen:
                continue
            rep = next(iter(coset))
            orbit = {frozenset(grp.mul(grp.mul(x, rep), s) for s in sub) for x in h}
            seen |= orbit
            stab = d // len(orbit)
            if stab > 1:
                periods.append(stab)
    b = cover_genus(vec.signature, grp.order)
    # 2b - 2 = d (2q - 2 + sum(1 - 1/r))
    two_q = Fraction(2 * b - 2, d) + 2 - sum((1 - Fraction(1, r) for r in periods), Fraction(0))
    if two_q.denominator != 1 or two_q.numerator % 2:
        raise InvalidDataError("inconsistent subgroup signature")
    return OrbifoldSignature(two_q.numerator // 2, tuple(sorted(periods)))


def nielsen_charpoly(q: int, d: int, periods: Sequence[int]) -> Poly:
    """``(x^d-1)^(2q-2+m) (x-1)^2 / prod_j (x^(d/r_j) - 1)`` by exact division."""
    m = len(periods)
    e = 2 * q - 2 + m
    num = poly_mul(poly_pow(xn_minus_one(d), max(e, 0)), poly_pow((-1, 1), 2))
    den: Poly = poly_pow(xn_minus_one(d), max(-e, 0))
    for r in periods:
        if d % r:
            raise InvalidDataError(f"period {r} does not divide {d}")
        den = poly_mul(den, xn_minus_one(d // r))
    quot, rem = poly_divmod(num, den)
    if rem:
        raise InvalidDataError("Nielsen quotient is not a polynomial")
    return quot


def cyclic_vector(d: int, q: int, gamma_values: Sequence[int]) -> GeneratingVector:
    """Generating vector onto ``Z/d`` with ``a_1 -> 1`` and other handle generators trivial.

    With ``q = 0`` the gamma values alone must generate.
    """
    grp = FiniteGroup.cyclic(d)
    periods = tuple(d // gcd(d, a) for a in gamma_values)
    alphas = [1 % d] + [0] * (q - 1) if q else []
    return GeneratingVector.build(OrbifoldSignature(q, periods), grp, alphas, [0] * q, list(gamma_values))


def matrix_group_table(gens: Sequence[Sequence[Sequence[int]]], p: int):
    """Close a set of 2x2 matrices mod ``p`` under multiplication.

    Returns ``(elements, table)`` with the identity first.  Used to
    regenerate the bundled ``SL2_3`` table.
    """
    def mul(a, b):
        return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(2)) % p for j in range(2)) for i in range(2))

    ident = ((1, 0), (0, 1))
    gens = [tuple(tuple(x % p for x in row) for row in g) for g in gens]
    elems = [ident]
    seen = {ident}
    i = 0
    while i < len(elems):
        for g in gens:
            y = mul(elems[i], g)
            if y not in seen:
                seen.add(y)
                elems.append(y)
        i += 1
    index = {e: k for k, e in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return elems, table

