"""Abelian monodromy: extension obstruction, stabilizer index, minimal pullback.

Each branch component ``D_i`` contributes a matrix ``T_i`` (``2f x 2b``) that
pushes a loop on ``B`` to ``H_1(F)`` through the component, plus its weight
``g_i`` in the abelian group ``G``.  A loop ``alpha`` changes the relative
class of the monodromy by ``iota(alpha) = sum_i T_i alpha (x) g_i``.
Matrices act on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .abelian import AbelianElement, FiniteAbelianGroup, element_order
from .fibration import FibrationComponent, InvariantRow, VirtualFibration, realized_invariants
from .linalg import IntMatrix, image_cardinality, kernel_basis, lcm, snf
from .surface import (
    FiniteGroup,
    GeneratingVector,
    InvalidDataError,
    OrbifoldSignature,
    kernel_presentation,
)


@dataclass(frozen=True)
class ComponentAction:
    transfer_push: IntMatrix
    weight: AbelianElement
    e: int = 1
    r: int | None = None
    d: int = 1

    def __post_init__(self):
        if self.r is None:
            object.__setattr__(self, "r", element_order(self.weight))
        elif element_order(self.weight) != self.r:
            raise InvalidDataError(
                f"weight {self.weight} has order {element_order(self.weight)}, expected r={self.r}")


@dataclass(frozen=True)
class MonodromyProblem:
    b: int
    f: int
    group: FiniteAbelianGroup
    components: tuple[ComponentAction, ...]
    etale_both_ways: bool = False

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise InvalidDataError("a monodromy problem needs at least one component")
        for i, c in enumerate(self.components):
            if c.transfer_push.shape != (2 * self.f, 2 * self.b):
                raise InvalidDataError(
                    f"component {i}: matrix is {c.transfer_push.shape}, expected {(2 * self.f, 2 * self.b)}")
            if c.weight.group != self.group:
                raise InvalidDataError(f"component {i}: weight is not in {self.group}")

    @cached_property
    def fibration(self) -> VirtualFibration:
        return VirtualFibration(self.b, self.f, self.group,
                                tuple(FibrationComponent(c.d, c.e, c.r, c.weight) for c in self.components),
                                self.etale_both_ways)

    def iota_blocks(self) -> list[tuple[IntMatrix, int]]:
        """Per cyclic factor ``n_j``: ``A_j = sum_i coord_j(g_i) T_i`` with modulus ``n_j``."""
        out = []
        for j, n in enumerate(self.group.invariant_factors):
            a = IntMatrix.zeros(2 * self.f, 2 * self.b)
            for c in self.components:
                k = c.weight.coords[j]
                if k:
                    a = a + k * c.transfer_push
            out.append((a, n))
        return out

    def iota(self, alpha: Sequence[int]) -> tuple[AbelianElement, ...]:
        """``iota(alpha)`` as ``2f`` coefficients in ``G``."""
        if len(alpha) != 2 * self.b:
            raise ValueError(f"loop needs {2 * self.b} coordinates")
        cols = [c.transfer_push.apply(alpha) for c in self.components]
        out = []
        for k in range(2 * self.f):
            s = self.group.zero()
            for c, v in zip(self.components, cols):
                s = s + v[k] * c.weight
            out.append(s)
        return tuple(out)


@dataclass(frozen=True)
class RelativeClass:
    """Relative class: ``2f`` coefficients on ``H_1(F)`` plus one boundary coefficient per component.

    The boundary of component ``i`` is ``(sum_j x_ij) (x) boundary[i]``; the
    individual punctures are never listed.
    """

    free_part: tuple[AbelianElement, ...]
    boundary: tuple[AbelianElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "free_part", tuple(self.free_part))
        object.__setattr__(self, "boundary", tuple(self.boundary))


@dataclass(frozen=True)
class RealizationReport:
    obstruction: AbelianElement
    obstruction_order: int
    stabilizer_index: int
    minimal_degree: int
    realized: InvariantRow

    def __post_init__(self):
        if self.minimal_degree != lcm(self.obstruction_order, self.stabilizer_index):
            raise InvalidDataError("minimal degree is not lcm(order, index)")


def obstruction(p: MonodromyProblem) -> AbelianElement:
    out = p.group.zero()
    for c in p.components:
        out = out + c.e * c.weight
    return out


def stabilizer_index(p: MonodromyProblem) -> int:
    blocks = p.iota_blocks()
    if not blocks:
        return 1
    return image_cardinality(blocks)


def minimal_pullback_degree(p: MonodromyProblem) -> int:
    return lcm(element_order(obstruction(p)), stabilizer_index(p))


def realize(p: MonodromyProblem) -> RealizationReport:
    o = obstruction(p)
    order = element_order(o)
    idx = stabilizer_index(p)
    deg = lcm(order, idx)
    return RealizationReport(o, order, idx, deg, realized_invariants(p.fibration, deg))


def monodromy_class(p: MonodromyProblem, free_part: Sequence[AbelianElement] | None = None) -> RelativeClass:
    """A relative class whose boundary carries the problem's own weights."""
    if free_part is None:
        free_part = [p.group.zero()] * (2 * p.f)
    return RelativeClass(tuple(free_part), tuple(c.weight for c in p.components))


def apply_monodromy(p: MonodromyProblem, theta: RelativeClass, alpha: Sequence[int]) -> RelativeClass:
    """Action of the loop ``alpha`` (coordinates in ``H_1(B)``) on ``theta``.

    ``free_part += sum_i T_i alpha (x) h_i`` where ``h_i`` is the boundary
    coefficient of ``theta`` on component ``i``.  The boundary is unchanged.
    """
    if len(theta.boundary) != len(p.components):
        raise InvalidDataError(
            f"class has {len(theta.boundary)} boundary coefficients, problem has {len(p.components)} components")
    if len(theta.free_part) != 2 * p.f:
        raise InvalidDataError(f"free part needs {2 * p.f} coefficients")
    if any(h.group != p.group for h in theta.boundary + theta.free_part):
        raise InvalidDataError("class coefficients are not in the problem's group")
    if len(alpha) != 2 * p.b:
        raise ValueError(f"loop needs {2 * p.b} coordinates")
    free = list(theta.free_part)
    for c, h in zip(p.components, theta.boundary):
        v = c.transfer_push.apply(alpha)
        for k in range(2 * p.f):
            if v[k]:
                free[k] = free[k] + v[k] * h
    return RelativeClass(tuple(free), theta.boundary)


def stabilizer_lattice(p: MonodromyProblem) -> IntMatrix:
    """Columns span ``ker iota`` inside ``Z^{2b}``."""
    blocks = [(a, n) for a, n in p.iota_blocks() if n > 1]
    c = 2 * p.b
    if not blocks:
        return IntMatrix.identity(c)
    stacked = IntMatrix.vstack([a for a, _ in blocks])
    moduli = [n for a, n in blocks for _ in range(a.rows)]
    ker = kernel_basis(IntMatrix.hstack([stacked, -IntMatrix.diagonal(moduli)]))
    proj = IntMatrix.from_rows([ker.row(i) for i in range(c)], ker.cols)
    # reduce the spanning set to a basis via column operations
    dec = snf(proj.T, track_u=False)
    # rows of S V^-1 span the same row space as proj.T
    basis_rows = [[dec.diagonal[i] * x for x in dec.V_inv.row(i)] for i in range(dec.rank)]
    return IntMatrix.from_rows(basis_rows, c).T


def pullback_problem(p: MonodromyProblem, deg: int | None = None) -> MonodromyProblem:
    """The monodromy problem on an abelian cover ``B' -> B`` of degree ``deg``.

    The cover corresponds to a sublattice ``L`` of ``ker iota`` with index
    ``deg`` (``deg`` defaults to the minimal pullback degree and must be a
    multiple of the stabilizer index).  The homology of ``B'`` and its push
    forward to ``B`` are computed from a generating vector of the surface
    group onto ``Z^{2b}/L``; the new transfer matrices are ``T_i`` composed
    with that push forward and every ``e_i`` is multiplied by ``deg``.
    """
    idx = stabilizer_index(p)
    deg = minimal_pullback_degree(p) if deg is None else deg
    if deg < 1 or deg % idx:
        raise ValueError(f"degree {deg} is not a multiple of the stabilizer index {idx}")
    basis = stabilizer_lattice(p)
    cols = [list(basis.col(j)) for j in range(basis.cols)]
    cols[0] = [x * (deg // idx) for x in cols[0]]
    sub = IntMatrix.from_rows(cols, 2 * p.b).T
    push = _cover_pushforward(p.b, sub)
    comps = tuple(ComponentAction(c.transfer_push @ push, c.weight, c.e * deg, c.r, c.d) for c in p.components)
    return MonodromyProblem(deg * (p.b - 1) + 1, p.f, p.group, comps, p.etale_both_ways)


def _cover_pushforward(b: int, sub: IntMatrix) -> IntMatrix:
    """``H_1(B') -> H_1(B) = Z^{2b}`` for the abelian cover with ``pi_1(B')`` mapping onto ``sub``."""
    dec = snf(sub)
    keep = [i for i, d in enumerate(dec.diagonal) if d > 1]
    quotient = FiniteAbelianGroup(tuple(dec.diagonal[i] for i in keep))
    grp = FiniteGroup.from_abelian(quotient)
    # U sub V = S, so x lies in sub iff (U x)_i = 0 mod s_i
    w = dec.U
    images = [grp.element([w.row(i)[g] for i in keep]) for g in range(2 * b)]
    sig = OrbifoldSignature(b, ())
    vec = GeneratingVector(sig, grp, tuple(images[:b]), tuple(images[b:]), ())
    kp = kernel_presentation(vec)
    # the Schreier generator (c, g) is the loop t_c g t_{cg}^-1
    letters = []
    for s in range(len(kp.schreier)):
        v = [0] * (2 * b)
        for g, sign in kp.schreier_word(s):
            v[g] += sign
        letters.append(v)
    cols = []
    for rep in kp.basis_representatives():
        v = [0] * (2 * b)
        for s, coef in enumerate(rep):
            if coef:
                for i, x in enumerate(letters[s]):
                    v[i] += coef * x
        cols.append(v)
    return IntMatrix.from_rows(cols, 2 * b).T

