"""Exact integer linear algebra.

Everything here works over Python integers: Smith normal form with the
unimodular transforms, characteristic polynomials, and the cardinality of
the image of an integer map into a product of cyclic groups.  No floating
point is used anywhere.

Polynomials are tuples of integer coefficients in ascending order of degree,
so ``(1, -1, 1)`` is ``x^2 - x + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

Poly = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def block_diagonal(cls, blocks: Sequence["IntMatrix"]) -> "IntMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(out, cols)

    @classmethod
    def hstack(cls, mats: Sequence["IntMatrix"]) -> "IntMatrix":
        if not mats:
            raise ValueError("nothing to stack")
        rows = mats[0].rows
        if any(m.rows != rows for m in mats):
            raise ValueError("hstack needs equal row counts")
        return cls.from_rows(
            [[x for m in mats for x in m.row(i)] for i in range(rows)],
            sum(m.cols for m in mats),
        )

    @classmethod
    def vstack(cls, mats: Sequence["IntMatrix"]) -> "IntMatrix":
        if not mats:
            raise ValueError("nothing to stack")
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise ValueError("vstack needs equal column counts")
        return cls.from_rows([m.row(i) for m in mats for i in range(m.rows)], cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix.from_rows([self.col(j) for j in range(self.cols)], self.rows)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __rmul__(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.col(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in ocols)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows))

    def mod(self, n: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(a % n for a in self.entries))

    def det(self) -> int:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det(self.tolist())

    def _check_same_shape(self, other: "IntMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __str__(self) -> str:
        if not self.entries:
            return f"[{self.rows}x{self.cols} empty]"
        w = max(len(str(x)) for x in self.entries)
        return "\n".join("[" + " ".join(str(x).rjust(w) for x in self.row(i)) + "]" for i in range(self.rows))


def as_matrix(m: IntMatrix | Sequence[Sequence[int]]) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m)


def _bareiss_det(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# --- Smith normal form ------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal.

    ``V_inv`` is carried along because the cover-homology code needs the
    inverse column transform to pick representatives of a free basis.
    """

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    diagonal: tuple[int, ...]
    V_inv: IntMatrix = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def snf(m: IntMatrix | Sequence[Sequence[int]], *, track_u: bool = True) -> SmithDecomposition:
    """Smith normal form with transforms.

    Pivots are chosen as the nonzero entry of least absolute value, scanning
    row by row, so the decomposition is reproducible.  With
    ``track_u=False`` the left transform is skipped and ``U`` is returned as
    the identity placeholder; use this only when ``U`` is not needed.
    """
    m = as_matrix(m)
    nr, nc = m.rows, m.cols
    a = m.tolist()
    u = [[int(i == j) for j in range(nr)] for i in range(nr)] if track_u else None
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]
    vi = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            if u is not None:
                u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]
            vi[i], vi[j] = vi[j], vi[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        if k:
            rs, rd = a[src], a[dst]
            for c in range(nc):
                if rs[c]:
                    rd[c] += k * rs[c]
            if u is not None:
                us, ud = u[src], u[dst]
                for c in range(nr):
                    if us[c]:
                        ud[c] += k * us[c]

    def add_col(dst, src, k):
        # col_dst += k * col_src; inverse gets row_src -= k * row_dst
        if k:
            for row in a:
                if row[src]:
                    row[dst] += k * row[src]
            for row in v:
                if row[src]:
                    row[dst] += k * row[src]
            vd, vs = vi[dst], vi[src]
            for c in range(nc):
                if vd[c]:
                    vs[c] -= k * vd[c]

    t = 0
    for t in range(min(nr, nc) + 1):
        if t == min(nr, nc):
            break
        piv = _min_abs_position(a, t, t, nr, nc)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            p = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            best = None
            for i in range(t + 1, nr):
                if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                    best = (abs(a[i][t]), "r", i)
            for j in range(t + 1, nc):
                if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                    best = (abs(a[t][j]), "c", j)
            if best is not None:
                if best[1] == "r":
                    swap_rows(t, best[2])
                else:
                    swap_cols(t, best[2])
                continue
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]

    diag = tuple(a[i][i] for i in range(min(nr, nc)))
    U = IntMatrix.from_rows(u, nr) if u is not None else IntMatrix.identity(nr)
    return SmithDecomposition(
        U=U,
        S=IntMatrix.from_rows(a, nc),
        V=IntMatrix.from_rows(v, nc),
        diagonal=diag,
        V_inv=IntMatrix.from_rows(vi, nc),
    )


def _min_abs_position(a, r0, c0, nr, nc):
    best = None
    for i in range(r0, nr):
        row = a[i]
        for j in range(c0, nc):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best[1], best[2]
    return None if best is None else (best[1], best[2])


def invariant_factors(m: IntMatrix | Sequence[Sequence[int]]) -> tuple[int, ...]:
    return snf(m, track_u=False).diagonal


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a basis of the integer kernel ``{x : m x = 0}``."""
    dec = snf(m, track_u=False)
    r = dec.rank
    cols = [dec.V.col(j) for j in range(r, m.cols)]
    if not cols:
        return IntMatrix.zeros(m.cols, 0)
    return IntMatrix.from_rows(cols, m.cols).T


def lattice_index(basis: IntMatrix) -> int:
    """Index in ``Z^n`` of the lattice spanned by the columns of ``basis``.

    Raises ``ValueError`` when the span has lower rank (infinite index).
    """
    diag = invariant_factors(basis)
    if basis.rows and (len(diag) < basis.rows or any(d == 0 for d in diag)):
        raise ValueError("lattice does not have full rank")
    out = 1
    for d in diag:
        out *= d
    return out


# --- image of Z^c in a product of cyclic groups ------------------------------


def image_cardinality(maps: Iterable[tuple[IntMatrix, int, int] | tuple[IntMatrix, int]]) -> int:
    """Order of the image of ``Z^c -> (+)_j (Z/n_j)^{m_j}``, ``x -> (A_j x mod n_j)``.

    Each entry is ``(A_j, n_j)`` or ``(A_j, n_j, m_j)`` where ``m_j`` (when
    given) must equal the row count of ``A_j``.  The answer is the index of
    ``L = {x : A_j x = 0 mod n_j for all j}`` in ``Z^c``, found from the
    integer kernel of ``[A | -N]``.
    """
    blocks = []
    c = None
    for item in maps:
        a, n = as_matrix(item[0]), int(item[1])
        if len(item) > 2 and item[2] != a.rows:
            raise ValueError(f"multiplicity {item[2]} does not match {a.rows} rows")
        if n < 1:
            raise ValueError("moduli must be positive")
        if c is None:
            c = a.cols
        elif a.cols != c:
            raise ValueError("all maps must share the same column count")
        blocks.append((a, n))
    if c is None or c == 0:
        return 1
    blocks = [(a, n) for a, n in blocks if n > 1 and a.rows]
    if not blocks:
        return 1
    stacked = IntMatrix.vstack([a for a, _ in blocks])
    moduli = [n for a, n in blocks for _ in range(a.rows)]
    system = IntMatrix.hstack([stacked, -IntMatrix.diagonal(moduli)])
    ker = kernel_basis(system)
    proj = IntMatrix.from_rows([ker.row(i) for i in range(c)], ker.cols)
    return lattice_index(proj)


# --- characteristic polynomials ----------------------------------------------


def char_poly(m: IntMatrix | Sequence[Sequence[int]]) -> Poly:
    """``det(x I - M)`` as ascending integer coefficients (monic).

    Faddeev-LeVerrier; every division is exact for integer input.
    """
    m = as_matrix(m)
    if not m.is_square:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    a = m.tolist()
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        # M_k = A M_{k-1} + c_{n-k+1} I
        new = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            new[i][i] += c_prev
        mk = new
        tr = sum(sum(a[i][t] * mk[t][i] for t in range(n)) for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("inexact division in Faddeev-LeVerrier")
        coeffs[n - k] = q
    return tuple(coeffs)


# --- small polynomial toolkit ------------------------------------------------


def poly_trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_pow(p: Sequence[int], e: int) -> Poly:
    out: Poly = (1,)
    for _ in range(e):
        out = poly_mul(out, p)
    return out


def poly_divmod(p: Sequence[int], q: Sequence[int]) -> tuple[Poly, Poly]:
    """Division by a polynomial with leading coefficient +-1."""
    p, q = list(poly_trim(p)), poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    lead = q[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must have unit leading coefficient")
    if len(p) < len(q):
        return (), poly_trim(p)
    quot = [0] * (len(p) - len(q) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = p[k + len(q) - 1] * lead
        quot[k] = c
        if c:
            for j, b in enumerate(q):
                p[k + j] -= c * b
    return poly_trim(quot), poly_trim(p)


def poly_eval(p: Sequence[int], x: int) -> int:
    out = 0
    for c in reversed(p):
        out = out * x + c
    return out


def xn_minus_one(n: int) -> Poly:
    return (-1,) + (0,) * (n - 1) + (1,)


def poly_str(p: Sequence[int], var: str = "x") -> str:
    p = poly_trim(p)
    if not p:
        return "0"
    terms = []
    for deg in range(len(p) - 1, -1, -1):
        c = p[deg]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if deg == 0:
            body = str(a)
        else:
            coef = "" if a == 1 else str(a)
            body = coef + (var if deg == 1 else f"{var}^{deg}")
        terms.append((sign, body))
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b if a and b else 0
