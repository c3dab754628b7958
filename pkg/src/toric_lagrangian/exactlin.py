"""Exact rational and integer linear algebra.

Everything here works on :class:`fractions.Fraction` and Python integers, so
no result is ever rounded. The routines are small and direct: matrices in
this package have at most a dozen columns.

Conventions
-----------
* Gauss-Jordan elimination always takes the leftmost available pivot column
  and, within it, the first row with a nonzero entry. Outputs built on top of
  it (particular solutions, kernel bases) are therefore deterministic.
* Lattices are given by the *rows* of a basis matrix and canonicalised by
  the row-style Hermite normal form (upper echelon, positive pivots, entries
  above a pivot reduced into ``[0, pivot)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import RankDeficiencyError

Rational = Fraction

__all__ = [
    "Rational",
    "RatMatrix",
    "IntLatticeBasis",
    "ConeResult",
    "as_rational",
    "rref",
    "rank",
    "det",
    "inverse",
    "solve_linear",
    "rational_kernel_basis",
    "integer_kernel_basis",
    "hnf",
    "rational_lattice",
    "dual_lattice_basis",
    "cone_feasible",
]


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction; strings use ``"p"``/``"p/q"`` syntax."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        return Fraction(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    # numpy integer scalars
    return Fraction(int(value))


class RatMatrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("_rows", "ncols")

    def __init__(self, rows: Iterable[Iterable] = (), ncols: int | None = None):
        data = tuple(tuple(as_rational(v) for v in r) for r in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for r in data:
            if len(r) != ncols:
                raise ValueError(f"row of length {len(r)} in a matrix with {ncols} columns")
        self._rows = data
        self.ncols = ncols

    @classmethod
    def coerce(cls, value, ncols: int | None = None) -> "RatMatrix":
        if isinstance(value, cls):
            return value
        return cls(value, ncols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(([int(i == j) for j in range(n)] for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self._rows), self.ncols)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Entries in row-major order."""
        return tuple(v for r in self._rows for v in r)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.columns(), self.nrows)

    def select_columns(self, idx: Sequence[int]) -> "RatMatrix":
        return RatMatrix((tuple(r[j] for j in idx) for r in self._rows), len(idx))

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        return RatMatrix(self._rows + other._rows, self.ncols)

    def matvec(self, x: Sequence) -> tuple[Fraction, ...]:
        if len(x) != self.ncols:
            raise ValueError("vector length does not match column count")
        x = [as_rational(v) for v in x]
        return tuple(sum((a * b for a, b in zip(r, x)), Fraction(0)) for r in self._rows)

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if other.nrows != self.ncols:
                raise ValueError("inner dimensions differ")
            cols = other.columns()
            return RatMatrix(
                ([sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self._rows),
                other.ncols,
            )
        return self.matvec(other)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.ncols, self._rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self._rows)
        return f"RatMatrix([{body}], ncols={self.ncols})"


# ---------------------------------------------------------------------------
# Gauss-Jordan over Q


def rref(A, augment: Sequence | None = None):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``rows`` is a list of Fraction lists
    (including the augmented column when ``augment`` is given) and
    ``pivots`` the pivot columns. Pivots are never taken in the augmented
    column, so a pivot equal to ``ncols`` never appears; inconsistency shows
    up as a zero row with a nonzero augmented entry.
    """
    A = RatMatrix.coerce(A)
    rows = [list(r) for r in A.rows]
    if augment is not None:
        if len(augment) != A.nrows:
            raise ValueError("rhs length must equal the number of rows")
        for r, v in zip(rows, augment):
            r.append(as_rational(v))
    pivots = []
    r = 0
    for c in range(A.ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(A) -> int:
    A = RatMatrix.coerce(A)
    if A.nrows == 0 or A.ncols == 0:
        return 0
    return len(rref(A)[1])


def det(A) -> Fraction:
    """Determinant of a square matrix (1 for the empty matrix)."""
    A = RatMatrix.coerce(A, 0 if not A else None)
    if A.nrows != A.ncols:
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in A.rows]
    n = len(rows)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        piv = rows[c][c]
        result *= piv
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / piv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result


def inverse(A) -> RatMatrix:
    A = RatMatrix.coerce(A)
    n = A.nrows
    if n != A.ncols:
        raise ValueError("inverse of a non-square matrix")
    aug = RatMatrix((list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(A.rows)), 2 * n)
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise RankDeficiencyError("matrix is singular")
    return RatMatrix((r[n:] for r in rows), n)


def solve_linear(A, rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Some ``x`` with ``A x = rhs``, or ``None`` when the system is inconsistent.

    The returned solution sets every free variable to zero, e.g. ``[[1, 1]] x =
    [2]`` gives ``(2, 0)``.
    """
    A = RatMatrix.coerce(A)
    if len(rhs) != A.nrows:
        raise ValueError("rhs length must equal the number of rows")
    rows, pivots = rref(A, rhs)
    for r in rows[len(pivots):]:
        if r[-1] != 0:
            return None
    x = [Fraction(0)] * A.ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return tuple(x)


def rational_kernel_basis(A) -> list[tuple[Fraction, ...]]:
    """Basis of ``{y : A y = 0}``, one vector per free column in ascending order."""
    A = RatMatrix.coerce(A)
    rows, pivots = rref(A)
    pivot_set = set(pivots)
    basis = []
    for f in range(A.ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * A.ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# Integer lattices


@dataclass(frozen=True)
class IntLatticeBasis:
    """Lattice ``(1/denominator) * span_Z(basis)`` inside ``Q^dim``.

    ``basis`` is an integer matrix in Hermite normal form (rows are the basis
    vectors). ``covolume`` is the absolute determinant of the scaled basis
    when the lattice has full rank and ``None`` otherwise.
    """

    dim: int
    basis: tuple[tuple[int, ...], ...]
    covolume: Fraction | int | None
    denominator: int = 1

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_full_rank(self) -> bool:
        return len(self.basis) == self.dim

    def rational_basis(self) -> tuple[tuple[Fraction, ...], ...]:
        d = self.denominator
        return tuple(tuple(Fraction(v, d) for v in row) for row in self.basis)

    def contains(self, vector: Sequence) -> bool:
        """Membership test for a rational vector."""
        if len(vector) != self.dim:
            raise ValueError("vector has the wrong length")
        if not self.basis:
            return all(as_rational(v) == 0 for v in vector)
        B = RatMatrix(self.rational_basis(), self.dim).transpose()
        coeffs = solve_linear(B, list(vector))
        return coeffs is not None and all(c.denominator == 1 for c in coeffs)


def _integer_echelon(rows: list[list[int]], upto: int) -> tuple[list[list[int]], list[int]]:
    """Row echelon form over Z in the first ``upto`` columns (positive pivots).

    Only unimodular row operations are used, so extra trailing columns record
    the transformation when the caller appends an identity block.
    """
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(upto):
        if r == len(rows):
            break
        found = False
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if not nz:
                break
            found = True
            p = min(nz, key=lambda i: (abs(rows[i][c]), i))
            rows[r], rows[p] = rows[p], rows[r]
            clean = True
            for i in range(r + 1, len(rows)):
                if rows[i][c] != 0:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][c] != 0:
                        clean = False
            if clean:
                break
        if not found:
            continue
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
        pivots.append(c)
        r += 1
    return rows, pivots


def _as_int_rows(rows) -> list[list[int]]:
    out = []
    for r in rows:
        ints = []
        for v in r:
            q = as_rational(v)
            if q.denominator != 1:
                raise ValueError(f"non-integer entry {q} in an integer lattice")
            ints.append(q.numerator)
        out.append(ints)
    return out


def hnf(rows: Sequence[Sequence[int]], dim: int | None = None) -> IntLatticeBasis:
    """Hermite normal form basis of the integer lattice spanned by ``rows``.

    >>> hnf([(2, 0), (0, 2), (1, 1)]).basis
    ((1, 1), (0, 2))
    """
    rows = _as_int_rows(rows)
    if dim is None:
        if not rows:
            raise ValueError("dim is required when no rows are given")
        dim = len(rows[0])
    if any(len(r) != dim for r in rows):
        raise ValueError("all rows must have length dim")
    ech, pivots = _integer_echelon(rows, dim)
    ech = ech[: len(pivots)]
    for i, c in enumerate(pivots):
        for j in range(i):
            q = ech[j][c] // ech[i][c]
            if q:
                ech[j] = [a - q * b for a, b in zip(ech[j], ech[i])]
    covolume = None
    if len(pivots) == dim:
        covolume = 1
        for i, c in enumerate(pivots):
            covolume *= ech[i][c]
    return IntLatticeBasis(dim=dim, basis=tuple(tuple(r) for r in ech), covolume=covolume)


def rational_lattice(vectors: Sequence[Sequence], dim: int) -> IntLatticeBasis:
    """Lattice spanned by rational vectors.

    Denominators are cleared by their global lcm ``D``; the integer HNF of
    ``D * vectors`` is returned with ``denominator = D``.
    """
    vecs = [[as_rational(v) for v in vec] for vec in vectors]
    if any(len(v) != dim for v in vecs):
        raise ValueError("all vectors must have length dim")
    D = 1
    for vec in vecs:
        for q in vec:
            D = lcm(D, q.denominator)
    scaled = [[(q * D).numerator for q in vec] for vec in vecs]
    lat = hnf(scaled, dim)
    cov = lat.covolume
    if cov is not None:
        cov = Fraction(cov, D**dim)
        if cov.denominator == 1:
            cov = cov.numerator
    return IntLatticeBasis(dim=dim, basis=lat.basis, covolume=cov, denominator=D)


def integer_kernel_basis(A) -> IntLatticeBasis:
    """Saturated integer kernel ``{y in Z^cols : A y = 0}`` in Hermite normal form.

    Rows of ``A`` are scaled to integers, then ``A^T`` augmented by the
    identity is brought to echelon form with unimodular row operations. The
    identity part of every row whose ``A^T`` part vanishes is a kernel vector,
    and together they form a basis of the full integer kernel (the transform
    is unimodular, so nothing of finite index is lost).
    """
    A = RatMatrix.coerce(A)
    m = A.ncols
    int_rows = []
    for r in A.rows:
        D = 1
        for q in r:
            D = lcm(D, q.denominator)
        int_rows.append([(q * D).numerator for q in r])
    k = len(int_rows)
    aug = [[int_rows[i][j] for i in range(k)] + [int(j == t) for t in range(m)] for j in range(m)]
    ech, pivots = _integer_echelon(aug, k)
    kernel = [r[k:] for r in ech[len(pivots):]]
    return hnf(kernel, m)


def dual_lattice_basis(B) -> tuple[tuple[Fraction, ...], ...]:
    """Basis of the dual lattice ``{x : <x, l> in Z for all l}``.

    ``B`` is an :class:`IntLatticeBasis` or a sequence of rational row
    vectors. The returned rows ``d_i`` satisfy ``<b_i, d_j> = [i == j]``.
    """
    if isinstance(B, IntLatticeBasis):
        dim = B.dim
        vecs = B.rational_basis()
    else:
        vecs = tuple(tuple(as_rational(v) for v in r) for r in B)
        dim = len(vecs[0]) if vecs else 0
    if len(vecs) != dim or any(len(v) != dim for v in vecs):
        raise RankDeficiencyError(f"{len(vecs)} basis vectors in dimension {dim}; need a square basis")
    if dim == 0:
        return ()
    M = RatMatrix(vecs, dim)
    if det(M) == 0:
        raise RankDeficiencyError("basis vectors are linearly dependent")
    return inverse(M).transpose().rows


# ---------------------------------------------------------------------------
# Exact LP feasibility


@dataclass(frozen=True)
class ConeResult:
    """Outcome of :func:`cone_feasible`; truthy iff feasible."""

    feasible: bool
    witness: tuple[Fraction, ...] | None

    def __bool__(self):
        return self.feasible


def cone_feasible(A, rhs: Sequence) -> ConeResult:
    """Decide whether ``A y = rhs`` has a solution ``y >= 0``.

    Phase one of the simplex method over the rationals: one artificial
    variable per row, minimise their sum, Bland's rule for both the entering
    and leaving choice (so the method terminates on degenerate input).
    """
    A = RatMatrix.coerce(A)
    k, m = A.shape
    if len(rhs) != k:
        raise ValueError("rhs length must equal the number of rows")
    b = [as_rational(v) for v in rhs]
    if k == 0:
        return ConeResult(True, (Fraction(0),) * m)

    width = m + k
    T = []
    for i, (row, bi) in enumerate(zip(A.rows, b)):
        s = -1 if bi < 0 else 1
        T.append([s * v for v in row] + [Fraction(int(t == i)) for t in range(k)] + [s * bi])
    basis = [m + i for i in range(k)]
    # reduced costs for min sum(artificials); last entry holds -objective
    d = [-sum((T[i][j] for i in range(k)), Fraction(0)) for j in range(m)] + [Fraction(0)] * k
    d.append(-sum((T[i][-1] for i in range(k)), Fraction(0)))

    while True:
        enter = next((j for j in range(width) if d[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(k):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        # phase-one objective is bounded below by zero
        assert leave is not None
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(k):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * p for a, p in zip(T[i], T[leave])]
        f = d[enter]
        d = [a - f * p for a, p in zip(d, T[leave])]
        basis[leave] = enter

    if d[-1] != 0:
        return ConeResult(False, None)
    y = [Fraction(0)] * m
    for i, j in enumerate(basis):
        if j < m:
            y[j] = T[i][-1]
    return ConeResult(True, tuple(y))
