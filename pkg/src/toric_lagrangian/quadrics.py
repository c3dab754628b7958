"""Systems of Hermitian quadrics and their admissibility conditions.

A system with coefficient columns ``gamma_1..gamma_m`` (in ``Q^k``) and right
hand side ``rhs`` describes

    Z = { z in C^m : sum_k gamma_k |z_k|^2 = rhs }.

It is admissible when

(a) ``rhs`` lies in the cone spanned by the columns,
(b) ``rhs`` is not in the cone of any fewer than ``k`` columns,
(c) the columns span a full-rank lattice ``L`` in ``R^k``.

Systems with ``k = 0`` quadrics are allowed; they describe all of ``C^m`` and
pass every check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import exactlin
from .exactlin import IntLatticeBasis, RatMatrix, as_rational
from .errors import ValidationError

__all__ = [
    "QuadricSystem",
    "LatticeData",
    "ConditionResult",
    "ValidationVerdict",
    "check_condition_a",
    "check_condition_b",
    "check_condition_c",
    "validate",
    "require_valid",
    "stack",
]


@dataclass(frozen=True)
class QuadricSystem:
    m: int
    coeffs: RatMatrix
    rhs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = RatMatrix.coerce(self.coeffs, self.m)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "rhs", tuple(as_rational(v) for v in self.rhs))
        if coeffs.ncols != self.m:
            raise ValueError(f"coefficient matrix has {coeffs.ncols} columns, expected m={self.m}")
        if len(self.rhs) != coeffs.nrows:
            raise ValueError("rhs length must equal the number of quadrics")
        if coeffs.nrows > self.m:
            raise ValueError("more quadrics than coordinates")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], rhs: Sequence, m: int | None = None) -> "QuadricSystem":
        if m is None:
            if not rows:
                raise ValueError("m is required for an empty system")
            m = len(rows[0])
        return cls(m, RatMatrix(rows, m), tuple(rhs))

    @classmethod
    def empty(cls, m: int) -> "QuadricSystem":
        return cls(m, RatMatrix((), m), ())

    @property
    def num_quadrics(self) -> int:
        return self.coeffs.nrows

    @property
    def n(self) -> int:
        """Dimension of the associated polyhedron, ``m - num_quadrics``."""
        return self.m - self.coeffs.nrows

    @property
    def columns(self) -> list[tuple[Fraction, ...]]:
        return self.coeffs.columns()

    def permute_rows(self, order: Sequence[int]) -> "QuadricSystem":
        rows = self.coeffs.rows
        return QuadricSystem(self.m, RatMatrix((rows[i] for i in order), self.m), tuple(self.rhs[i] for i in order))


@dataclass(frozen=True)
class ConditionResult:
    """Pass/fail of one condition with its supporting data.

    ``witness`` is a nonnegative solution for (a); ``subset`` a violating
    column subset (0-based) for (b); ``rank`` and ``lattice`` belong to (c).
    """

    passed: bool
    witness: tuple[Fraction, ...] | None = None
    subset: tuple[int, ...] | None = None
    rank: int | None = None
    lattice: "LatticeData | None" = None

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class LatticeData:
    """The lattice ``L`` of the columns, its dual and the associated tori.

    ``T = R^k / L*`` has rank ``torus_rank`` and ``D = (1/2 L*) / L*`` has
    ``two_group_order = 2**torus_rank`` elements.
    """

    lattice_L: IntLatticeBasis
    dual_basis: tuple[tuple[Fraction, ...], ...]
    torus_rank: int
    two_group_order: int


@dataclass(frozen=True)
class ValidationVerdict:
    cond_a: ConditionResult
    cond_b: ConditionResult
    cond_c: ConditionResult
    smooth_dim_Z: int | None

    @property
    def passed(self) -> bool:
        return self.smooth_dim_Z is not None

    def failed_conditions(self) -> list[str]:
        return [name for name, c in (("a", self.cond_a), ("b", self.cond_b), ("c", self.cond_c)) if not c.passed]

    def __bool__(self):
        return self.passed


def check_condition_a(sys: QuadricSystem) -> ConditionResult:
    res = exactlin.cone_feasible(sys.coeffs, sys.rhs)
    return ConditionResult(res.feasible, witness=res.witness)


def check_condition_b(sys: QuadricSystem) -> ConditionResult:
    """Check that ``rhs`` needs at least ``k`` columns to be generated.

    Only subsets of size ``k - 1`` are tried. This is enough: the cone of a
    subset is contained in the cone of any superset, so if ``rhs`` lies in the
    cone of some ``p < k`` columns it also lies in the cone of every
    ``(k-1)``-subset containing them. When ``m < k - 1`` the single subset of
    all columns plays that role. For ``k >= 1`` and ``rhs = 0`` the empty
    subset already generates ``rhs``, so the check fails.
    """
    k = sys.num_quadrics
    if k == 0:
        return ConditionResult(True)
    size = min(k - 1, sys.m)
    for subset in combinations(range(sys.m), size):
        if exactlin.cone_feasible(sys.coeffs.select_columns(subset), sys.rhs):
            return ConditionResult(False, subset=subset)
    return ConditionResult(True)


def check_condition_c(sys: QuadricSystem) -> ConditionResult:
    k = sys.num_quadrics
    r = exactlin.rank(sys.coeffs)
    if r != k:
        return ConditionResult(False, rank=r)
    L = exactlin.rational_lattice(sys.columns, k)
    data = LatticeData(
        lattice_L=L,
        dual_basis=exactlin.dual_lattice_basis(L),
        torus_rank=k,
        two_group_order=2**k,
    )
    return ConditionResult(True, rank=r, lattice=data)


def validate(sys: QuadricSystem) -> ValidationVerdict:
    a = check_condition_a(sys)
    b = check_condition_b(sys)
    c = check_condition_c(sys)
    dim = sys.m + sys.n if (a and b and c) else None
    return ValidationVerdict(a, b, c, dim)


def require_valid(sys: QuadricSystem, name: str | None = None, conditions: str = "abc") -> ValidationVerdict:
    """Validate and raise :class:`ValidationError` on the first failing condition in ``conditions``."""
    verdict = validate(sys)
    for cond in verdict.failed_conditions():
        if cond in conditions:
            raise ValidationError(cond, system=name)
    return verdict


def stack(gamma: QuadricSystem, delta: QuadricSystem) -> QuadricSystem:
    """Concatenate two systems on the same ``C^m``: gamma rows first."""
    if gamma.m != delta.m:
        raise ValueError(f"systems live in C^{gamma.m} and C^{delta.m}")
    return QuadricSystem(gamma.m, gamma.coeffs.vstack(delta.coeffs), gamma.rhs + delta.rhs)
