"""Gale duality and the associated polyhedron.

For an admissible system ``Gamma y = rhs`` the nonnegative solutions are
parametrised as ``y = A x + b`` where the columns of ``A`` (``m x n``) form an
integer basis of ``ker Gamma`` and ``b`` is one particular solution. The rows
``a_i`` of ``A`` are the Gale dual configuration, and

    P = { x in R^n : <a_i, x> + b_i >= 0, i = 1..m }

is the associated polyhedron.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import exactlin
from .exactlin import IntLatticeBasis, RatMatrix, as_rational
from .quadrics import QuadricSystem, require_valid

__all__ = ["GaleDual", "Vertex", "Polyhedron", "gale_dual", "change_basis", "build_polyhedron"]


@dataclass(frozen=True)
class GaleDual:
    n: int
    a_vectors: tuple[tuple[int, ...], ...]
    b_offsets: tuple[Fraction, ...]
    lattice: IntLatticeBasis

    @property
    def m(self) -> int:
        return len(self.a_vectors)

    def normal_matrix(self) -> RatMatrix:
        """The ``m x n`` matrix ``A`` whose rows are the ``a_i``."""
        return RatMatrix(self.a_vectors, self.n)

    def lift(self, x: Sequence) -> tuple[Fraction, ...]:
        """``y = A x + b``."""
        Ax = self.normal_matrix().matvec(x)
        return tuple(u + v for u, v in zip(Ax, self.b_offsets))

    def contains(self, x: Sequence) -> bool:
        return all(s >= 0 for s in self.lift(x))


@dataclass(frozen=True)
class Vertex:
    point: tuple[Fraction, ...]
    active_set: tuple[int, ...]


@dataclass(frozen=True)
class Polyhedron:
    gale: GaleDual
    vertices: tuple[Vertex, ...]
    is_simple: bool
    is_bounded: bool
    recession_witness: tuple[Fraction, ...] | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.gale.n

    def vertex_slacks(self) -> list[tuple[Fraction, ...]]:
        """The vertices mapped back to ``y``-space."""
        return [self.gale.lift(v.point) for v in self.vertices]


def gale_dual(sys: QuadricSystem) -> GaleDual:
    """Gale dual of an admissible system.

    Raises :class:`~toric_lagrangian.errors.ValidationError` when condition
    (a) or (c) fails.
    """
    require_valid(sys, conditions="ac")
    kernel = exactlin.integer_kernel_basis(sys.coeffs)
    n = kernel.rank
    a_vectors = tuple(tuple(kernel.basis[r][i] for r in range(n)) for i in range(sys.m))
    b = exactlin.solve_linear(sys.coeffs, sys.rhs)
    # (a) holds, so the system is consistent
    assert b is not None
    return GaleDual(n=n, a_vectors=a_vectors, b_offsets=b, lattice=exactlin.hnf(a_vectors, n))


def change_basis(gd: GaleDual, unimodular: Sequence[Sequence[int]], shift: Sequence | None = None) -> GaleDual:
    """Re-express ``gd`` in another kernel basis.

    The new normals are ``a_i' = U a_i`` and, when ``shift = t`` is given, the
    particular solution becomes ``b + A t``. Both describe the same solution
    set ``{A x + b}``; the polyhedron changes by an affine lattice map.
    """
    U = RatMatrix(unimodular, gd.n)
    if U.nrows != gd.n or abs(exactlin.det(U)) != 1:
        raise ValueError("change of basis must be a unimodular n x n matrix")
    a_new = tuple(tuple(int(v) for v in U.matvec(a)) for a in gd.a_vectors)
    b_new = gd.b_offsets
    if shift is not None:
        b_new = gd.lift([as_rational(t) for t in shift])
    return GaleDual(n=gd.n, a_vectors=a_new, b_offsets=b_new, lattice=exactlin.hnf(a_new, gd.n))


def _recession_ray(gd: GaleDual) -> tuple[Fraction, ...] | None:
    """A nonzero ``x`` with ``A x >= 0`` if one exists.

    With ``W`` a basis of the left kernel of ``A``, ``im A = {y : W y = 0}``;
    the cone is nontrivial iff some ``y >= 0`` with ``W y = 0`` and
    ``sum(y) = 1`` exists (``A`` has full column rank, so ``y != 0`` forces
    ``x != 0``).
    """
    m, n = gd.m, gd.n
    if n == 0:
        return None
    A = gd.normal_matrix()
    W = exactlin.rational_kernel_basis(A.transpose())
    rows = [list(w) for w in W] + [[1] * m]
    res = exactlin.cone_feasible(RatMatrix(rows, m), [0] * len(W) + [1])
    if not res:
        return None
    x = exactlin.solve_linear(A, res.witness)
    assert x is not None
    return x


def build_polyhedron(gd: GaleDual) -> Polyhedron:
    """Enumerate the vertices of ``P`` exactly.

    Every ``n``-subset of inequalities with an invertible normal matrix is
    solved as an equality system; the point is kept if it satisfies all
    inequalities. Active sets are recomputed from the point, so a degenerate
    vertex lists more than ``n`` indices. Indices are 0-based.
    """
    n = gd.n
    A = gd.normal_matrix()
    found: dict[tuple[Fraction, ...], Vertex] = {}
    for subset in combinations(range(gd.m), n):
        sub = RatMatrix((gd.a_vectors[i] for i in subset), n)
        if exactlin.det(sub) == 0:
            continue
        x = exactlin.solve_linear(sub, [-gd.b_offsets[i] for i in subset])
        if x in found:
            continue
        slack = [s + b for s, b in zip(A.matvec(x), gd.b_offsets)]
        if any(s < 0 for s in slack):
            continue
        found[x] = Vertex(point=x, active_set=tuple(i for i, s in enumerate(slack) if s == 0))
    vertices = tuple(sorted(found.values(), key=lambda v: v.active_set))
    ray = _recession_ray(gd)
    return Polyhedron(
        gale=gd,
        vertices=vertices,
        is_simple=all(len(v.active_set) == n for v in vertices),
        is_bounded=ray is None,
        recession_witness=ray,
    )
