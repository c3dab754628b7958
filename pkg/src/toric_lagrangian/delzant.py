"""Delzant test for the associated polyhedron.

At a simple vertex the ``n`` active normals ``a_i`` span a sublattice of
``Lambda`` of index ``|det(a_i)| / covol(Lambda)``; they form a basis of
``Lambda`` exactly when that index is 1. This avoids an HNF per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactlin
from .exactlin import RatMatrix
from .gale import Polyhedron, build_polyhedron, gale_dual
from .quadrics import QuadricSystem, require_valid

__all__ = ["VertexFailure", "DelzantVerdict", "check_delzant", "embedding_criterion"]

NON_SIMPLE = "non-simple"
NOT_UNIMODULAR = "not-unimodular"


@dataclass(frozen=True)
class VertexFailure:
    point: tuple[Fraction, ...]
    active_set: tuple[int, ...]
    normals: tuple[tuple[int, ...], ...]
    kind: str
    abs_det: Fraction | None = None
    ratio: Fraction | None = None


@dataclass(frozen=True)
class DelzantVerdict:
    is_delzant: bool
    failures: tuple[VertexFailure, ...]
    lambda_covolume: int

    def __bool__(self):
        return self.is_delzant


def check_delzant(P: Polyhedron) -> DelzantVerdict:
    gd = P.gale
    n = gd.n
    covol = gd.lattice.covolume
    failures = []
    for v in P.vertices:
        normals = tuple(gd.a_vectors[i] for i in v.active_set)
        if len(v.active_set) != n:
            failures.append(VertexFailure(v.point, v.active_set, normals, NON_SIMPLE))
            continue
        d = abs(exactlin.det(RatMatrix(normals, n)))
        if d != covol:
            failures.append(VertexFailure(v.point, v.active_set, normals, NOT_UNIMODULAR, d, d / covol))
    return DelzantVerdict(is_delzant=not failures, failures=tuple(failures), lambda_covolume=covol)


def embedding_criterion(sys: QuadricSystem, name: str | None = None) -> DelzantVerdict:
    """Gale dual, polyhedron and Delzant check in one step.

    The immersed manifold built from ``sys`` is embedded iff the returned
    verdict is truthy. Raises :class:`~toric_lagrangian.errors.ValidationError`
    naming the first failing condition when ``sys`` is not admissible.
    """
    require_valid(sys, name)
    return check_delzant(build_polyhedron(gale_dual(sys)))
