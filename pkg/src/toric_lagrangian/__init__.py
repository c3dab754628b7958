"""Hamiltonian-minimal Lagrangian submanifolds of toric varieties from quadric data.

Exact tools (:mod:`exactlin`, :mod:`quadrics`, :mod:`gale`, :mod:`delzant`,
:mod:`construction`) decide admissibility, Gale duality, the Delzant
criterion and all dimensions; :mod:`sampler` certifies the Lagrangian and
immersion properties numerically on random points.
"""

from .construction import ConstructionReport, build_construction, report_text
from .delzant import DelzantVerdict, check_delzant, embedding_criterion
from .documents import InputDocument, example_document, parse_document
from .errors import RankDeficiencyError, SamplingError, ValidationError
from .gale import GaleDual, Polyhedron, build_polyhedron, change_basis, gale_dual
from .quadrics import QuadricSystem, stack, validate
from .sampler import certify, lift_point, sample_points, tangent_frame, verify_batch

__version__ = "0.1.0"

__all__ = [
    "ConstructionReport",
    "DelzantVerdict",
    "GaleDual",
    "InputDocument",
    "Polyhedron",
    "QuadricSystem",
    "RankDeficiencyError",
    "SamplingError",
    "ValidationError",
    "build_construction",
    "build_polyhedron",
    "certify",
    "change_basis",
    "check_delzant",
    "embedding_criterion",
    "example_document",
    "gale_dual",
    "lift_point",
    "parse_document",
    "report_text",
    "sample_points",
    "stack",
    "tangent_frame",
    "validate",
    "verify_batch",
]
