"""Numerical certificates for the Lagrangian and immersion properties.

Points of the real intersection ``R`` are drawn by mixing the vertices of
the stacked polyhedron in ``y = u^2`` coordinates (exact rationals), then
square-rooted with random signs and spread by random torus phases:

    z_k = u_k * exp(2 pi i (<gamma_k, phi_gamma> + <delta_k, phi_delta>)).

The tangent space of the lifted manifold at ``z`` is spanned by

* real directions ``t_k e^{i theta_k}`` with ``t`` in the kernel of the
  Jacobian ``[2 g_jk u_k]`` of the real equations, where ``theta_k`` is the
  phase *applied* to ``u_k`` (not ``arg z_k``, which differs by ``pi`` when
  ``u_k < 0``);
* one torus direction ``2 pi i g_jk z_k`` per quadric row ``g_j``.

That is ``m`` vectors in ``C^m``. The manifold is Lagrangian when the
standard form ``omega(v, w) = sum_k Im(conj(v_k) w_k)`` vanishes on all pairs
and immersed when the vectors are real-linearly independent.

Randomness comes from ``numpy.random.MT19937`` (a twisted generalised
feedback shift register) seeded with the user's integer, so batches are
reproducible across platforms.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .construction import build_construction
from .errors import RankDeficiencyError, SamplingError, ValidationError
from .gale import build_polyhedron, gale_dual
from .quadrics import QuadricSystem, stack

__all__ = [
    "TOL_OMEGA",
    "TOL_RANK",
    "INTERIOR_MARGIN",
    "SamplePoint",
    "SampleCertificate",
    "BatchSummary",
    "make_rng",
    "sample_points",
    "lift_point",
    "tangent_frame",
    "certify",
    "verify_batch",
]

TOL_OMEGA = 1e-8
TOL_RANK = 1e-8
INTERIOR_MARGIN = 1e-3
MAX_BARREN_PROPOSALS = 10_000


@dataclass(frozen=True, eq=False)
class SamplePoint:
    u: np.ndarray
    y: tuple[Fraction, ...]
    signs: np.ndarray
    phi_gamma: np.ndarray
    phi_delta: np.ndarray
    z: np.ndarray | None = None

    @property
    def phases(self) -> np.ndarray:
        return np.concatenate([self.phi_gamma, self.phi_delta])


@dataclass(frozen=True, eq=False)
class SampleCertificate:
    point: SamplePoint
    frame: np.ndarray
    max_symplectic_pairing: float
    min_singular_value_ratio: float
    lagrangian_pass: bool
    immersion_pass: bool

    @property
    def passed(self) -> bool:
        return self.lagrangian_pass and self.immersion_pass


@dataclass(frozen=True)
class BatchSummary:
    count: int
    passed: int
    pass_fraction: float
    worst_pairing: float
    worst_rank_ratio: float


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.MT19937(seed))


def _coeff_array(sys: QuadricSystem) -> np.ndarray:
    return np.array([[float(v) for v in r] for r in sys.coeffs.rows], dtype=float).reshape(sys.num_quadrics, sys.m)


def _stream(stacked: QuadricSystem, seed: int, interior_margin: float, gamma_rows: int | None) -> Iterator[SamplePoint]:
    k, m = stacked.num_quadrics, stacked.m
    if gamma_rows is None:
        gamma_rows = k
    P = build_polyhedron(gale_dual(stacked))
    corners = P.vertex_slacks()
    if not corners:
        raise SamplingError("the stacked polyhedron has no vertices")
    margin = Fraction(interior_margin)
    rng = make_rng(seed)
    accepted = 0
    proposals = 0
    while True:
        proposals += 1
        weights = [Fraction(float(w)) for w in rng.standard_exponential(len(corners))]
        total = sum(weights)
        y = tuple(sum(w * c[i] for w, c in zip(weights, corners)) / total for i in range(m))
        if m and min(y) < margin:
            if accepted == 0 and proposals >= MAX_BARREN_PROPOSALS:
                raise SamplingError(f"no sample with min(y) >= {interior_margin} in {proposals} proposals")
            continue
        accepted += 1
        signs = rng.choice(np.array([-1, 1]), size=m)
        phases = rng.random(k)
        u = signs * np.sqrt(np.array([float(v) for v in y]))
        yield SamplePoint(u=u, y=y, signs=signs, phi_gamma=phases[:gamma_rows], phi_delta=phases[gamma_rows:])


def sample_points(
    stacked: QuadricSystem,
    count: int,
    seed: int,
    interior_margin: float = INTERIOR_MARGIN,
    gamma_rows: int | None = None,
) -> list[SamplePoint]:
    """Draw ``count`` lifted points of the stacked real intersection.

    ``gamma_rows`` says how many leading rows of ``stacked`` come from gamma
    (default: all of them); it only decides how the phase vector is split.
    Each ``y`` is a convex combination of polyhedron vertices with normalised
    standard-exponential weights, so it satisfies the stacked equations
    exactly. Proposals with ``min(y) < interior_margin`` are rejected.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return []
    out = []
    for p in _stream(stacked, seed, interior_margin, gamma_rows):
        out.append(lift_point(p, stacked))
        if len(out) == count:
            return out


def lift_point(point: SamplePoint, stacked: QuadricSystem) -> SamplePoint:
    """Fill in ``z = u * phase``; phases pair with the rows of ``stacked`` in order."""
    G = _coeff_array(stacked)
    theta = 2 * np.pi * (G.T @ point.phases)
    return dataclasses.replace(point, z=point.u * np.exp(1j * theta))


def tangent_frame(point: SamplePoint, stacked: QuadricSystem) -> np.ndarray:
    """``m x m`` complex array whose rows span the tangent space at ``point.z``.

    Row order: real directions, then one torus direction per row of
    ``stacked`` (gamma rows first, then delta rows).
    """
    if point.z is None:
        point = lift_point(point, stacked)
    G = _coeff_array(stacked)
    k, m = G.shape
    phase = np.exp(1j * 2 * np.pi * (G.T @ point.phases))
    if k:
        J = 2 * G * point.u[None, :]
        _, s, vh = np.linalg.svd(J)
        if s.size == 0 or s.min() <= 1e-10 * max(s.max(), 1.0):
            raise RankDeficiencyError("Jacobian of the real equations is rank deficient")
        kernel = vh[k:]
    else:
        kernel = np.eye(m)
    real_dirs = kernel * phase[None, :]
    torus_dirs = 2j * np.pi * G * point.z[None, :]
    return np.vstack([real_dirs, torus_dirs])


def certify(point: SamplePoint, frame: np.ndarray, tol_omega: float = TOL_OMEGA, tol_rank: float = TOL_RANK) -> SampleCertificate:
    """Measure isotropy and independence of ``frame`` (rows are tangent vectors).

    Both statistics use unit-normalised vectors: ``max_symplectic_pairing`` is
    the largest ``|omega(v, w)|`` and ``min_singular_value_ratio`` is
    ``sigma_min / sigma_max`` of the frame viewed as real vectors in ``R^{2m}``.
    """
    frame = np.asarray(frame, dtype=complex)
    norms = np.linalg.norm(frame, axis=1)
    unit = frame / np.where(norms > 0, norms, 1.0)[:, None]
    omega = np.imag(np.conj(unit) @ unit.T)
    pairing = float(np.abs(omega).max()) if omega.size else 0.0
    real = np.hstack([unit.real, unit.imag])
    if real.size:
        s = np.linalg.svd(real, compute_uv=False)
        ratio = float(s.min() / s.max()) if s.max() > 0 else 0.0
    else:
        ratio = 1.0
    return SampleCertificate(
        point=point,
        frame=frame,
        max_symplectic_pairing=pairing,
        min_singular_value_ratio=ratio,
        lagrangian_pass=pairing <= tol_omega,
        immersion_pass=ratio >= tol_rank,
    )


def verify_batch(
    gamma: QuadricSystem,
    delta: QuadricSystem,
    count: int,
    seed: int,
    tol_omega: float = TOL_OMEGA,
    tol_rank: float = TOL_RANK,
    interior_margin: float = INTERIOR_MARGIN,
    certificates: list | None = None,
) -> BatchSummary:
    """Certify ``count`` samples of the construction built from ``gamma`` and ``delta``.

    Samples whose Jacobian is numerically singular are skipped and replaced
    by the next draw. When ``certificates`` is a list, every certificate is
    appended to it.
    """
    report = build_construction(gamma, delta)
    if not report.valid:
        role, cond = report.failures[0]
        raise ValidationError(cond, system=role)
    if count == 0:
        return BatchSummary(0, 0, 1.0, 0.0, 0.0)
    stacked = stack(gamma, delta)
    passed = 0
    worst_pairing = 0.0
    worst_ratio = np.inf
    done = 0
    for p in _stream(stacked, seed, interior_margin, gamma.num_quadrics):
        p = lift_point(p, stacked)
        try:
            frame = tangent_frame(p, stacked)
        except RankDeficiencyError:
            continue
        cert = certify(p, frame, tol_omega, tol_rank)
        if certificates is not None:
            certificates.append(cert)
        passed += cert.passed
        worst_pairing = max(worst_pairing, cert.max_symplectic_pairing)
        worst_ratio = min(worst_ratio, cert.min_singular_value_ratio)
        done += 1
        if done == count:
            break
    return BatchSummary(count, passed, passed / count, worst_pairing, float(worst_ratio))
