import dataclasses
import random
from fractions import Fraction as F

import numpy as np
import pytest

from conftest import random_pair
from toric_lagrangian.construction import build_construction
from toric_lagrangian.errors import ValidationError
from toric_lagrangian.quadrics import QuadricSystem, stack
from toric_lagrangian.sampler import (
    SamplePoint,
    certify,
    lift_point,
    sample_points,
    tangent_frame,
    verify_batch,
)

Q = QuadricSystem.from_rows
E = QuadricSystem.empty

CIRCLE = Q([[1, 1]], [1])
PROJ_G = Q([[1, 1, 1]], [1])
PROJ_D = Q([[1, 1, 0]], [F(1, 2)])


def point(u, phases=(), y=None):
    u = np.asarray(u, dtype=float)
    y = y if y is not None else tuple(F(float(v * v)) for v in u)
    return SamplePoint(u=u, y=y, signs=np.sign(u).astype(int), phi_gamma=np.asarray(phases, float), phi_delta=np.zeros(0))


def test_samples_satisfy_circle_exactly():
    pts = sample_points(CIRCLE, 50, seed=3)
    assert len(pts) == 50
    for p in pts:
        assert p.y[0] + p.y[1] == 1
        assert min(p.y) >= F(1, 1000)


def test_zero_count():
    assert sample_points(CIRCLE, 0, seed=0) == []


def test_samples_satisfy_stacked_system_exactly():
    s = stack(PROJ_G, PROJ_D)
    for p in sample_points(s, 40, seed=5, gamma_rows=1):
        assert s.coeffs.matvec(p.y) == s.rhs
        assert p.phi_gamma.shape == (1,) and p.phi_delta.shape == (1,)


def test_sampling_is_deterministic():
    a = sample_points(CIRCLE, 10, seed=9)
    b = sample_points(CIRCLE, 10, seed=9)
    assert all(np.array_equal(p.z, q.z) and p.y == q.y for p, q in zip(a, b))


def test_unreachable_margin():
    from toric_lagrangian.errors import SamplingError

    with pytest.raises(SamplingError):
        sample_points(CIRCLE, 1, seed=0, interior_margin=0.9)


def test_moduli_preserved_by_lift():
    s = stack(PROJ_G, PROJ_D)
    for p in sample_points(s, 100, seed=1, gamma_rows=1):
        assert np.allclose(np.abs(p.z), np.abs(p.u), rtol=4 * np.finfo(float).eps, atol=0)


def test_lift_identity_phase():
    p = lift_point(point([0.6, 0.8], [0.0]), CIRCLE)
    assert np.array_equal(p.z, p.u.astype(complex))


def test_lift_zero_vector():
    p = lift_point(point([0.0, 0.0], [0.3]), CIRCLE)
    assert np.all(p.z == 0)


def test_lift_half_period():
    p = lift_point(point([1.0, 0.0], [0.5]), CIRCLE)
    assert np.allclose(p.z, [-1, 0])


def test_frame_of_circle_by_hand():
    r = np.sqrt(0.5)
    p = lift_point(point([r, r], [0.0]), CIRCLE)
    frame = tangent_frame(p, CIRCLE)
    real_dir, torus_dir = frame
    # real direction is parallel to (1, -1), torus direction to i(r, r)
    assert abs(real_dir[0] + real_dir[1]) < 1e-15 and abs(real_dir[0].imag) < 1e-15
    assert np.allclose(torus_dir, 2j * np.pi * np.array([r, r]))
    omega = np.sum(np.imag(np.conj(real_dir) * torus_dir))
    assert abs(omega) < 1e-15


def test_frame_without_quadrics():
    p = lift_point(point([0.7], []), E(1))
    frame = tangent_frame(p, E(1))
    assert frame.shape == (1, 1) and frame[0, 0] == 1


def test_frame_cardinality_is_m():
    rng = random.Random(40)
    checked = 0
    for _ in range(60):
        g, d = random_pair(rng, m_max=5)
        if not build_construction(g, d).valid:
            continue
        s = stack(g, d)
        try:
            pts = sample_points(s, 3, seed=1, gamma_rows=g.num_quadrics)
        except Exception:
            continue
        for p in pts:
            assert tangent_frame(p, s).shape == (s.m, s.m)
        checked += 1
    assert checked > 5


def test_singular_jacobian_rejected():
    from toric_lagrangian.errors import RankDeficiencyError

    with pytest.raises(RankDeficiencyError):
        tangent_frame(lift_point(point([0.0, 0.0], [0.0]), CIRCLE), CIRCLE)


def test_certify_circle_points():
    for p in sample_points(CIRCLE, 30, seed=2):
        c = certify(p, tangent_frame(p, CIRCLE))
        assert c.lagrangian_pass and c.max_symplectic_pairing <= 1e-10
        assert c.immersion_pass


def test_corrupted_frame_fails_with_two_torus_directions():
    s = stack(PROJ_G, PROJ_D)
    for p in sample_points(s, 30, seed=2, gamma_rows=1):
        frame = tangent_frame(p, s)
        frame[1] = 1j * frame[1]
        c = certify(p, frame)
        assert not c.lagrangian_pass and c.max_symplectic_pairing > 0.1


def test_repeated_vector_fails_immersion():
    p = sample_points(CIRCLE, 1, seed=2)[0]
    frame = tangent_frame(p, CIRCLE)
    frame[1] = frame[0]
    assert not certify(p, frame).immersion_pass


def test_phase_equivariance():
    s = stack(PROJ_G, PROJ_D)
    rng = np.random.default_rng(0)
    for p in sample_points(s, 20, seed=4, gamma_rows=1):
        c = certify(p, tangent_frame(p, s))
        shifted = dataclasses.replace(p, phi_gamma=p.phi_gamma + rng.random(1), phi_delta=p.phi_delta + rng.random(1), z=None)
        shifted = lift_point(shifted, s)
        c2 = certify(shifted, tangent_frame(shifted, s))
        assert abs(c.max_symplectic_pairing - c2.max_symplectic_pairing) < 1e-12
        assert abs(c.min_singular_value_ratio - c2.min_singular_value_ratio) < 1e-12


def test_sign_equivariance():
    s = stack(PROJ_G, PROJ_D)
    for p in sample_points(s, 20, seed=6, gamma_rows=1):
        c = certify(p, tangent_frame(p, s))
        for k in range(3):
            flip = np.ones(3, dtype=int)
            flip[k] = -1
            q = lift_point(dataclasses.replace(p, u=p.u * flip, signs=p.signs * flip, z=None), s)
            c2 = certify(q, tangent_frame(q, s))
            assert c2.passed
            assert abs(c.max_symplectic_pairing - c2.max_symplectic_pairing) < 1e-12
            assert abs(c.min_singular_value_ratio - c2.min_singular_value_ratio) < 1e-12


def test_verify_batch_circle():
    s = verify_batch(E(2), CIRCLE, 100, seed=0)
    assert s.pass_fraction == 1.0 and s.count == 100


def test_verify_batch_projective():
    s = verify_batch(PROJ_G, PROJ_D, 100, seed=0)
    assert s.pass_fraction == 1.0


def test_verify_batch_empty():
    s = verify_batch(E(2), CIRCLE, 0, seed=0)
    assert (s.pass_fraction, s.worst_pairing, s.worst_rank_ratio) == (1.0, 0.0, 0.0)


def test_verify_batch_rejects_invalid_pair():
    with pytest.raises(ValidationError) as exc:
        verify_batch(Q([[1, 1, 2]], [1]), E(3), 10, seed=0)
    assert exc.value.condition == "delzant" and exc.value.system == "gamma"


def test_verify_batch_deterministic():
    assert verify_batch(PROJ_G, PROJ_D, 25, seed=8) == verify_batch(PROJ_G, PROJ_D, 25, seed=8)


def test_random_valid_pairs_certify():
    rng = random.Random(41)
    done = 0
    for _ in range(80):
        g, d = random_pair(rng, m_max=5)
        if not build_construction(g, d).valid:
            continue
        try:
            s = verify_batch(g, d, 10, seed=3)
        except Exception as exc:  # margin unreachable for thin polytopes
            assert type(exc).__name__ == "SamplingError"
            continue
        assert s.pass_fraction == 1.0, (g, d, s)
        done += 1
    assert done > 5
