import random
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_cone_member, brute_rank, in_integer_span, lattice_index
from toric_lagrangian import exactlin
from toric_lagrangian.errors import RankDeficiencyError
from toric_lagrangian.exactlin import RatMatrix


small_ints = st.integers(min_value=-3, max_value=3)


def matrices(max_rows=3, max_cols=4, elements=small_ints):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(elements, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rational_is_reduced():
    q = exactlin.as_rational("-6/4")
    assert (q.numerator, q.denominator) == (-3, 2)


# -- solve_linear ----------------------------------------------------------


def test_solve_first_pivot_solution():
    assert exactlin.solve_linear([[1, 1]], [2]) == (2, 0)


def test_solve_identity():
    assert exactlin.solve_linear([[1, 0], [0, 1]], [F(3, 2), -1]) == (F(3, 2), -1)


def test_solve_inconsistent():
    assert exactlin.solve_linear([[1, 1], [1, 1]], [1, 2]) is None


def test_solve_rhs_length_checked():
    with pytest.raises(ValueError):
        exactlin.solve_linear([[1, 1]], [1, 2])


@given(matrices(), st.data())
def test_solve_solution_is_exact(rows, data):
    A = RatMatrix(rows)
    rhs = data.draw(st.lists(small_ints, min_size=A.nrows, max_size=A.nrows))
    x = exactlin.solve_linear(A, rhs)
    if x is not None:
        assert A.matvec(x) == tuple(F(v) for v in rhs)
    else:
        # inconsistent iff augmenting raises the rank
        aug = [r + [b] for r, b in zip(rows, rhs)]
        assert brute_rank(aug, A.ncols + 1) > brute_rank(rows, A.ncols)


# -- kernels ---------------------------------------------------------------


def test_kernel_of_all_ones_row():
    basis = exactlin.rational_kernel_basis([[1, 1, 1]])
    assert len(basis) == 2
    assert all(sum(v) == 0 for v in basis)


def test_kernel_of_identity_is_empty():
    assert exactlin.rational_kernel_basis([[1, 0], [0, 1]]) == []


def test_kernel_spans_expected_plane():
    basis = exactlin.rational_kernel_basis([[1, 1, 2]])
    expected = [(1, -1, 0), (2, 0, -1)]
    assert all(v[0] + v[1] + 2 * v[2] == 0 for v in basis)
    assert brute_rank([list(v) for v in basis], 3) == 2
    assert brute_rank([list(v) for v in basis] + [list(e) for e in expected], 3) == 2


@given(matrices())
def test_kernel_dimension_and_annihilation(rows):
    A = RatMatrix(rows)
    basis = exactlin.rational_kernel_basis(A)
    assert len(basis) == A.ncols - brute_rank(rows, A.ncols)
    for v in basis:
        assert all(x == 0 for x in A.matvec(v))


def test_integer_kernel_zero_sum():
    K = exactlin.integer_kernel_basis([[1, 1, 1]])
    assert K.basis == ((1, 0, -1), (0, 1, -1))
    for v in product(range(-3, 4), repeat=3):
        if sum(v) == 0:
            assert in_integer_span(K.basis, v)


def test_integer_kernel_is_saturated():
    assert exactlin.integer_kernel_basis([[2, 2]]).basis == ((1, -1),)


def test_integer_kernel_trivial():
    assert exactlin.integer_kernel_basis([[1]]).basis == ()


def test_integer_kernel_saturation_random():
    rng = random.Random(2024)
    for _ in range(100):
        rows = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(2)]
        K = exactlin.integer_kernel_basis(rows)
        assert len(K.basis) == 4 - brute_rank(rows, 4)
        for v in product(range(-5, 6), repeat=4):
            if all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows):
                assert in_integer_span(K.basis, v), (rows, v)


def test_integer_kernel_rational_input():
    K = exactlin.integer_kernel_basis([[F(1, 2), F(1, 3)]])
    assert K.basis == ((2, -3),)


# -- HNF -------------------------------------------------------------------


def test_hnf_index_two():
    L = exactlin.hnf([(2, 0), (0, 2), (1, 1)])
    assert L.covolume == 2 == lattice_index([(2, 0), (0, 2), (1, 1)], 2)


def test_hnf_standard_basis():
    L = exactlin.hnf([(1, 0), (0, 1)])
    assert L.basis == ((1, 0), (0, 1)) and L.covolume == 1


def test_hnf_zero_row():
    L = exactlin.hnf([(0, 0)])
    assert L.basis == () and L.covolume is None


@given(matrices(max_rows=4, max_cols=3))
def test_hnf_idempotent(rows):
    L = exactlin.hnf(rows)
    assert exactlin.hnf(L.basis, L.dim) == L


@given(matrices(max_rows=4, max_cols=3), st.data())
def test_hnf_invariant_under_row_operations(rows, data):
    L = exactlin.hnf(rows)
    i = data.draw(st.integers(0, len(rows) - 1))
    j = data.draw(st.integers(0, len(rows) - 1))
    swapped = list(rows)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert exactlin.hnf(swapped) == L
    if i != j:
        added = [list(r) for r in rows]
        added[i] = [a + b for a, b in zip(added[i], added[j])]
        assert exactlin.hnf(added) == L


@given(matrices(max_rows=4, max_cols=3))
def test_hnf_full_rank_covolume_is_index(rows):
    L = exactlin.hnf(rows)
    if L.is_full_rank:
        assert L.covolume == lattice_index(rows, L.dim)


def test_rational_lattice_rescales():
    L = exactlin.rational_lattice([(F(1, 2),), (F(1, 3),)], 1)
    assert L.denominator == 6 and L.basis == ((1,),) and L.covolume == F(1, 6)


# -- dual lattice ----------------------------------------------------------


def test_dual_of_standard_basis():
    assert exactlin.dual_lattice_basis([(1, 0), (0, 1)]) == ((1, 0), (0, 1))


def test_dual_in_dimension_one():
    assert exactlin.dual_lattice_basis([(2,)]) == ((F(1, 2),),)


def test_dual_pairing_identity():
    B = [(1, 1), (0, 2)]
    D = exactlin.dual_lattice_basis(B)
    gram = [[sum(F(a) * b for a, b in zip(u, v)) for v in D] for u in B]
    assert gram == [[1, 0], [0, 1]]


def test_dual_rejects_rank_deficiency():
    with pytest.raises(RankDeficiencyError):
        exactlin.dual_lattice_basis([(1, 1), (2, 2)])
    with pytest.raises(RankDeficiencyError):
        exactlin.dual_lattice_basis([(1, 1, 0)])


@given(matrices(max_rows=3, max_cols=3))
def test_dual_pairing_identity_random(rows):
    L = exactlin.hnf(rows)
    if not L.is_full_rank or L.dim == 0:
        return
    D = exactlin.dual_lattice_basis(L)
    for i, u in enumerate(L.basis):
        for j, v in enumerate(D):
            assert sum(a * b for a, b in zip(u, v)) == int(i == j)


# -- cone feasibility --------------------------------------------------------


def test_cone_sphere():
    res = exactlin.cone_feasible([[1, 1, 1]], [1])
    assert res.feasible and sum(res.witness) == 1 and min(res.witness) >= 0


def test_cone_negative_target():
    assert not exactlin.cone_feasible([[1, 0], [0, 1]], [-1, 0])


def test_cone_zero_target():
    res = exactlin.cone_feasible([[1, -1]], [0])
    assert res.feasible and res.witness == (0, 0)


def test_cone_no_rows():
    assert exactlin.cone_feasible(RatMatrix((), 3), []).witness == (0, 0, 0)


def test_cone_degenerate_terminates():
    # classic cycling-prone shape: many ties in the ratio test
    A = [[1, 1, 1, 1, 0], [1, 2, 0, 1, 1], [1, 0, 2, 1, -1]]
    res = exactlin.cone_feasible(A, [0, 0, 0])
    assert res.feasible


def test_cone_agrees_with_brute_force():
    rng = random.Random(11)
    for _ in range(1500):
        m = rng.randint(1, 4)
        k = rng.randint(1, 3)
        rows = [[rng.randint(-2, 2) for _ in range(m)] for _ in range(k)]
        rhs = [rng.randint(-2, 2) for _ in range(k)]
        res = exactlin.cone_feasible(rows, rhs)
        assert res.feasible == brute_cone_member(rows, rhs), (rows, rhs)
        if res:
            assert min(res.witness) >= 0
            assert RatMatrix(rows).matvec(res.witness) == tuple(F(v) for v in rhs)


@settings(max_examples=200)
@given(matrices(max_rows=3, max_cols=4, elements=st.integers(-2, 2)), st.data())
def test_cone_agrees_with_brute_force_hypothesis(rows, data):
    rhs = data.draw(st.lists(st.integers(-2, 2), min_size=len(rows), max_size=len(rows)))
    assert exactlin.cone_feasible(rows, rhs).feasible == brute_cone_member(rows, rhs)


def test_det_and_inverse():
    A = RatMatrix([[2, 1], [1, 1]])
    assert exactlin.det(A) == 1
    assert A @ exactlin.inverse(A) == RatMatrix.identity(2)
    assert exactlin.det(RatMatrix((), 0)) == 1
