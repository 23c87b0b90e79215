import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gradalg.errors import FieldMismatch
from gradalg.exactla import (
    Field, Mat, mat_nullspace, mat_rank, mat_solve, sparse_echelon, sparse_nullspace, sparse_rank,
)

Q = Field(0)
F2 = Field(2)
F3 = Field(3)

small_ints = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=m, max_size=m)))


def rank_by_counting(F, rows):
    """|column space| = p^rank; enumerate all combinations of the columns."""
    A = np.array(rows, dtype=np.int64) % F.p
    images = {tuple((A @ np.array(c)) % F.p) for c in itertools.product(range(F.p), repeat=A.shape[1])}
    r = 0
    while F.p ** r < len(images):
        r += 1
    return r


def test_field_parse_and_scalars():
    assert Field.parse("Q") == Q
    assert Field.parse("F7") == Field(7)
    assert Field.parse("GF(5)") == Field(5)
    assert F3(-1) == 2
    assert F3(Fraction(1, 2)) == 2
    assert Q("3/6") == Fraction(1, 2)
    assert Q(Fraction(4, 2)) == 2 and isinstance(Q(Fraction(4, 2)), int)
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ValueError):
        Field.parse("R")
    with pytest.raises(ZeroDivisionError):
        F3(Fraction(1, 3))
    with pytest.raises(ValueError):
        Field(1048583)  # prime above the residue limit


def test_inverse():
    for a in range(1, 7):
        assert Field(7).inv(a) * a % 7 == 1
    assert Q.inv(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        Q.inv(0)


@given(matrices())
def test_rank_over_f_p_matches_counting(rows):
    for F in (F2, F3):
        assert F.rank(F.array(rows)) == rank_by_counting(F, rows)


@given(matrices())
def test_rank_over_q_matches_floating_point(rows):
    # small integer matrices: floating-point rank is reliable
    assert Q.rank(Q.array(rows)) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@given(matrices(), st.sampled_from([0, 2, 3, 5]))
def test_rank_nullity_and_kernel(rows, p):
    F = Field(p)
    A = F.array(rows)
    N = F.nullspace(A)
    assert F.rank(A) + N.shape[1] == A.shape[1]
    assert F.is_zero(F.matmul(A, N))
    assert F.rank(N) == N.shape[1]


@given(matrices(), st.sampled_from([0, 3]), st.lists(small_ints, min_size=4, max_size=4))
def test_solve_consistent_systems(rows, p, coeffs):
    F = Field(p)
    A = F.array(rows)
    x0 = F.array(coeffs[: A.shape[1]])
    b = F.matmul(A, x0)
    x = F.solve(A, b)
    assert x is not None
    assert np.array_equal(F.matmul(A, x), b)


def test_solve_inconsistent():
    A = Q.array([[1, 1], [2, 2]])
    assert Q.solve(A, Q.array([1, 3])) is None


@given(matrices(), st.sampled_from([0, 2, 5]))
def test_rref_is_reduced(rows, p):
    F = Field(p)
    R, piv = F.rref(F.array(rows))
    for i, c in enumerate(piv):
        assert R[i, c] == 1
        assert all(R[k, c] == 0 for k in range(R.shape[0]) if k != i)
    assert piv == sorted(piv)


@given(matrices(), st.sampled_from([0, 2, 3]))
def test_sparse_and_dense_agree(rows, p):
    F = Field(p)
    A = F.array(rows)
    sparse_rows = [{j: v for j, v in enumerate(r) if v != 0} for r in A.tolist()]
    assert sparse_rank(F, sparse_rows) == F.rank(A)
    basis = sparse_nullspace(F, sparse_rows, A.shape[1])
    assert len(basis) == F.nullspace(A).shape[1]
    for v in basis:
        assert F.is_zero(F.matmul(A, F.array(v)))


def test_sparse_echelon_pivots_are_last_columns():
    piv = sparse_echelon(Q, [{0: 1, 2: 2}, {1: 1, 2: 1}])
    assert set(piv) == {2, 1}
    for c, row in piv.items():
        assert row[c] == 1 and max(row) == c


def test_span_tools():
    F = F3
    U = F.array([[1, 0], [0, 1], [0, 0]])
    W = F.array([[1, 0], [0, 0], [0, 1]])
    I = F.intersect(U, W)
    assert I.shape[1] == 1
    assert F.in_span(U, I[:, 0]) and F.in_span(W, I[:, 0])
    assert F.extend(U, W) == [1]
    assert F.independent_columns(F.array([[1, 2, 0], [0, 0, 1]])) == [0, 2]


def test_mat_front_end():
    A = Mat.from_rows(Q, [[1, 2], [2, 4]])
    assert mat_rank(A) == 1
    assert mat_nullspace(A).cols == 1
    x = mat_solve(A, Mat.from_rows(Q, [[3], [6]]))
    assert (A @ x) == Mat.from_rows(Q, [[3], [6]])
    with pytest.raises(FieldMismatch):
        A @ Mat.from_rows(F3, [[1], [1]])
