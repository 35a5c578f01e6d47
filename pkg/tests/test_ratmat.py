from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import low_rank_matrices, matrices
from impobs.fixtures import SHIFT3, counterexample
from impobs.pencil import augment, build_F
from impobs.ratmat import (
    DimensionMismatch,
    Mat,
    block,
    hstack,
    kernel_basis,
    matmul,
    rank,
    rref,
    transpose,
    vstack,
)

any_matrix = st.one_of(matrices(), low_rank_matrices())


def sympy_rank(M: Mat) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in M.tolist()]).rank()


def test_rank_examples():
    assert rank(Mat.identity(3)) == 3
    assert rank(Mat(SHIFT3)) == 2
    assert rank(Mat.zeros(2, 5)) == 0
    assert rank(Mat.zeros(0, 4)) == 0
    assert rank(Mat.zeros(4, 0)) == 0


def test_rref_examples():
    assert rref(Mat.identity(3)) == Mat.identity(3)
    assert rref(Mat([[2, 4], [1, 2]])) == Mat([[1, 2], [0, 0]])
    assert rref(Mat.zeros(2, 3)) == Mat.zeros(2, 3)


def test_kernel_examples():
    assert kernel_basis(Mat.identity(4)).shape == (4, 0)
    K = kernel_basis(Mat.zeros(1, 3))
    assert K.shape == (3, 3) and rank(K) == 3
    K = kernel_basis(Mat(SHIFT3))
    assert K == Mat([[1], [0], [0]])


def test_composition_examples():
    sys = counterexample()
    Ebar = vstack(sys.E, Mat.zeros(1, 3))
    assert Ebar.shape == (4, 3)
    assert matmul(sys.C, sys.E) == Mat.zeros(1, 3)
    aug = augment(sys)
    F2 = block([[aug.Ebar, aug.Abar], [None, aug.Ebar]])
    assert F2.shape == (8, 6)
    assert F2 == build_F(sys, 2)


@pytest.mark.parametrize(
    "fn, a, b",
    [
        (hstack, Mat.zeros(2, 2), Mat.zeros(3, 2)),
        (vstack, Mat.zeros(2, 2), Mat.zeros(2, 3)),
        (matmul, Mat.zeros(2, 3), Mat.zeros(2, 3)),
    ],
)
def test_dimension_mismatch_names_shapes(fn, a, b):
    with pytest.raises(DimensionMismatch, match=r"\(2, \d\).*\(\d, \d\)"):
        fn(a, b)


def test_block_inconsistent_grid():
    with pytest.raises(DimensionMismatch):
        block([[Mat.zeros(2, 2), Mat.zeros(3, 2)]])


def test_entries_are_reduced_and_exact():
    M = Mat([["2/4", "-6/3"], [Fraction(1, 3), 0]])
    assert M[0, 0] == Fraction(1, 2) and M[0, 0].denominator == 2
    assert M.entries == (Fraction(1, 2), Fraction(-2), Fraction(1, 3), Fraction(0))
    P = M @ M
    assert P[0, 0] == Fraction(1, 4) - Fraction(2, 3)


@settings(max_examples=200, deadline=None)
@given(any_matrix)
def test_rank_matches_sympy(M):
    assert rank(M) == sympy_rank(M)


@settings(max_examples=200, deadline=None)
@given(any_matrix)
def test_rank_nullity(M):
    K = kernel_basis(M)
    assert rank(M) + K.cols == M.cols
    assert rank(K) == K.cols
    assert (M @ K).is_zero()


@settings(max_examples=200, deadline=None)
@given(any_matrix)
def test_rank_of_transpose(M):
    assert rank(M) == rank(transpose(M))


@settings(max_examples=200, deadline=None)
@given(any_matrix)
def test_rref_shape_and_pivots(M):
    R = rref(M)
    assert R.shape == M.shape
    assert rref(R) == R
    k = rank(M)
    assert all(all(x == 0 for x in R.row(i)) for i in range(k, R.rows))
    for i in range(k):
        j = next(j for j, x in enumerate(R.row(i)) if x != 0)
        assert R[i, j] == 1
        assert [R[t, j] for t in range(R.rows)].count(0) == R.rows - 1
    # same row space
    if M.rows and R.rows:
        assert rank(vstack(M, R)) == k


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_kernel_inclusion_lemma(data):
    X = data.draw(low_rank_matrices())
    k = data.draw(st.integers(0, 3))
    if data.draw(st.booleans()):
        # rows of Y drawn from the row space of X, so ker X ⊆ ker Y
        Y = data.draw(matrices(rows=k, cols=X.rows)) @ X if X.rows else Mat.zeros(k, X.cols)
    else:
        Y = data.draw(matrices(rows=k, cols=X.cols))
    inclusion = all(not any(Y.apply(v)) for v in kernel_basis(X).columns())
    assert (rank(vstack(X, Y)) == rank(X)) == inclusion


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_block_triangular_rank_lemma(data):
    r1 = data.draw(st.integers(0, 3))
    c1 = data.draw(st.integers(r1, 4))
    X = data.draw(matrices(rows=r1, cols=c1))
    c2 = data.draw(st.integers(0, 3))
    r2 = data.draw(st.integers(c2, 4))
    Y = data.draw(matrices(rows=r2, cols=c2))
    W = data.draw(matrices(rows=r1, cols=c2))
    full_row = rank(X) == X.rows
    full_col = rank(Y) == Y.cols
    if full_row or full_col:
        M = block([[X, W], [Mat.zeros(r2, c1), Y]])
        assert rank(M) == rank(X) + rank(Y)
