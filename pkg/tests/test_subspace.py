import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import low_rank_matrices, matrices
from impobs.fixtures import counterexample
from impobs.pencil import augment
from impobs.ratmat import DimensionMismatch, Mat, rank
from impobs.subspace import (
    contains,
    equals,
    full_space,
    image,
    intersect,
    kernel,
    map_subspace,
    preimage,
    span,
    subspace_sum,
    zero_subspace,
)


def e(i, n):
    return [1 if k == i else 0 for k in range(n)]


def span_of(*vecs, n):
    return span(Mat(list(zip(*vecs)), cols=len(vecs)) if vecs else Mat.zeros(n, 0))


def test_image_examples():
    assert image(Mat.identity(3)) == full_space(3)
    aug = augment(counterexample())
    im = image(aug.Ebar)
    assert im.dim == 2
    assert im == span_of(e(0, 4), e(1, 4), n=4)
    assert image(Mat.zeros(3, 2)) == zero_subspace(3)


def test_kernel_examples():
    L = counterexample().L
    assert kernel(L) == span_of(e(0, 3), e(2, 3), n=3)
    assert kernel(Mat.identity(3)) == zero_subspace(3)
    assert kernel(Mat.zeros(1, 2)) == full_space(2)


def test_preimage_examples():
    S = span_of([1, 2, 0], n=3)
    assert preimage(Mat.identity(3), S) == S
    A = Mat([[1, 1, 0], [0, 0, 1]])
    assert preimage(A, zero_subspace(2)) == kernel(A)
    aug = augment(counterexample())
    assert preimage(aug.Abar, image(aug.Ebar)) == span_of(e(0, 3), e(1, 3), n=3)


def test_intersect_examples():
    S = span_of([1, 1, 0], n=3)
    assert intersect(S, full_space(3)) == S
    assert intersect(span_of(e(0, 3), n=3), span_of(e(1, 3), n=3)) == zero_subspace(3)
    e12 = span_of(e(0, 3), e(1, 3), n=3)
    assert intersect(full_space(3), e12) == e12


def test_contains_examples():
    S = span_of([1, 2, 3], n=3)
    assert contains(S, zero_subspace(3))
    L = counterexample().L
    assert not contains(kernel(L), span_of(e(0, 3), e(1, 3), n=3))
    assert equals(S, S)


def test_canonical_form_is_unique():
    a = span_of([1, 1, 0], [0, 1, 1], n=3)
    b = span_of([2, 3, 1], [1, 0, -1], [3, 3, 0], n=3)
    assert a == b
    assert a.basis == b.basis


def test_ambient_mismatch():
    with pytest.raises(DimensionMismatch):
        intersect(full_space(2), full_space(3))
    with pytest.raises(DimensionMismatch):
        preimage(Mat.identity(2), full_space(3))


subspaces = st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        matrices(rows=n, max_cols=4),
        matrices(rows=n, max_cols=4),
        matrices(rows=n, max_cols=4),
    )
)


@settings(max_examples=150, deadline=None)
@given(subspaces)
def test_grassmann_identity(args):
    _, X, Y, _ = args
    S, T = span(X), span(Y)
    assert intersect(S, T).dim + subspace_sum(S, T).dim == S.dim + T.dim
    assert rank(S.basis) == S.dim


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_preimage_of_image_contains(data):
    n = data.draw(st.integers(1, 5))
    A = data.draw(st.one_of(matrices(cols=n), low_rank_matrices().filter(lambda M: M.cols == n)))
    X = data.draw(matrices(rows=n, max_cols=4))
    assert contains(preimage(A, image(A @ X)), image(X))
    assert preimage(A, map_subspace(A, image(X))) == subspace_sum(image(X), kernel(A))


@settings(max_examples=150, deadline=None)
@given(subspaces)
def test_containment_is_a_partial_order(args):
    n, X, Y, Z = args
    S, T = span(X), span(Y)
    U = subspace_sum(S, T)
    W = subspace_sum(U, span(Z))
    assert contains(S, S)
    assert contains(U, S) and contains(U, T) and contains(W, U)
    assert contains(W, S)
    if contains(S, T) and contains(T, S):
        assert S == T
    assert (S <= U) and (U >= T)
