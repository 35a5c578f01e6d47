import pytest

from impobs.fixtures import counterexample, underdetermined_example
from impobs.pencil import augment
from impobs.ratmat import DimensionMismatch, Mat
from impobs.sampling import system_corpus
from impobs.subspace import full_space, span, zero_subspace
from impobs.wong import wong_limit_intersection, wong_sequence, wong_step


def test_invertible_E_has_trivial_limit():
    seq = wong_sequence(Mat.identity(3), Mat.identity(3))
    assert seq.limit == zero_subspace(3)
    assert seq.stabilization_index == 0
    assert wong_limit_intersection(Mat.identity(3), Mat.identity(3)) == zero_subspace(3)


def test_counterexample_trace():
    aug = augment(counterexample())
    seq = wong_sequence(aug.Ebar, aug.Abar)
    assert seq.dims == [0, 1, 2, 3]
    assert seq.stabilization_index == 3
    assert seq.steps[1] == span(Mat([[1], [0], [0]]))
    assert seq.steps[2] == span(Mat([[1, 0], [0, 1], [0, 0]]))
    assert seq.limit == full_space(3)
    assert wong_limit_intersection(aug.Ebar, aug.Abar) == span(Mat([[1, 0], [0, 1], [0, 0]]))


def test_underdetermined_trace():
    aug = augment(underdetermined_example())
    assert aug.Ebar == Mat([[1, 0], [0, 0]])
    assert aug.Abar == Mat([[0, 1], [1, 0]])
    seq = wong_sequence(aug.Ebar, aug.Abar)
    assert seq.dims == [0, 1, 2]
    assert seq.steps[1] == span(Mat([[0], [1]]))
    assert seq.limit == full_space(2)
    assert wong_limit_intersection(aug.Ebar, aug.Abar) == span(Mat([[0], [1]]))


def test_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        wong_sequence(Mat.identity(2), Mat.identity(3))


@pytest.mark.parametrize("seed", range(4))
def test_sequence_properties_on_random_pairs(seed):
    for sys in system_corpus(seed, 60):
        aug = augment(sys)
        seq = wong_sequence(aug.Ebar, aug.Abar)
        for a, b in zip(seq.steps, seq.steps[1:]):
            assert b.contains(a) and b.dim > a.dim
        assert wong_step(aug.Ebar, aug.Abar, seq.limit) == seq.limit
        assert seq.stabilization_index <= sys.n
        W = seq.steps[0]
        for _ in range(sys.n):
            W = wong_step(aug.Ebar, aug.Abar, W)
        assert W == seq.limit
