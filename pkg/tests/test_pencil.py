import pytest

from impobs.fixtures import counterexample, observable_example, underdetermined_example
from impobs.pencil import (
    DescriptorSystem,
    InvalidL,
    augment,
    build_F,
    darouach_lhs_rhs,
    iobs_matrix,
    shifted_L_block,
)
from impobs.ratmat import DimensionMismatch, Mat, rank, vstack
from impobs.sampling import system_corpus


def test_augmented_pair_layout():
    sys = counterexample()
    aug = augment(sys)
    assert aug.Ebar == vstack(sys.E, Mat.zeros(1, 3))
    assert aug.Abar == vstack(sys.A, sys.C)
    assert aug.Ebar1 == vstack(aug.Ebar, Mat.zeros(1, 3))
    assert aug.Abar1 == vstack(aug.Abar, sys.L)


def test_single_block_is_Ebar():
    sys = counterexample()
    aug = augment(sys)
    assert build_F(sys, 1) == aug.Ebar
    assert build_F(sys, 1, with_L=True) == aug.Ebar1


def test_block_layout_l3():
    sys = underdetermined_example()
    F = build_F(sys, 3)
    # block rows [Ebar Abar 0], [0 Ebar Abar], [0 0 Ebar]
    assert F == Mat(
        [
            [1, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0, 1],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 0],
        ]
    )


def test_example_ranks():
    assert rank(build_F(underdetermined_example(), 3)) == 4
    assert rank(build_F(underdetermined_example(), 3, with_L=True)) == 5
    assert rank(build_F(counterexample(), 4)) == 9
    assert rank(build_F(counterexample(), 4, with_L=True)) == 10
    assert rank(build_F(observable_example(), 4)) == 11
    assert rank(build_F(observable_example(), 4, with_L=True)) == 11


def test_invalid_block_count():
    with pytest.raises(InvalidL):
        build_F(counterexample(), 0)


def test_darouach_matrices():
    lhs, rhs = darouach_lhs_rhs(counterexample())
    assert lhs.shape == (8, 6) and rhs.shape == (7, 6)
    # both equal 4 (checked against sympy); the condition holds
    assert rank(lhs) == rank(rhs) == 4
    no_L = counterexample().with_L(Mat.zeros(1, 3))
    lhs, rhs = darouach_lhs_rhs(no_L)
    assert rank(lhs) == rank(rhs)
    lhs, rhs = darouach_lhs_rhs(underdetermined_example())
    assert (rank(lhs), rank(rhs)) == (3, 2)


def test_iobs_matrix():
    sys = observable_example()
    assert rank(iobs_matrix(sys)) == 5 == sys.n + rank(sys.E)
    ode = DescriptorSystem.from_lists([[1, 0], [0, 1]], [[2, 1], [0, -1]], [], [], n=2)
    assert rank(iobs_matrix(ode)) == 2 * ode.n
    sys = counterexample()
    assert rank(iobs_matrix(sys)) == 4 != sys.n + rank(sys.E)


def test_system_validation():
    with pytest.raises(DimensionMismatch):
        DescriptorSystem(Mat.identity(2), Mat.identity(3), Mat.zeros(0, 2), Mat.zeros(0, 2))
    with pytest.raises(DimensionMismatch):
        DescriptorSystem(Mat.identity(2), Mat.identity(2), Mat.zeros(1, 3), Mat.zeros(0, 2))
    sys = DescriptorSystem.from_lists([], [], [], [[1]], n=1)
    assert (sys.m, sys.n, sys.p, sys.r) == (0, 1, 0, 1)


@pytest.mark.parametrize("seed", range(3))
def test_shapes_and_permutation_identity(seed):
    for sys in system_corpus(100 + seed, 40):
        h = sys.m + sys.p
        for l in (1, 2, sys.n + 1):
            F = build_F(sys, l)
            assert F.shape == (l * h, l * sys.n)
            FL = build_F(sys, l, with_L=True)
            assert FL.shape == (l * (h + sys.r), l * sys.n)
            assert rank(FL) == rank(vstack(F, shifted_L_block(sys, l)))


@pytest.mark.parametrize("seed", range(3))
def test_rank_increments_settle(seed):
    for sys in system_corpus(200 + seed, 40):
        n = sys.n
        ranks = [rank(build_F(sys, l)) for l in range(n + 1, n + 4)]
        assert ranks[1] - ranks[0] == ranks[2] - ranks[1]
