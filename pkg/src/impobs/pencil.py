"""Descriptor systems ``E x' = A x, y = C x, z = L x`` and their stacked matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ratmat import DimensionMismatch, Mat, Scalar, block_diag, hstack, vstack


class InvalidL(ValueError):
    """Raised for a block count below one."""


def _as_mat(M, cols: int | None = None) -> Mat:
    if isinstance(M, Mat):
        return M
    M = list(M)
    if not M:
        if cols is None:
            raise ValueError("cannot infer the width of an empty matrix")
        return Mat.zeros(0, cols)
    return Mat(M)


@dataclass(frozen=True)
class DescriptorSystem:
    E: Mat
    A: Mat
    C: Mat
    L: Mat

    def __post_init__(self):
        if self.E.shape != self.A.shape:
            raise DimensionMismatch(f"E is {self.E.shape} but A is {self.A.shape}")
        if self.E.cols < 1:
            raise DimensionMismatch("the semistate must have at least one component")
        if self.C.cols != self.n:
            raise DimensionMismatch(f"C is {self.C.shape}, expected {self.n} columns")
        if self.L.cols != self.n:
            raise DimensionMismatch(f"L is {self.L.shape}, expected {self.n} columns")

    @classmethod
    def from_lists(
        cls,
        E: Sequence[Sequence[Scalar]],
        A: Sequence[Sequence[Scalar]],
        C: Sequence[Sequence[Scalar]] = (),
        L: Sequence[Sequence[Scalar]] = (),
        n: int | None = None,
    ) -> "DescriptorSystem":
        """Build from nested lists; ``n`` is needed only when ``E`` has no rows."""
        if n is None:
            if not E:
                raise ValueError("n must be given when E has no rows")
            n = len(E[0])
        return cls(_as_mat(E, n), _as_mat(A, n), _as_mat(C, n), _as_mat(L, n))

    @property
    def m(self) -> int:
        return self.E.rows

    @property
    def n(self) -> int:
        return self.E.cols

    @property
    def p(self) -> int:
        return self.C.rows

    @property
    def r(self) -> int:
        return self.L.rows

    def transformed(self, P: Mat, Q: Mat) -> "DescriptorSystem":
        """The equivalent system ``(P E Q, P A Q, C Q, L Q)``."""
        return DescriptorSystem(P @ self.E @ Q, P @ self.A @ Q, self.C @ Q, self.L @ Q)

    def with_L(self, L: Mat) -> "DescriptorSystem":
        return DescriptorSystem(self.E, self.A, self.C, L)


@dataclass(frozen=True)
class AugmentedPair:
    Ebar: Mat
    Abar: Mat
    Ebar1: Mat
    Abar1: Mat


def augment(sys: DescriptorSystem) -> AugmentedPair:
    Ebar = vstack(sys.E, Mat.zeros(sys.p, sys.n))
    Abar = vstack(sys.A, sys.C)
    return AugmentedPair(
        Ebar=Ebar,
        Abar=Abar,
        Ebar1=vstack(Ebar, Mat.zeros(sys.r, sys.n)),
        Abar1=vstack(Abar, sys.L),
    )


def block_bidiagonal(diag: Mat, upper: Mat, l: int) -> Mat:
    """``l x l`` block matrix with ``diag`` on the diagonal and ``upper`` just above it."""
    if l < 1:
        raise InvalidL(f"block count must be at least 1, got {l}")
    if diag.shape != upper.shape:
        raise DimensionMismatch(f"diagonal block {diag.shape} vs superdiagonal block {upper.shape}")
    h, w = diag.shape
    rows = []
    for i in range(l):
        parts = [Mat.zeros(h, w * i), diag]
        if i + 1 < l:
            parts.append(upper)
            parts.append(Mat.zeros(h, w * (l - i - 2)))
        rows.append(hstack(*parts))
    return vstack(*rows)


def build_F(sys: DescriptorSystem, l: int, with_L: bool = False) -> Mat:
    """The block matrix ``F_l`` (or ``F_{l,L}`` when ``with_L``).

    Block row ``i < l`` holds ``Ebar`` in block column ``i`` and ``Abar`` in
    block column ``i + 1``; the last block row holds only ``Ebar``. The result
    has ``l (m + p [+ r])`` rows and ``l n`` columns.
    """
    aug = augment(sys)
    if with_L:
        return block_bidiagonal(aug.Ebar1, aug.Abar1, l)
    return block_bidiagonal(aug.Ebar, aug.Abar, l)


def shifted_L_block(sys: DescriptorSystem, l: int) -> Mat:
    """``l - 1`` block rows ``[0 L 0 ...], ..., [0 ... 0 L]`` over ``l`` block columns."""
    if l < 1:
        raise InvalidL(f"block count must be at least 1, got {l}")
    if l == 1:
        return Mat.zeros(0, sys.n)
    return hstack(Mat.zeros((l - 1) * sys.r, sys.n), block_diag(*[sys.L] * (l - 1)))


def darouach_lhs_rhs(sys: DescriptorSystem) -> tuple[Mat, Mat]:
    """The two matrices compared by the published rank test.

    Returns ``[[E, A], [0, E], [0, C], [0, L]]`` and ``[[E, A], [0, E], [0, C]]``.
    """
    rhs = iobs_matrix(sys)
    lhs = vstack(rhs, hstack(Mat.zeros(sys.r, sys.n), sys.L))
    return lhs, rhs


def iobs_matrix(sys: DescriptorSystem) -> Mat:
    """``[[E, A], [0, E], [0, C]]``; I-observable iff its rank is ``n + rank E``."""
    n = sys.n
    return vstack(
        hstack(sys.E, sys.A),
        hstack(Mat.zeros(sys.m, n), sys.E),
        hstack(Mat.zeros(sys.p, n), sys.C),
    )
