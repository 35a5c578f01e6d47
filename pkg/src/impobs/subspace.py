"""Subspaces of Q^n held as canonical basis matrices.

The canonical basis of a subspace is the transpose of the reduced row echelon
form of its spanning vectors, so two subspaces are equal exactly when their
basis matrices are equal entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ratmat import DimensionMismatch, Mat, hstack, kernel_basis, matmul, rank, rref_with_pivots, transpose


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: Mat

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise DimensionMismatch(
                f"basis has {self.basis.rows} rows, ambient dimension is {self.ambient_dim}"
            )

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self):
        return self.basis.columns()

    def contains(self, other: "Subspace") -> bool:
        return contains(self, other)

    def __le__(self, other: "Subspace") -> bool:
        return contains(other, self)

    def __ge__(self, other: "Subspace") -> bool:
        return contains(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __repr__(self) -> str:
        vecs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vectors())
        return f"Subspace(dim {self.dim} in Q^{self.ambient_dim}: span{{{vecs}}})"


def span(M: Mat) -> Subspace:
    """Canonical subspace spanned by the columns of ``M``."""
    R, pivots = rref_with_pivots(transpose(M))
    return Subspace(M.rows, transpose(R.submatrix(range(len(pivots)), range(R.cols))))


image = span


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, Mat.zeros(n, 0))


def full_space(n: int) -> Subspace:
    return Subspace(n, Mat.identity(n))


def kernel(A: Mat) -> Subspace:
    return span(kernel_basis(A))


def _check_same_ambient(S: Subspace, T: Subspace) -> None:
    if S.ambient_dim != T.ambient_dim:
        raise DimensionMismatch(
            f"subspaces live in Q^{S.ambient_dim} and Q^{T.ambient_dim}"
        )


def map_subspace(A: Mat, S: Subspace) -> Subspace:
    """The image ``A S`` of a subspace under ``A``."""
    if A.cols != S.ambient_dim:
        raise DimensionMismatch(f"map {A.shape} applied to a subspace of Q^{S.ambient_dim}")
    return span(matmul(A, S.basis))


def preimage(A: Mat, S: Subspace) -> Subspace:
    """``{x : A x in S}``."""
    if S.ambient_dim != A.rows:
        raise DimensionMismatch(
            f"preimage under {A.shape} needs a subspace of Q^{A.rows}, got Q^{S.ambient_dim}"
        )
    K = kernel_basis(hstack(A, -S.basis))
    return span(K.submatrix(range(A.cols), range(K.cols)))


def intersect(S: Subspace, T: Subspace) -> Subspace:
    _check_same_ambient(S, T)
    K = kernel_basis(hstack(S.basis, -T.basis))
    coeffs = K.submatrix(range(S.dim), range(K.cols))
    return span(matmul(S.basis, coeffs))


def subspace_sum(S: Subspace, T: Subspace) -> Subspace:
    _check_same_ambient(S, T)
    return span(hstack(S.basis, T.basis))


def contains(S: Subspace, T: Subspace) -> bool:
    """True when ``T`` is a subspace of ``S``."""
    _check_same_ambient(S, T)
    if T.dim == 0:
        return True
    return rank(hstack(S.basis, T.basis)) == S.dim


def equals(S: Subspace, T: Subspace) -> bool:
    _check_same_ambient(S, T)
    return S.basis == T.basis


def dim(S: Subspace) -> int:
    return S.dim
