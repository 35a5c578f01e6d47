"""Second Wong sequence of a matrix pair.

W^0 = {0},  W^{i+1} = E^{-1}(A W^i).

The iteration is monotone and stops once two consecutive subspaces agree;
each step before that gains at least one dimension, so at most ``n`` steps
are taken for ``E, A`` with ``n`` columns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ratmat import DimensionMismatch, Mat
from .subspace import Subspace, image, intersect, map_subspace, preimage, zero_subspace


@dataclass(frozen=True)
class WongSequence:
    steps: tuple[Subspace, ...]  # W^0, ..., W^s
    stabilization_index: int  # least i with W^{i+1} == W^i
    limit: Subspace

    @property
    def dims(self) -> list[int]:
        return [W.dim for W in self.steps]


def wong_step(E: Mat, A: Mat, W: Subspace) -> Subspace:
    return preimage(E, map_subspace(A, W))


def wong_sequence(E: Mat, A: Mat) -> WongSequence:
    if E.shape != A.shape:
        raise DimensionMismatch(f"E is {E.shape} but A is {A.shape}")
    steps = [zero_subspace(E.cols)]
    while True:
        nxt = wong_step(E, A, steps[-1])
        if nxt == steps[-1]:
            break
        steps.append(nxt)
    return WongSequence(tuple(steps), len(steps) - 1, steps[-1])


def wong_limit_intersection(E: Mat, A: Mat) -> Subspace:
    """``W* ∩ A^{-1}(im E)`` for the pair ``(E, A)``."""
    W = wong_sequence(E, A).limit
    return intersect(W, preimage(A, image(E)))
