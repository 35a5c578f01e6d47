"""Small reference systems with known verdicts."""

from __future__ import annotations

from .kcf import KcfSpec, KcfSystem
from .pencil import DescriptorSystem
from .ratmat import Mat

SHIFT3 = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
EYE3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def counterexample() -> DescriptorSystem:
    """Regular nilpotent system that passes the published rank test but is not PIO.

    ``C E = C E^2 = 0`` hides every impulse from ``y`` while ``z = x_2`` sees
    ``-delta (x_3(0-))``.
    """
    return DescriptorSystem.from_lists(SHIFT3, EYE3, [[0, 0, 1]], [[0, 1, 0]])


def underdetermined_example() -> DescriptorSystem:
    """``x1' = x2`` with ``y = x1``, ``z = x2``: ``x2 = delta`` is invisible in ``y``."""
    return DescriptorSystem.from_lists([[1, 0]], [[0, 1]], [[1, 0]], [[0, 1]])


def observable_example() -> DescriptorSystem:
    """Same pencil as :func:`counterexample` with ``y = x_1``; PIO w.r.t. ``z = x_2``."""
    return DescriptorSystem.from_lists(SHIFT3, EYE3, [[1, 0, 0]], [[0, 1, 0]])


def counterexample_kcf() -> KcfSystem:
    return KcfSystem(KcfSpec(sigma_sizes=(3,)), Mat([[0, 0, 1]]), Mat([[0, 1, 0]]))


def underdetermined_kcf() -> KcfSystem:
    return KcfSystem(KcfSpec(epsilon_sizes=(1,)), Mat([[1, 0]]), Mat([[0, 1]]))


def observable_kcf() -> KcfSystem:
    return KcfSystem(KcfSpec(sigma_sizes=(3,)), Mat([[1, 0, 0]]), Mat([[0, 1, 0]]))
