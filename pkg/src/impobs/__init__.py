"""Exact impulse observability tests for linear descriptor systems."""

from .criteria import (
    InternalInconsistency,
    ObservabilityReport,
    analyze,
    check_darouach,
    check_i_obs_wong,
    check_i_observability,
    check_pio_rank,
    check_pio_wong,
    extract_witness,
)
from .kcf import KcfSpec, KcfSystem, assemble, check_thm1, oracle_pio
from .pencil import DescriptorSystem, build_F
from .ratmat import DimensionMismatch, Mat, kernel_basis, rank, rref
from .subspace import Subspace
from .wong import wong_sequence

__all__ = [
    "DescriptorSystem",
    "DimensionMismatch",
    "InternalInconsistency",
    "KcfSpec",
    "KcfSystem",
    "Mat",
    "ObservabilityReport",
    "Subspace",
    "analyze",
    "assemble",
    "build_F",
    "check_darouach",
    "check_i_obs_wong",
    "check_i_observability",
    "check_pio_rank",
    "check_pio_wong",
    "check_thm1",
    "extract_witness",
    "kernel_basis",
    "oracle_pio",
    "rank",
    "rref",
    "wong_sequence",
]
