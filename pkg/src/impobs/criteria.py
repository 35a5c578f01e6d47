"""Impulse observability tests for descriptor systems.

Three families of checks live here:

* the published rank test comparing ``[[E, A], [0, E], [0, C], [0, L]]``
  with the same matrix minus its ``L`` rows (kept for comparison only; it
  accepts systems that are not partially impulse observable),
* I-observability, by rank and by Wong sequence,
* partial impulse observability (PIO) with respect to ``L``, by comparing
  ``rank F_l`` with ``rank F_{l,L}`` at ``l = n + 1`` and by checking
  ``W* ∩ Abar^{-1}(im Ebar) ⊆ ker L``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .pencil import DescriptorSystem, InvalidL, augment, build_F, darouach_lhs_rhs, iobs_matrix
from .ratmat import Mat, kernel_basis, rank
from .subspace import Subspace, kernel
from .wong import wong_limit_intersection, wong_sequence


class InternalInconsistency(RuntimeError):
    """Two criteria that must agree did not; always an implementation bug."""


def check_darouach(sys: DescriptorSystem) -> bool:
    lhs, rhs = darouach_lhs_rhs(sys)
    return rank(lhs) == rank(rhs)


def check_i_observability(sys: DescriptorSystem) -> bool:
    return rank(iobs_matrix(sys)) == sys.n + rank(sys.E)


def impulse_subspace(sys: DescriptorSystem) -> Subspace:
    """``W* ∩ Abar^{-1}(im Ebar)`` for the output-augmented pair."""
    aug = augment(sys)
    return wong_limit_intersection(aug.Ebar, aug.Abar)


def check_i_obs_wong(sys: DescriptorSystem) -> bool:
    return impulse_subspace(sys).dim == 0


def rank_pair(sys: DescriptorSystem, l: int) -> tuple[int, int]:
    return rank(build_F(sys, l)), rank(build_F(sys, l, with_L=True))


def check_pio_rank(sys: DescriptorSystem, l: int | None = None) -> bool:
    """``rank F_l == rank F_{l,L}``, with ``l = n + 1`` unless given.

    Any ``l >= n + 1`` gives the same verdict; smaller values are rejected.
    """
    if l is None:
        l = sys.n + 1
    elif l < sys.n + 1:
        raise InvalidL(f"block count must be at least n + 1 = {sys.n + 1}, got {l}")
    rF, rFL = rank_pair(sys, l)
    return rF == rFL


def check_pio_rank_fast(sys: DescriptorSystem) -> bool:
    """Rank test with the block count taken from the Wong sequence.

    Uses ``s + 1`` blocks, ``s`` being the stabilization index of the Wong
    sequence of ``(Ebar, Abar)``; this is usually far below ``n + 1``.
    """
    aug = augment(sys)
    s = wong_sequence(aug.Ebar, aug.Abar).stabilization_index
    rF, rFL = rank_pair(sys, s + 1)
    return rF == rFL


def check_pio_wong(sys: DescriptorSystem) -> bool:
    return kernel(sys.L).contains(impulse_subspace(sys))


def kernel_form_holds(sys: DescriptorSystem, l: int) -> bool:
    """Every kernel vector of ``F_l`` has block components ``2..l`` in ``ker L``."""
    K = kernel_basis(build_F(sys, l))
    n = sys.n
    for v in K.columns():
        for b in range(1, l):
            if any(x != 0 for x in sys.L.apply(v[b * n : (b + 1) * n])):
                return False
    return True


def extract_witness(sys: DescriptorSystem) -> Optional[tuple[Fraction, ...]]:
    """First canonical basis vector ``w`` of the impulse subspace with ``L w != 0``."""
    for w in impulse_subspace(sys).vectors():
        if any(x != 0 for x in sys.L.apply(w)):
            return w
    return None


@dataclass(frozen=True)
class ObservabilityReport:
    darouach_eq2: bool
    i_obs_rank: bool
    i_obs_wong: bool
    pio_rank: bool
    pio_wong: bool
    discrepancy_flag: bool
    witness: Optional[tuple[Fraction, ...]]
    rank_details: tuple[tuple[int, int, int], ...] = field(default=())
    l: int = 0

    def to_dict(self) -> dict:
        return {
            "darouach_eq2": self.darouach_eq2,
            "i_obs_rank": self.i_obs_rank,
            "i_obs_wong": self.i_obs_wong,
            "pio_rank": self.pio_rank,
            "pio_wong": self.pio_wong,
            "discrepancy_flag": self.discrepancy_flag,
            "witness": None if self.witness is None else [str(x) for x in self.witness],
            "rank_details": [list(row) for row in self.rank_details],
            "l": self.l,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ObservabilityReport":
        w = d["witness"]
        return cls(
            darouach_eq2=d["darouach_eq2"],
            i_obs_rank=d["i_obs_rank"],
            i_obs_wong=d["i_obs_wong"],
            pio_rank=d["pio_rank"],
            pio_wong=d["pio_wong"],
            discrepancy_flag=d["discrepancy_flag"],
            witness=None if w is None else tuple(Fraction(x) for x in w),
            rank_details=tuple(tuple(row) for row in d["rank_details"]),
            l=d["l"],
        )


def analyze(sys: DescriptorSystem, l: int | None = None) -> ObservabilityReport:
    """Run every check and cross-validate the ones that must agree.

    ``l`` sets the block count of the rank test (default ``n + 1``).
    ``rank_details`` lists ``(l, rank F_l, rank F_{l,L})`` for ``l = n+1..n+3``
    plus the chosen ``l`` if it lies outside that range.

    Raises:
        InternalInconsistency: if the rank and Wong forms of a criterion differ,
            or I-observability holds while PIO fails.
    """
    n = sys.n
    if l is None:
        l = n + 1
    elif l < n + 1:
        raise InvalidL(f"block count must be at least n + 1 = {n + 1}, got {l}")
    ls = sorted({n + 1, n + 2, n + 3, l})
    details = tuple((k, *rank_pair(sys, k)) for k in ls)
    chosen = next(d for d in details if d[0] == l)
    pio_rank = chosen[1] == chosen[2]

    darouach = check_darouach(sys)
    i_rank = check_i_observability(sys)
    i_wong = check_i_obs_wong(sys)
    pio_wong = check_pio_wong(sys)
    witness = extract_witness(sys)

    if pio_rank != pio_wong:
        raise InternalInconsistency(f"rank test says {pio_rank}, Wong test says {pio_wong}")
    if i_rank != i_wong:
        raise InternalInconsistency(f"I-observability: rank {i_rank}, Wong {i_wong}")
    if i_rank and not pio_rank:
        raise InternalInconsistency("I-observable system reported as not partially impulse observable")
    if (witness is None) != pio_wong:
        raise InternalInconsistency("witness presence does not match the verdict")

    return ObservabilityReport(
        darouach_eq2=darouach,
        i_obs_rank=i_rank,
        i_obs_wong=i_wong,
        pio_rank=pio_rank,
        pio_wong=pio_wong,
        discrepancy_flag=darouach != pio_rank,
        witness=witness,
        rank_details=details,
        l=l,
    )
