"""Seeded random generators for property checks.

Entries are drawn from ``{-2, ..., 2}`` with zero taking half of the mass,
which makes rank-deficient ``E`` and singular pencils common.
"""

from __future__ import annotations

import random
from typing import Iterator

from .kcf import KcfSpec, KcfSystem
from .pencil import DescriptorSystem
from .ratmat import Mat, is_invertible

VALUES = (0, 0, 0, 0, -2, -1, 1, 2)


def random_matrix(rng: random.Random, rows: int, cols: int, values=VALUES) -> Mat:
    return Mat([[rng.choice(values) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_system(
    rng: random.Random, max_m: int = 5, max_n: int = 5, max_p: int = 2, max_r: int = 2
) -> DescriptorSystem:
    m, n = rng.randint(1, max_m), rng.randint(1, max_n)
    p, r = rng.randint(0, max_p), rng.randint(0, max_r)
    return DescriptorSystem(
        random_matrix(rng, m, n), random_matrix(rng, m, n), random_matrix(rng, p, n), random_matrix(rng, r, n)
    )


def system_corpus(seed: int, count: int, **kw) -> Iterator[DescriptorSystem]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_system(rng, **kw)


def random_invertible(rng: random.Random, n: int) -> Mat:
    while True:
        M = random_matrix(rng, n, n, values=(-2, -1, 0, 1, 2))
        if is_invertible(M):
            return M


def random_kcf_spec(rng: random.Random, max_n: int = 6) -> KcfSpec:
    while True:
        spec = KcfSpec(
            epsilon_sizes=tuple(rng.randint(0, 2) for _ in range(rng.randint(0, 2))),
            finite_jordan=tuple((rng.choice((-1, 0, 1, 2)), rng.randint(1, 2)) for _ in range(rng.randint(0, 1))),
            sigma_sizes=tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 2))),
            eta_sizes=tuple(rng.randint(0, 2) for _ in range(rng.randint(0, 1))),
        )
        if 1 <= spec.n <= max_n:
            return spec


def random_kcf_system(rng: random.Random, max_n: int = 6, max_p: int = 2, max_r: int = 2) -> KcfSystem:
    spec = random_kcf_spec(rng, max_n)
    n = spec.n
    return KcfSystem(
        spec,
        random_matrix(rng, rng.randint(0, max_p), n),
        random_matrix(rng, rng.randint(0, max_r), n),
    )


def random_nilpotent_jordan(rng: random.Random, max_n: int = 6) -> tuple[int, ...]:
    """Block sizes of a random nilpotent Jordan matrix of total size ``<= max_n``."""
    sizes: list[int] = []
    total = rng.randint(1, max_n)
    while total:
        k = rng.randint(1, total)
        sizes.append(k)
        total -= k
    return tuple(sizes)
