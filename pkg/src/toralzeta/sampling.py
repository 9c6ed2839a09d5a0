"""Seeded random lattice bases for property checks and the CLI."""

from __future__ import annotations

import numpy as np

_COND_CAP = 40.0
_DET_FLOOR = 0.2


def random_basis(n: int, rng: np.random.Generator,
                 cond_cap: float = _COND_CAP) -> np.ndarray:
    """Well-conditioned random real basis (rejection-sampled Gaussian)."""
    while True:
        g = rng.normal(size=(n, n))
        if abs(np.linalg.det(g)) >= _DET_FLOOR and np.linalg.cond(g) <= cond_cap:
            return g


def random_unimodular_basis(n: int, rng: np.random.Generator,
                            cond_cap: float = _COND_CAP) -> np.ndarray:
    """Random basis of a covolume-1 lattice: Gaussian, then det-normalised."""
    g = random_basis(n, rng, cond_cap)
    return g / abs(np.linalg.det(g)) ** (1.0 / n)


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.PCG64(seed))
