"""Global numeric policy: tolerances, rank cutoffs, and the complex sample lattice.

Every "for all lambda in C" quantifier in the deciders is realized on a finite
lattice of complex numbers: log-spaced magnitudes times equispaced phases, plus
seeded pseudo-random points.  The lattice is closed under negation so that
sign-symmetric identities are probed symmetrically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_SEED = 12345


def _build_lattice(
    mag_exponents: tuple[int, int],
    n_phases: int,
    n_random: int,
    seed: int,
) -> tuple[complex, ...]:
    k_lo, k_hi = mag_exponents
    mags = 2.0 ** np.arange(k_lo, k_hi + 1)
    phases = np.exp(2j * np.pi * np.arange(n_phases) / n_phases)
    grid = (mags[:, None] * phases[None, :]).ravel()
    rng = np.random.default_rng(seed & 0xFFFFFFFFFFFFFFFF)
    half = n_random // 2
    rand = rng.standard_normal(half) + 1j * rng.standard_normal(half)
    pts = np.concatenate([grid, rand, -rand])
    return tuple(complex(z) for z in pts)


@dataclass(frozen=True)
class ToleranceConfig:
    """Numeric policy shared by all deciders.

    eps_eq      relative tolerance for algebraic identities (eigensolver grade)
    eps_opt     tolerance for optimization-mediated equalities
    eps_rank    relative singular-value cutoff for numeric rank
    phase_grid  number of angles for phase / support-function scans
    rng_seed    seed for every derived pseudo-random draw
    """

    eps_eq: float = 1e-9
    eps_opt: float = 1e-6
    eps_rank: float = 1e-10
    phase_grid: int = 360
    rng_seed: int = DEFAULT_SEED
    lattice_mag_exponents: tuple[int, int] = (-8, 8)
    lattice_phases: int = 24
    lattice_random: int = 64
    lambda_lattice: tuple[complex, ...] = field(default=(), repr=False)

    def __post_init__(self) -> None:
        if min(self.eps_eq, self.eps_opt, self.eps_rank) <= 0:
            raise ValueError("tolerances must be strictly positive")
        if not self.lambda_lattice:
            lattice = _build_lattice(
                self.lattice_mag_exponents,
                self.lattice_phases,
                self.lattice_random,
                self.rng_seed,
            )
            object.__setattr__(self, "lambda_lattice", lattice)
        if not self.lambda_lattice:
            raise ValueError("lambda lattice must be nonempty")
        pts = np.asarray(self.lambda_lattice)
        dists = np.abs(pts[:, None] + pts[None, :]).min(axis=1)
        if dists.max() > 1e-12 * (1.0 + np.abs(pts).max()):
            raise ValueError("lambda lattice must be closed under negation")

    def rng(self, *extra_keys: int) -> np.random.Generator:
        """Deterministic generator derived from the seed plus context keys."""
        keys = [k & 0xFFFFFFFFFFFFFFFF for k in (self.rng_seed, *extra_keys)]
        return np.random.default_rng(np.random.SeedSequence(keys))


DEFAULT_CONFIG = ToleranceConfig()
