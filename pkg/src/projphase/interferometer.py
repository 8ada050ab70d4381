"""Projective-measurement interference: simulate fringes and extract the
projective phase from them.

One arm carries the initial state phase-shifted by ``e^{i chi}``, the other
the evolved state; both are projected onto the reference state and
recombined. The intensity over the phase-shifter settings is a cosine fringe
whose offset is the projective phase, recovered by a linear least-squares
fit (the model is exactly linear in the cosine/sine coefficients, so no
initialization or convergence issues exist).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import PhaseUnidentifiableError
from .phases import PhaseValue
from .statekit import StateVector, inner

MIN_VISIBILITY = 1e-6


def default_chi_grid(n: int = 16) -> np.ndarray:
    """Equally spaced phase-shifter settings over [0, 2*pi)."""
    return np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)


@dataclass(frozen=True)
class PoissonNoise:
    """Shot-noise model: counts at each setting are Poisson with mean
    ``counts_per_setting`` times the intensity."""

    counts_per_setting: int
    seed: int = 0


@dataclass(frozen=True, eq=False)
class Interferogram:
    """Recorded fringe: intensities over the phase-shifter grid.

    ``visibility`` and ``extracted_phase`` are empty until filled from
    :func:`extract_phase` (see :func:`with_extraction`). Noisy intensities
    are stored normalized by the counts per setting, so the fit is
    scale-free.
    """

    chi_grid: np.ndarray
    intensities: np.ndarray
    visibility: float | None = None
    extracted_phase: PhaseValue | None = None

    def __post_init__(self):
        chi = np.asarray(self.chi_grid, dtype=float)
        intens = np.asarray(self.intensities, dtype=float)
        if chi.shape != intens.shape or chi.ndim != 1:
            raise ValueError("chi_grid and intensities must be equal-length 1-d arrays")
        if np.any(intens < 0.0):
            raise ValueError("intensities must be non-negative")
        chi.flags.writeable = False
        intens.flags.writeable = False
        object.__setattr__(self, "chi_grid", chi)
        object.__setattr__(self, "intensities", intens)


def _validate_grid(chi: np.ndarray) -> None:
    distinct = np.unique(chi)
    if distinct.size < 3:
        raise ValueError(
            f"need at least 3 distinct phase-shifter settings, got {distinct.size} "
            "(phase unidentifiable)"
        )
    if float(distinct[-1] - distinct[0]) < math.pi:
        raise ValueError(
            f"settings span {float(distinct[-1] - distinct[0]):.3f} rad; "
            "at least pi is required"
        )


def simulate_fringe(
    psi0: StateVector,
    psi_t: StateVector,
    i: StateVector,
    chi_grid: np.ndarray | None = None,
    noise: PoissonNoise | None = None,
) -> Interferogram:
    """Intensity over the settings grid:
    ``I(chi) = |e^{i chi} <i|psi0> + <i|psi_t>|^2``.

    With ``noise``, each intensity is replaced by a Poisson draw with mean
    ``counts_per_setting * I``, normalized back by the counts.
    """
    chi = np.asarray(chi_grid, dtype=float) if chi_grid is not None else default_chi_grid()
    _validate_grid(chi)
    a = inner(i, psi0)
    b = inner(i, psi_t)
    intensities = np.abs(np.exp(1j * chi) * a + b) ** 2
    if noise is not None:
        if noise.counts_per_setting < 1:
            raise ValueError("counts_per_setting must be a positive integer")
        rng = np.random.default_rng(noise.seed)
        counts = rng.poisson(noise.counts_per_setting * intensities)
        intensities = counts / float(noise.counts_per_setting)
    return Interferogram(chi_grid=chi, intensities=intensities)


def extract_phase(g: Interferogram) -> tuple[PhaseValue, float]:
    """Least-squares fit of ``I(chi) = c0 + c1 cos(chi) + c2 sin(chi)``.

    Returns the phase ``atan2(c2, c1)`` and the visibility
    ``sqrt(c1^2 + c2^2)/c0``. Raises when the fringe is too flat for the
    phase to mean anything.
    """
    _validate_grid(g.chi_grid)
    design = np.column_stack(
        [np.ones_like(g.chi_grid), np.cos(g.chi_grid), np.sin(g.chi_grid)]
    )
    (c0, c1, c2), *_ = np.linalg.lstsq(design, g.intensities, rcond=None)
    if c0 < 1e-15:
        raise PhaseUnidentifiableError("fringe has (near-)zero mean intensity")
    visibility = math.hypot(c1, c2) / c0
    if visibility < MIN_VISIBILITY:
        raise PhaseUnidentifiableError(
            f"fringe visibility {visibility:.3e} below {MIN_VISIBILITY:.0e}; "
            "phase unidentifiable"
        )
    return PhaseValue.principal(math.atan2(c2, c1)), float(visibility)


def with_extraction(g: Interferogram) -> Interferogram:
    """Return a copy of ``g`` with visibility and extracted phase filled in."""
    phase, visibility = extract_phase(g)
    return replace(g, visibility=visibility, extracted_phase=phase)
