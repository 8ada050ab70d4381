"""Core state algebra: complex unit vectors, ray-space geodesics, connection sampling.

States are stored as concrete amplitude vectors (a gauge representative),
never as rays; ray-level quantities are exposed only through gauge-invariant
operations in the sibling modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, OrthogonalStatesError, RefinementNeededError

# Global orthogonality cutoff: below this overlap magnitude, geodesics and
# projective phases are declared undefined. Single cutoff keeps error behavior
# predictable across modules; operations accept a per-call override.
ORTHO_EPS = 1e-10

NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit-norm complex amplitude vector over an n-dimensional Hilbert space.

    Carries the physical phase: ``e^{ia}|psi>`` and ``|psi>`` are distinct
    StateVectors representing the same ray.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size < 2:
            raise ValueError(f"state dimension must be >= 2, got {amps.size}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state norm {norm!r} deviates from 1 by more than {NORM_TOL}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def normalized(cls, amplitudes) -> "StateVector":
        """Build a state from an arbitrary nonzero amplitude vector."""
        amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(amps)
        if norm == 0.0:
            raise ValueError("cannot normalize a zero vector")
        return cls(amps / norm)

    def phased(self, alpha: float) -> "StateVector":
        """Return ``e^{i*alpha}`` times this state (same ray, new gauge)."""
        return StateVector(np.exp(1j * alpha) * self.amplitudes)

    def __repr__(self):
        return f"StateVector({np.array2string(self.amplitudes, precision=6)})"


def basis_state(dim: int, index: int) -> StateVector:
    """Computational basis vector ``|index>`` in ``dim`` dimensions."""
    amps = np.zeros(dim, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(amps)


def random_state(dim: int, rng: np.random.Generator) -> StateVector:
    """Haar-random state: normalized vector of i.i.d. complex Gaussians."""
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector.normalized(z)


def inner(a: StateVector, b: StateVector) -> complex:
    """Hermitian inner product ``<a|b>`` (conjugate-linear in ``a``)."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


@dataclass(frozen=True, eq=False)
class Geodesic:
    """Shortest ray-space geodesic between two non-orthogonal states.

    ``endpoint_b_lifted`` is the parallel lift of the second endpoint:
    ``<a|b_lifted>`` is real and strictly positive, so interpolation along the
    geodesic accumulates no connection. ``arc_angle`` is the ray-space angle,
    ``cos(arc_angle) = |<a|b>|``, in ``[0, pi/2)``.
    """

    endpoint_a: StateVector
    endpoint_b_lifted: StateVector
    arc_angle: float

    @classmethod
    def between(cls, a: StateVector, b: StateVector, eps: float = ORTHO_EPS) -> "Geodesic":
        ov = inner(a, b)
        mag = abs(ov)
        if mag < eps:
            raise OrthogonalStatesError(
                f"geodesic undefined: endpoint overlap {mag:.3e} below {eps:.0e} "
                "(orthogonal endpoints)",
                overlap=mag,
            )
        lifted = b.phased(-math.atan2(ov.imag, ov.real))
        theta = math.acos(min(mag, 1.0))
        return cls(endpoint_a=a, endpoint_b_lifted=lifted, arc_angle=theta)


def geodesic_point(g: Geodesic, s: float) -> StateVector:
    """Point at parameter ``s`` in [0, 1] along the geodesic.

    Sine interpolation in the parallel-lift gauge:
    ``[sin((1-s)T)|a> + sin(sT)|b_lifted>] / sin(T)``, renormalized.
    Degenerate geodesics (T = 0) return ``|a>`` for every ``s``.
    """
    theta = g.arc_angle
    if theta == 0.0:
        return g.endpoint_a
    a = g.endpoint_a.amplitudes
    b = g.endpoint_b_lifted.amplitudes
    v = math.sin((1.0 - s) * theta) * a + math.sin(s * theta) * b
    return StateVector.normalized(v)


def connection_increment(a: StateVector, b: StateVector, eps: float = ORTHO_EPS) -> float:
    """Discrete connection sample ``arg<a|b>`` in (-pi, pi].

    For successive samples of a smooth path this approximates the line
    integral of the connection over the step to second order in the step.
    """
    ov = inner(a, b)
    mag = abs(ov)
    if mag < eps:
        raise RefinementNeededError(
            f"successive samples nearly orthogonal (overlap {mag:.3e}); "
            "refine the discretization"
        )
    ang = math.atan2(ov.imag, ov.real)
    if ang <= -math.pi:
        ang += 2.0 * math.pi
    return ang


def parallel_transport(states: list[StateVector], eps: float = ORTHO_EPS) -> list[StateVector]:
    """Rephase a sampled path so every adjacent overlap is real positive.

    The first state keeps its gauge; the rest are multiplied by unit phasors
    so that ``<out[k]|out[k+1]>`` has zero argument. Requires adjacent
    overlaps above ``eps``.
    """
    if not states:
        return []
    out = [states[0]]
    for nxt in states[1:]:
        ov = inner(out[-1], nxt)
        mag = abs(ov)
        if mag < eps:
            raise RefinementNeededError(
                f"adjacent samples nearly orthogonal (overlap {mag:.3e}); "
                "refine the discretization"
            )
        out.append(nxt.phased(-math.atan2(ov.imag, ov.real)))
    return out
