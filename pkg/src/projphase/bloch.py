"""Two-state specialization: Bloch coordinates, monopole-type gauge
potentials in the two coverings of the sphere, curvature line integrals,
and exact solid angles of geodesic polygons.

Conventions
-----------
* Chart: ``|theta,phi> = cos(theta/2) e^{-i phi/2} |up> + sin(theta/2) e^{+i phi/2} |down>``.
  The half-angle phases make the chart double-valued under
  ``phi -> phi + 2 pi`` (state-level sign flip); compare rays, not amplitudes.
* ``phi`` is carried as an unbounded real along paths: winding in ``phi`` is
  exactly the topological content, so wrapping is applied only for display.
* Solid-angle orientation: positive for a loop traversed clockwise as seen
  from outside the sphere. With this choice the three-vertex Bargmann
  invariant equals ``-solid_angle/2`` exactly, and a constant-latitude loop
  of increasing ``phi`` around the north pole has negative area, matching the
  negative curvature flux of the ``up`` covering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CoveringViolationError, PreconditionError
from .statekit import StateVector

UP = "up"
DOWN = "down"

POLE_MARGIN = 1e-6


@dataclass(frozen=True)
class BlochPoint:
    """Point on the two-state sphere: polar ``theta`` in [0, pi], azimuth
    ``phi`` unbounded (tracked continuously along paths)."""

    theta: float
    phi: float

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi):
            raise ValueError(f"theta {self.theta!r} outside [0, pi]")

    def unit_vector(self) -> np.ndarray:
        """Cartesian unit vector (x, y, z) of this point."""
        st = math.sin(self.theta)
        return np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )


@dataclass(frozen=True)
class BlochConnection:
    """Gauge potential of one covering: ``A_theta = 0`` and

    * ``up``   covering (reference ``|up>``):   ``A_phi = -(1 - cos theta)/2``
    * ``down`` covering (reference ``|down>``): ``A_phi = +(1 + cos theta)/2``

    The two differ by the pure gauge ``-1`` for every ``theta``, which is what
    generates the ``e^{i phi}`` transition function between the coverings.
    """

    covering: str

    def __post_init__(self):
        if self.covering not in (UP, DOWN):
            raise ValueError(f"unknown covering {self.covering!r}")

    def a_phi(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        if self.covering == UP:
            return -0.5 * (1.0 - np.cos(theta))
        return 0.5 * (1.0 + np.cos(theta))

    def excluded_pole(self) -> float:
        """Polar angle of the pole this covering cannot describe."""
        return math.pi if self.covering == UP else 0.0


def to_state(p: BlochPoint) -> StateVector:
    """State of a Bloch point in the half-angle chart convention."""
    half = 0.5 * p.theta
    amps = np.array(
        [
            math.cos(half) * np.exp(-0.5j * p.phi),
            math.sin(half) * np.exp(+0.5j * p.phi),
        ]
    )
    return StateVector(amps)


def from_state(s: StateVector, previous: BlochPoint | None = None) -> BlochPoint:
    """Inverse chart: Bloch point of a two-component state (phase-blind).

    ``theta = 2 atan2(|s_down|, |s_up|)``. The azimuth is the relative phase
    of the two amplitudes, unwrapped to be continuous with ``previous`` when
    supplied; at the poles the azimuth is copied from ``previous`` (or 0).
    """
    if s.dim != 2:
        raise ValueError(f"Bloch chart needs a two-state system, got dim {s.dim}")
    a_up, a_down = s.amplitudes
    theta = 2.0 * math.atan2(abs(a_down), abs(a_up))
    if abs(a_up) < 1e-15 or abs(a_down) < 1e-15:
        phi = previous.phi if previous is not None else 0.0
        return BlochPoint(min(theta, math.pi), phi)
    phi = math.atan2((a_down * a_up.conjugate()).imag, (a_down * a_up.conjugate()).real)
    if previous is not None:
        phi += 2.0 * math.pi * round((previous.phi - phi) / (2.0 * math.pi))
    return BlochPoint(min(theta, math.pi), phi)


def path_from_states(states, start: BlochPoint | None = None) -> list[BlochPoint]:
    """Convert a sampled two-state path to Bloch points with continuous azimuth."""
    points: list[BlochPoint] = []
    prev = start
    for s in states:
        prev = from_state(s, previous=prev)
        points.append(prev)
    return points


def curvature_flux(path: list[BlochPoint], covering: str) -> float:
    """Line integral of the covering's gauge potential around a closed loop,
    ``sum of A_phi dphi`` by the trapezoid rule (unwrapped, not reduced).

    The loop must close in ray space (equal first/last ``theta`` and ``phi``
    modulo 2 pi; the azimuth winding is what the integral measures) and stay
    clear of the covering's excluded pole.
    """
    if len(path) < 2:
        raise ValueError("need at least 2 points (closed loop) for a flux integral")
    conn = BlochConnection(covering)
    theta = np.array([p.theta for p in path])
    phi = np.array([p.phi for p in path])

    pole = conn.excluded_pole()
    gap = np.min(np.abs(theta - pole))
    if gap <= POLE_MARGIN:
        raise CoveringViolationError(
            f"loop touches the excluded pole of the {covering!r} covering "
            f"(min polar distance {gap:.3e})",
            which=covering,
            overlap=gap,
        )
    dphi_close = abs(math.remainder(phi[-1] - phi[0], 2.0 * math.pi))
    if abs(theta[-1] - theta[0]) > 1e-9 or dphi_close > 1e-9:
        raise PreconditionError(
            "flux loop does not close in ray space "
            f"(dtheta {abs(theta[-1] - theta[0]):.3e}, dphi mod 2pi {dphi_close:.3e})"
        )
    a = conn.a_phi(theta)
    return float(np.sum(0.5 * (a[1:] + a[:-1]) * np.diff(phi)))


def _tangent_towards(at: np.ndarray, towards: np.ndarray) -> np.ndarray:
    """Unit tangent at ``at`` pointing along the geodesic to ``towards``."""
    t = towards - np.dot(at, towards) * at
    n = np.linalg.norm(t)
    if n < 1e-12:
        raise PreconditionError(
            "geodesic edge undefined: adjacent vertices coincide or are antipodal"
        )
    return t / n


def solid_angle(polygon: list[BlochPoint]) -> float:
    """Oriented area of the geodesic polygon with the given vertices.

    Spherical-excess evaluation: the turning angle at each vertex is summed
    and the excess gives the area exactly (no quadrature). Result is reduced
    to (-2 pi, 2 pi]; the sign follows the traversal-orientation convention
    in the module docstring. Consecutive duplicate vertices are merged;
    adjacent antipodal vertices are rejected (no unique edge).
    """
    if len(polygon) < 3:
        raise ValueError(f"polygon needs at least 3 vertices, got {len(polygon)}")
    verts = [p.unit_vector() for p in polygon]
    # Merge consecutive duplicates (including a closing repeat of the first).
    cleaned: list[np.ndarray] = []
    for v in verts:
        if not cleaned or np.linalg.norm(v - cleaned[-1]) > 1e-12:
            cleaned.append(v)
    if len(cleaned) > 1 and np.linalg.norm(cleaned[0] - cleaned[-1]) <= 1e-12:
        cleaned.pop()
    n = len(cleaned)
    if n < 3:
        return 0.0
    for k in range(n):
        if np.linalg.norm(cleaned[k] + cleaned[(k + 1) % n]) < 1e-9:
            raise PreconditionError(
                f"polygon edge ({k}, {(k + 1) % n}) joins antipodal vertices; "
                "geodesic not unique"
            )
    turning = 0.0
    for k in range(n):
        prev_v = cleaned[(k - 1) % n]
        here = cleaned[k]
        next_v = cleaned[(k + 1) % n]
        # Arrival direction at `here` continuing travel away from prev_v.
        u_in = -_tangent_towards(here, prev_v)
        u_out = _tangent_towards(here, next_v)
        turning += math.atan2(float(np.dot(np.cross(u_in, u_out), here)),
                              float(np.dot(u_in, u_out)))
    omega = turning - 2.0 * math.pi
    omega = math.remainder(omega, 4.0 * math.pi)
    if omega <= -2.0 * math.pi:
        omega += 4.0 * math.pi
    elif omega > 2.0 * math.pi:
        omega -= 4.0 * math.pi
    return omega
