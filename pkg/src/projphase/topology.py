"""Phase accumulation along paths and its integer content: unwrapped
projective phases, winding numbers of overlap traces, first Chern numbers
from covering pairs on finite loops, and classification of the phase jump
through an orthogonal state.

The modulo-2pi part of a phase is measurable in a single comparison; the
2*n*pi part only exists relative to a path and is recovered here by summing
small per-segment increments. Increments are required to stay below pi/2 in
magnitude (not just pi) as a safety factor against aliasing where the
overlap with the projection state is small and the phase moves fast.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    CoveringViolationError,
    MultipleCrossingsError,
    NoCrossingError,
    PreconditionError,
    RefinementNeededError,
    WindingUndefinedError,
)
from .phases import wrap_principal
from .statekit import ORTHO_EPS, StateVector, inner
from .dynamics import EvolutionPath

MAX_INCREMENT = 0.5 * math.pi
CLOSURE_TOL = 1e-9
INTEGER_RESIDUAL_GUARD = 0.1


@dataclass(frozen=True, eq=False)
class UnwrappedPhase:
    """Accumulated phase that is NOT reduced mod 2*pi.

    ``total`` is exactly the sum of the per-segment increments, each of which
    lies in (-pi, pi].
    """

    increments: np.ndarray
    total: float

    @classmethod
    def from_increments(cls, increments: np.ndarray) -> "UnwrappedPhase":
        increments = np.asarray(increments, dtype=float)
        increments.flags.writeable = False
        return cls(increments=increments, total=float(np.sum(increments)))


@dataclass(frozen=True, eq=False)
class WindingReport:
    """Integer winding of the overlap trace ``z_k = <i|psi_k>`` around zero.

    ``n`` is the first Chern number of the two-cell covering construction
    when the loop hugs a state orthogonal to the projection state.
    """

    n: int
    z_trace: np.ndarray
    min_abs_z: float
    total: float


@dataclass(frozen=True)
class ChernReport:
    """First Chern number from the projective-phase difference of two
    coverings around a finite closed loop, with the off-integer residual."""

    n: int
    residual: float
    phi_i_total: float
    phi_j_total: float


@dataclass(frozen=True)
class JumpClassification:
    """Phase jump through an orthogonal state.

    ``jump_raw`` is the measured value ``arg(S_ij(t0-dt) S_ji(t0+dt))``;
    ``jump_mod_2pi`` is the nearest of {0, pi}, with ``snapped`` recording
    whether the raw value fell within the snap tolerance. ``p`` is the
    estimated tangency order of the crossing; smooth theory predicts a jump
    of ``arg((-1)^p)``.
    """

    t0: float
    p: int
    jump_mod_2pi: float
    jump_raw: float
    snapped: bool


def _overlap_trace(path: EvolutionPath, i: StateVector) -> np.ndarray:
    return path.state_matrix() @ np.conj(i.amplitudes)


def accumulate_projective_phase(
    path: EvolutionPath, i: StateVector, eps: float = ORTHO_EPS
) -> UnwrappedPhase:
    """Unwrapped projective phase of a path relative to ``i``.

    Each increment is the single-segment projective phase
    ``arg(<psi_k|i><i|psi_{k+1}>)``; the running sum carries the 2*n*pi
    content that a single endpoint comparison cannot see.
    """
    z = _overlap_trace(path, i)
    mags = np.abs(z)
    if float(np.min(mags)) < eps:
        k = int(np.argmin(mags))
        raise CoveringViolationError(
            f"sample {k} (t = {path.times[k]!r}) outside the covering of the "
            f"projection state: overlap {mags[k]:.3e} below {eps:.0e}",
            which=f"sample {k}",
            overlap=float(mags[k]),
        )
    increments = np.angle(np.conj(z[:-1]) * z[1:])
    worst = float(np.max(np.abs(increments))) if increments.size else 0.0
    if worst >= MAX_INCREMENT:
        k = int(np.argmax(np.abs(increments)))
        raise RefinementNeededError(
            f"segment {k} phase increment {worst:.3f} rad exceeds pi/2; "
            "refine the discretization"
        )
    return UnwrappedPhase.from_increments(increments)


def _require_ray_closure(path: EvolutionPath) -> None:
    ov = abs(inner(path.states[0], path.states[-1]))
    if abs(ov - 1.0) > CLOSURE_TOL:
        raise PreconditionError(
            f"loop does not close in ray space: |<first|last>| = {ov!r}"
        )


def winding_number(
    path: EvolutionPath, i: StateVector, j: StateVector, eps: float = ORTHO_EPS
) -> WindingReport:
    """Winding of ``z_k = <i|psi_k>`` for a closed loop hugging ``|j>``.

    The class is defined only if ``z`` never crosses zero along the loop;
    the integer is extracted from the unwrapped argument of the trace.
    """
    _require_ray_closure(path)
    fid = np.abs(_overlap_trace(path, j)) ** 2
    if float(np.min(fid)) < 0.5:
        raise PreconditionError(
            f"path strays from |j> (min fidelity {float(np.min(fid)):.3f} < 0.5); "
            "winding is defined for loops near the orthogonal state"
        )
    z = _overlap_trace(path, i)
    min_abs = float(np.min(np.abs(z)))
    if min_abs < eps or min_abs == 0.0:
        raise WindingUndefinedError(
            f"z = <i|psi> crosses zero (min |z| = {min_abs:.3e}); "
            "winding class undefined"
        )
    increments = np.angle(z[1:] / z[:-1])
    worst = float(np.max(np.abs(increments))) if increments.size else 0.0
    if worst >= MAX_INCREMENT:
        raise RefinementNeededError(
            f"arg(z) increment {worst:.3f} rad exceeds pi/2; refine the grid"
        )
    total = float(np.sum(increments))
    n = round(total / (2.0 * math.pi))
    if abs(total - 2.0 * math.pi * n) > INTEGER_RESIDUAL_GUARD:
        raise PreconditionError(
            f"unwrapped arg(z) change {total!r} is not near an integer multiple "
            "of 2*pi; loop may not close or sampling is too coarse"
        )
    z.flags.writeable = False
    return WindingReport(n=int(n), z_trace=z, min_abs_z=min_abs, total=total)


def chern_number_finite_loop(
    loop: EvolutionPath, i: StateVector, j: StateVector, eps: float = ORTHO_EPS
) -> ChernReport:
    """First Chern number ``n`` with ``2 n pi = phi_i - phi_j`` around a
    finite closed loop kept inside both coverings.

    Both accumulations run over the same loop, so gauge and dynamical
    contributions cancel in the difference.
    """
    _require_ray_closure(loop)
    phi_i = accumulate_projective_phase(loop, i, eps=eps)
    phi_j = accumulate_projective_phase(loop, j, eps=eps)
    delta = phi_i.total - phi_j.total
    n = round(delta / (2.0 * math.pi))
    residual = abs(delta - 2.0 * math.pi * n)
    if residual > INTEGER_RESIDUAL_GUARD:
        raise PreconditionError(
            f"phi_i - phi_j = {delta!r} is not near an integer multiple of 2*pi"
        )
    return ChernReport(
        n=int(n), residual=residual, phi_i_total=phi_i.total, phi_j_total=phi_j.total
    )


def classify_orthogonal_crossing(
    path: EvolutionPath,
    i: StateVector,
    crossing_floor: float = 1e-6,
    gap_overlap: float = 1e-3,
    snap_tol: float = 0.1,
) -> JumpClassification:
    """Classify the projective-phase jump where a path crosses a state
    orthogonal to ``i``.

    The analyzed window must contain exactly one dip of ``|<i|psi(t)>|``
    below ``crossing_floor``. The jump is measured as
    ``arg(S_ij(t1) S_ji(t2))`` with the transition points ``t1 < t0 < t2``
    chosen just outside the covering gap (overlap back above
    ``gap_overlap``), and the tangency order ``p`` is estimated from the
    log-log growth rate of the overlap with the departure direction.
    """
    z = _overlap_trace(path, i)
    mags = np.abs(z)
    below = np.flatnonzero(mags < crossing_floor)
    if below.size == 0:
        raise NoCrossingError(
            f"no sample with |<i|psi>| below {crossing_floor:.0e} in the window "
            f"(min is {float(np.min(mags)):.3e}); refine or widen the window"
        )
    runs = np.split(below, np.flatnonzero(np.diff(below) > 1) + 1)
    if len(runs) > 1:
        raise MultipleCrossingsError(
            f"{len(runs)} separate orthogonality crossings in the window; "
            "split the window and classify each"
        )
    run = runs[0]
    k0 = int(run[np.argmin(mags[run])])
    t0 = float(path.times[k0])
    j = path.states[k0]

    before = np.flatnonzero(mags[: run[0]] >= gap_overlap)
    after_rel = np.flatnonzero(mags[run[-1] + 1 :] >= gap_overlap)
    if before.size == 0 or after_rel.size == 0:
        raise PreconditionError(
            "cannot span the covering gap: no sample with overlap above "
            f"{gap_overlap:.0e} on both sides of the crossing"
        )
    k1 = int(before[-1])
    k2 = int(run[-1] + 1 + after_rel[0])

    # arg(S_ij(t1) S_ji(t2)) without the phasor detour: both transition
    # functions share |j>, and the inside segment is negligible by choice
    # of the gap points.
    p1 = path.states[k1].amplitudes
    p2 = path.states[k2].amplitudes
    s_ij = np.vdot(j.amplitudes, p1) * np.vdot(p1, i.amplitudes)
    s_ji = np.vdot(i.amplitudes, p2) * np.vdot(p2, j.amplitudes)
    jump_raw = float(np.angle(s_ij * s_ji))

    # Departure direction: component of the first recovered sample orthogonal
    # to |j>, used as the reference for the tangency-order fit.
    dep = p2 - np.vdot(j.amplitudes, p2) * j.amplitudes
    dep = dep / np.linalg.norm(dep)
    y = np.abs(path.state_matrix() @ np.conj(dep))
    dt = np.abs(path.times - t0)
    sel = (dt > 0) & (y > 1e-12) & (y < 0.2)
    if int(np.count_nonzero(sel)) < 4:
        raise PreconditionError(
            "too few samples near the crossing to estimate the tangency order"
        )
    slope = np.polyfit(np.log(dt[sel]), np.log(y[sel]), 1)[0]
    p = max(1, int(round(float(slope))))

    d_zero = abs(wrap_principal(jump_raw))
    d_pi = abs(wrap_principal(jump_raw - math.pi))
    nearest = 0.0 if d_zero <= d_pi else math.pi
    snapped = min(d_zero, d_pi) <= snap_tol
    if not snapped:
        warnings.warn(
            f"phase jump {jump_raw:.4f} rad is more than {snap_tol} rad from "
            "both 0 and pi; reporting the raw value (path may be non-smooth "
            "at the orthogonal state)",
            stacklevel=2,
        )
    return JumpClassification(
        t0=t0, p=p, jump_mod_2pi=nearest, jump_raw=jump_raw, snapped=snapped
    )
