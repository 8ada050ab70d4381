"""Phase functionals on states: Pancharatnam and projective phases,
covering transition functions with their cocycle laws, covering-switch
composition, and N-vertex Bargmann invariants.

The projective phase ``arg(<a|i><i|b>)`` is the relative phase of ``a`` and
``b`` after both are projected onto a reference state ``i``. It is defined
even when ``a`` and ``b`` are orthogonal to each other, as long as both stay
inside the covering of ``i`` (the set of states not orthogonal to ``i``).

All mod-2pi comparisons should be done on unit phasors (``exp(i*phi)``
values) rather than raw angles, to avoid branch-cut bugs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CoveringViolationError, OrthogonalStatesError
from .statekit import ORTHO_EPS, StateVector, inner

PHASOR_TOL = 1e-12

PRINCIPAL = "principal"
UNWRAPPED = "unwrapped"


def wrap_principal(angle: float) -> float:
    """Reduce an angle to the principal branch (-pi, pi]."""
    w = math.remainder(angle, math.tau)
    return w if w > -math.pi else w + math.tau


def principal_arg(z: complex) -> float:
    """``arg z`` in (-pi, pi] (maps the -pi branch edge to +pi)."""
    a = math.atan2(z.imag, z.real)
    return a if a > -math.pi else a + math.tau


@dataclass(frozen=True)
class PhaseValue:
    """A real phase angle tagged with its branch convention.

    ``principal`` values live in (-pi, pi]; ``unwrapped`` values are
    accumulated angles that may encode 2*n*pi topological content.
    """

    angle: float
    branch: str = PRINCIPAL

    def __post_init__(self):
        if self.branch not in (PRINCIPAL, UNWRAPPED):
            raise ValueError(f"unknown branch tag {self.branch!r}")
        if self.branch == PRINCIPAL and not (-math.pi < self.angle <= math.pi):
            raise ValueError(f"principal phase {self.angle!r} outside (-pi, pi]")

    @classmethod
    def principal(cls, angle: float) -> "PhaseValue":
        return cls(wrap_principal(angle), PRINCIPAL)

    @classmethod
    def unwrapped(cls, angle: float) -> "PhaseValue":
        return cls(angle, UNWRAPPED)

    def phasor(self) -> "UnitPhasor":
        return UnitPhasor(complex(math.cos(self.angle), math.sin(self.angle)))


@dataclass(frozen=True)
class UnitPhasor:
    """Unit-modulus complex number, e.g. a transition function value."""

    value: complex

    def __post_init__(self):
        mag = abs(self.value)
        if abs(mag - 1.0) > PHASOR_TOL:
            raise ValueError(f"phasor modulus {mag!r} deviates from 1")
        object.__setattr__(self, "value", complex(self.value))

    @classmethod
    def from_angle(cls, angle: float) -> "UnitPhasor":
        return cls(complex(math.cos(angle), math.sin(angle)))

    @property
    def angle(self) -> float:
        return principal_arg(self.value)

    def __mul__(self, other: "UnitPhasor") -> "UnitPhasor":
        v = self.value * other.value
        return UnitPhasor(v / abs(v))

    def conjugate(self) -> "UnitPhasor":
        return UnitPhasor(self.value.conjugate())


def pancharatnam_phase(a: StateVector, b: StateVector, eps: float = ORTHO_EPS) -> PhaseValue:
    """Relative phase ``arg<a|b>`` defined by direct interference.

    Undefined for orthogonal states: there is no fringe to read a phase from.
    """
    ov = inner(a, b)
    mag = abs(ov)
    if mag < eps:
        raise OrthogonalStatesError(
            f"Pancharatnam phase undefined: |<a|b>| = {mag:.3e} below {eps:.0e}",
            overlap=mag,
        )
    return PhaseValue(principal_arg(ov))


def projective_phase(
    a: StateVector, i: StateVector, b: StateVector, eps: float = ORTHO_EPS
) -> PhaseValue:
    """Phase of ``b`` relative to ``a`` after projection onto ``i``:
    ``arg(<a|i><i|b>)``.

    Gauge-invariant under ``i -> e^{i*alpha} i``. Both ``a`` and ``b`` must
    lie inside the covering of ``i``.
    """
    ov_ai = inner(a, i)
    mag_ai = abs(ov_ai)
    if mag_ai < eps:
        raise CoveringViolationError(
            f"projective phase undefined: |<a|i>| = {mag_ai:.3e} below {eps:.0e} "
            "(endpoint a outside the covering of i)",
            which="a",
            overlap=mag_ai,
        )
    ov_ib = inner(i, b)
    mag_ib = abs(ov_ib)
    if mag_ib < eps:
        raise CoveringViolationError(
            f"projective phase undefined: |<i|b>| = {mag_ib:.3e} below {eps:.0e} "
            "(endpoint b outside the covering of i)",
            which="b",
            overlap=mag_ib,
        )
    return PhaseValue(principal_arg(ov_ai * ov_ib))


def transition_function(
    i: StateVector, j: StateVector, P: StateVector, eps: float = ORTHO_EPS
) -> UnitPhasor:
    """Transition function between the coverings of ``i`` and ``j`` at ``P``:
    the unit phasor of ``<j|P><P|i>``.

    Satisfies the cocycle laws ``S_ii = 1``, ``S_ij S_ji = 1`` and
    ``S_ij S_jk = S_ik`` wherever defined.
    """
    ov_jp = inner(j, P)
    mag_jp = abs(ov_jp)
    if mag_jp < eps:
        raise CoveringViolationError(
            f"transition function undefined: |<j|P>| = {mag_jp:.3e} below {eps:.0e}",
            which="j",
            overlap=mag_jp,
        )
    ov_pi = inner(P, i)
    mag_pi = abs(ov_pi)
    if mag_pi < eps:
        raise CoveringViolationError(
            f"transition function undefined: |<P|i>| = {mag_pi:.3e} below {eps:.0e}",
            which="i",
            overlap=mag_pi,
        )
    v = ov_jp * ov_pi
    return UnitPhasor(v / abs(v))


def bargmann_invariant(states: list[StateVector], eps: float = ORTHO_EPS) -> PhaseValue:
    """Argument of the cyclic overlap product ``<s1|s2><s2|s3>...<sN|s1>``.

    Invariant under independent rephasing of every input state. For three
    states it equals minus half the oriented solid angle of the geodesic
    triangle they span on the two-state sphere (see :mod:`projphase.bloch`).
    """
    n = len(states)
    if n < 3:
        raise ValueError(f"Bargmann invariant needs at least 3 states, got {n}")
    prod = complex(1.0)
    for k in range(n):
        a, b = states[k], states[(k + 1) % n]
        ov = inner(a, b)
        mag = abs(ov)
        if mag < eps:
            raise OrthogonalStatesError(
                f"Bargmann invariant undefined: adjacent pair ({k}, {(k + 1) % n}) "
                f"has overlap {mag:.3e} below {eps:.0e}",
                overlap=mag,
            )
        prod *= ov / mag
    return PhaseValue(principal_arg(prod))


def compose_segments(p1: PhaseValue, p2: PhaseValue) -> PhaseValue:
    """Add two segment phases computed against the same projection state.

    Projective segment phases compose associatively:
    ``phi_i(0,t1) + phi_i(t1,t) = phi_i(0,t)`` modulo 2*pi. Principal inputs
    yield a principal (rewrapped) output; otherwise the raw sum is returned
    as unwrapped.
    """
    total = p1.angle + p2.angle
    if p1.branch == PRINCIPAL and p2.branch == PRINCIPAL:
        return PhaseValue.principal(total)
    return PhaseValue.unwrapped(total)


def switch_covering(
    phi_i_before: UnitPhasor,
    S_at_t1: UnitPhasor,
    phi_j_inside: UnitPhasor,
    S_at_t2: UnitPhasor,
    phi_i_after: UnitPhasor,
) -> UnitPhasor:
    """Compose a phase across a stretch where only the ``j`` covering is valid.

    The factors follow the pattern
    ``e^{i phi_i(0,t1)} * S_ij(t1) * e^{i phi_j(t1,t2)} * S_ji(t2) * e^{i phi_i(t2,t3)}``
    and the product equals ``e^{i phi_i(0,t3)}`` whenever all coverings are
    respected.
    """
    return phi_i_before * S_at_t1 * phi_j_inside * S_at_t2 * phi_i_after


def phasor_gap(angle_a: float, angle_b: float) -> float:
    """Distance between two angles compared as unit phasors, ``|e^{ia} - e^{ib}|``."""
    return abs(np.exp(1j * angle_a) - np.exp(1j * angle_b))
