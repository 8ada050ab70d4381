"""Spin operators, unitary evolution, and dynamical-phase removal.

Units: hbar = 1, field magnitudes dimensionless. The integrator is fixed-step
fourth-order Runge-Kutta with per-step renormalization; for a constant
Hamiltonian :func:`evolve_exact` provides the diagonalization oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import PreconditionError, StepSizeError
from .statekit import StateVector

HERMITICITY_TOL = 1e-12
UNITARITY_TOL = 1e-12
MIN_ADJACENT_OVERLAP = 0.99


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Dense Hermitian matrix (Hamiltonians, rotation generators)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        dev = float(np.max(np.abs(m - m.conj().T)))
        if dev > HERMITICITY_TOL:
            raise ValueError(f"matrix is not Hermitian (max |M - M^dag| = {dev:.3e})")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def expectation(self, state: StateVector) -> float:
        return float(np.real(np.vdot(state.amplitudes, self.matrix @ state.amplitudes)))


@dataclass(frozen=True, eq=False)
class UnitaryOperator:
    """Dense unitary matrix (rotations, propagators)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        dev = float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))
        if dev > UNITARITY_TOL:
            raise ValueError(f"matrix is not unitary (max |U^dag U - 1| = {dev:.3e})")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def apply(self, state: StateVector) -> StateVector:
        return StateVector.normalized(self.matrix @ state.amplitudes)


def as_matrix(op) -> np.ndarray:
    """Accept ``HermitianOperator``/``UnitaryOperator`` or a raw array."""
    if isinstance(op, (HermitianOperator, UnitaryOperator)):
        return op.matrix
    return np.asarray(op, dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class EvolutionPath:
    """Time-stamped sequence of states from an integrator or analytic formula.

    ``hamiltonian_trace`` holds the per-sample energy expectation
    ``<psi|H|psi>`` when the path came from Schrodinger evolution. Sampling
    must be fine enough for unambiguous phase increments (adjacent overlap
    magnitude above 0.99); pass ``allow_gaps=True`` for paths with declared
    discontinuities (e.g. a deliberately excised covering gap).
    """

    times: np.ndarray
    states: tuple[StateVector, ...]
    hamiltonian_trace: np.ndarray | None = None
    allow_gaps: bool = False

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        states = tuple(self.states)
        if times.ndim != 1 or times.size != len(states):
            raise ValueError("times and states must have equal length")
        if times.size < 1:
            raise ValueError("empty path")
        if np.any(np.diff(times) <= 0.0):
            raise ValueError("times must be strictly increasing")
        trace = self.hamiltonian_trace
        if trace is not None:
            trace = np.asarray(trace, dtype=float)
            if trace.shape != times.shape:
                raise ValueError("hamiltonian_trace length must match times")
            trace.flags.writeable = False
        if len(states) > 1 and not self.allow_gaps:
            mat = np.stack([s.amplitudes for s in states])
            ov = np.abs(np.sum(mat[:-1].conj() * mat[1:], axis=1))
            worst = float(np.min(ov))
            if worst <= MIN_ADJACENT_OVERLAP:
                k = int(np.argmin(ov))
                raise PreconditionError(
                    f"path undersampled: adjacent overlap {worst:.6f} at segment {k} "
                    f"is below {MIN_ADJACENT_OVERLAP} (refine, or set allow_gaps=True "
                    "for a declared crossing gap)"
                )
        times.flags.writeable = False
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "hamiltonian_trace", trace)

    def __len__(self) -> int:
        return len(self.states)

    def state_matrix(self) -> np.ndarray:
        """All amplitudes stacked as an (n_samples, dim) array."""
        return np.stack([s.amplitudes for s in self.states])


@dataclass(frozen=True)
class DynamicalPhaseRecord:
    """Accumulated dynamical phase: trapezoid-rule integral of <psi|H|psi> dt."""

    accumulated: float


def _check_half_integer(m: float) -> int:
    two_m = 2.0 * m
    if abs(two_m - round(two_m)) > 1e-9 or round(two_m) < 1:
        raise ValueError(f"spin must be a positive half-integer, got m = {m!r}")
    return int(round(two_m))


def spin_operators(m: float) -> tuple[HermitianOperator, HermitianOperator, HermitianOperator]:
    """Standard angular-momentum matrices for a spin-``m`` system.

    Returns ``(S_z, S_y, S_x)`` in the basis ordered by decreasing magnetic
    quantum number, so ``S_z = diag(m, m-1, ..., -m)``.
    """
    two_m = _check_half_integer(m)
    dim = two_m + 1
    mu = m - np.arange(dim)  # m, m-1, ..., -m
    sz = np.diag(mu.astype(np.complex128))
    # <mu+1|S+|mu> = sqrt(m(m+1) - mu(mu+1)); raising moves one index up.
    raise_amp = np.sqrt(m * (m + 1) - mu[1:] * (mu[1:] + 1))
    sp = np.zeros((dim, dim), dtype=np.complex128)
    sp[np.arange(dim - 1), np.arange(1, dim)] = raise_amp
    sm = sp.conj().T
    sx = 0.5 * (sp + sm)
    sy = -0.5j * (sp - sm)
    return HermitianOperator(sz), HermitianOperator(sy), HermitianOperator(sx)


def rotation_y(m: float, theta: float) -> UnitaryOperator:
    """Rotation by ``theta`` about the y-axis, ``exp(-i theta S_y)``,
    computed by diagonalizing ``S_y``."""
    _, sy, _ = spin_operators(m)
    w, v = np.linalg.eigh(sy.matrix)
    u = (v * np.exp(-1j * theta * w)) @ v.conj().T
    return UnitaryOperator(u)


HamiltonianLike = HermitianOperator | np.ndarray | Callable[[float], "HermitianOperator | np.ndarray"]


def _hamiltonian_provider(H: HamiltonianLike) -> Callable[[float], np.ndarray]:
    if callable(H) and not isinstance(H, (HermitianOperator, np.ndarray)):
        def provider(t: float) -> np.ndarray:
            m = as_matrix(H(t))
            dev = float(np.max(np.abs(m - m.conj().T)))
            if dev > HERMITICITY_TOL:
                raise ValueError(
                    f"H(t={t!r}) is not Hermitian (max |M - M^dag| = {dev:.3e})"
                )
            return m
        return provider
    m0 = as_matrix(H)
    dev = float(np.max(np.abs(m0 - m0.conj().T)))
    if dev > HERMITICITY_TOL:
        raise ValueError(f"H is not Hermitian (max |M - M^dag| = {dev:.3e})")
    return lambda t: m0


def evolve(H: HamiltonianLike, psi0: StateVector, t_grid: Sequence[float]) -> EvolutionPath:
    """Integrate ``i d|psi>/dt = H(t)|psi>`` over ``t_grid`` with fixed-step RK4.

    One RK4 step per grid interval, renormalizing after each step; the energy
    expectation ``<psi|H(t)|psi>`` is recorded at every sample. A norm drift
    above 1e-8 in any single step (before renormalization) raises
    :class:`StepSizeError`.
    """
    h = _hamiltonian_provider(H)
    times = np.asarray(t_grid, dtype=float)
    if times.ndim != 1 or times.size < 1:
        raise ValueError("t_grid must be a non-empty 1-d sequence")
    if np.any(np.diff(times) <= 0.0):
        raise ValueError("t_grid must be strictly increasing")

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        return -1j * (h(t) @ y)

    y = psi0.amplitudes.astype(np.complex128)
    states = [psi0]
    energies = [float(np.real(np.vdot(y, h(times[0]) @ y)))]
    for k in range(times.size - 1):
        t, dt = times[k], times[k + 1] - times[k]
        k1 = rhs(t, y)
        k2 = rhs(t + 0.5 * dt, y + 0.5 * dt * k1)
        k3 = rhs(t + 0.5 * dt, y + 0.5 * dt * k2)
        k4 = rhs(t + dt, y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        norm = float(np.linalg.norm(y))
        if abs(norm - 1.0) > 1e-8:
            raise StepSizeError(
                f"norm drift {abs(norm - 1.0):.3e} in step {k} exceeds 1e-8; "
                "reduce the time step"
            )
        y = y / norm
        states.append(StateVector(y))
        energies.append(float(np.real(np.vdot(y, h(times[k + 1]) @ y))))
    return EvolutionPath(times=times, states=tuple(states), hamiltonian_trace=np.array(energies))


def evolve_exact(H: HermitianOperator | np.ndarray, psi0: StateVector,
                 t_grid: Sequence[float]) -> EvolutionPath:
    """Evolution under a constant Hamiltonian via exact diagonalization,
    ``|psi(t)> = exp(-i H t)|psi(0)>``. Oracle for :func:`evolve`."""
    m = as_matrix(H)
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > HERMITICITY_TOL:
        raise ValueError(f"H is not Hermitian (max |M - M^dag| = {dev:.3e})")
    times = np.asarray(t_grid, dtype=float)
    w, v = np.linalg.eigh(m)
    coeffs = v.conj().T @ psi0.amplitudes
    states = []
    energies = []
    for t in times:
        y = v @ (np.exp(-1j * w * (t - times[0])) * coeffs)
        y = y / np.linalg.norm(y)
        states.append(StateVector(y))
        energies.append(float(np.real(np.vdot(y, m @ y))))
    return EvolutionPath(times=times, states=tuple(states), hamiltonian_trace=np.array(energies))


def dynamical_phase(path: EvolutionPath) -> DynamicalPhaseRecord:
    """Total dynamical phase of a path, additive over concatenation."""
    if path.hamiltonian_trace is None:
        raise ValueError("path carries no hamiltonian_trace")
    total = float(np.trapezoid(path.hamiltonian_trace, path.times))
    return DynamicalPhaseRecord(accumulated=total)


def remove_dynamical_phase(path: EvolutionPath) -> EvolutionPath:
    """Multiply each sample by ``exp(+i integral_0^t <psi|H|psi> dt')``.

    The result is parallel-transported for eigenstate evolution. Its trace is
    zero: the rephased path solves the Schrodinger equation for the shifted
    generator ``H - <H>``, whose expectation vanishes, so removal is
    idempotent.
    """
    if path.hamiltonian_trace is None:
        raise ValueError("path carries no hamiltonian_trace")
    e = path.hamiltonian_trace
    t = path.times
    cumulative = np.concatenate(
        ([0.0], np.cumsum(0.5 * (e[1:] + e[:-1]) * np.diff(t)))
    )
    states = tuple(
        s.phased(alpha) for s, alpha in zip(path.states, cumulative)
    )
    return EvolutionPath(
        times=path.times,
        states=states,
        hamiltonian_trace=np.zeros_like(e),
        allow_gaps=path.allow_gaps,
    )


def near_orthogonal_loop(
    j: StateVector,
    generator: Callable[[float], "HermitianOperator | np.ndarray"],
    delta: float,
    theta_grid: Sequence[float],
) -> EvolutionPath:
    """Path of states ``exp(i delta L(theta)) |j>`` over a parameter grid.

    ``generator`` maps the loop parameter to a Hermitian operator ``L``; with
    small ``delta`` every sample stays within fidelity ``1 - O(delta^2)`` of
    ``|j>``, which is the regime where the winding of ``<i|psi>`` measures
    the topological phase class.
    """
    if not (0.0 <= delta <= 0.1):
        raise ValueError(f"delta must lie in [0, 0.1], got {delta!r}")
    thetas = np.asarray(theta_grid, dtype=float)
    states = []
    for th in thetas:
        lam = as_matrix(generator(th))
        dev = float(np.max(np.abs(lam - lam.conj().T)))
        if dev > HERMITICITY_TOL:
            raise ValueError(
                f"generator({th!r}) is not Hermitian (max |M - M^dag| = {dev:.3e})"
            )
        w, v = np.linalg.eigh(lam)
        y = v @ (np.exp(1j * delta * w) * (v.conj().T @ j.amplitudes))
        states.append(StateVector.normalized(y))
    return EvolutionPath(times=thetas, states=tuple(states))
