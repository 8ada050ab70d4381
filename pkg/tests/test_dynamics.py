import math

import numpy as np
import pytest
import scipy.linalg

from projphase import (
    EvolutionPath,
    HermitianOperator,
    PreconditionError,
    StateVector,
    StepSizeError,
    UnitaryOperator,
    basis_state,
    dynamical_phase,
    evolve,
    evolve_exact,
    inner,
    near_orthogonal_loop,
    remove_dynamical_phase,
    rotation_y,
    spin_operators,
    to_state,
)
from projphase.bloch import BlochPoint, from_state


def random_hermitian(dim, rng, unit_norm=True):
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    h = 0.5 * (z + z.conj().T)
    if unit_norm:
        h = h / np.linalg.norm(h, 2)
    return h


class TestOperators:
    def test_hermiticity_enforced(self):
        with pytest.raises(ValueError, match="Hermitian"):
            HermitianOperator(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_unitarity_enforced(self):
        with pytest.raises(ValueError, match="unitary"):
            UnitaryOperator(np.array([[1.0, 0.0], [0.0, 2.0]]))

    def test_expectation(self):
        sz, _, _ = spin_operators(0.5)
        assert sz.expectation(basis_state(2, 0)) == pytest.approx(0.5)


class TestSpinOperators:
    def test_spin_half_is_half_pauli(self):
        sz, sy, sx = spin_operators(0.5)
        assert np.allclose(sz.matrix, np.diag([0.5, -0.5]))
        assert np.allclose(sx.matrix, 0.5 * np.array([[0, 1], [1, 0]]))
        assert np.allclose(sy.matrix, 0.5 * np.array([[0, -1j], [1j, 0]]))

    def test_spin_one_sz(self):
        sz, _, _ = spin_operators(1)
        assert np.allclose(sz.matrix, np.diag([1.0, 0.0, -1.0]))

    @pytest.mark.parametrize("m", [0.5, 1.0, 1.5, 2.0, 2.5])
    def test_commutator(self, m):
        sz, sy, sx = spin_operators(m)
        comm = sx.matrix @ sy.matrix - sy.matrix @ sx.matrix
        assert np.max(np.abs(comm - 1j * sz.matrix)) < 1e-12

    @pytest.mark.parametrize("m", [0.5, 1.0, 1.5, 2.0])
    def test_sy_spectrum_matches_sz(self, m):
        sz, sy, _ = spin_operators(m)
        assert np.allclose(np.linalg.eigvalsh(sy.matrix), np.sort(np.diag(sz.matrix).real))

    def test_rejects_non_half_integer(self):
        with pytest.raises(ValueError):
            spin_operators(0.7)
        with pytest.raises(ValueError):
            spin_operators(0.0)


class TestRotation:
    def test_zero_angle_is_identity(self):
        assert np.allclose(rotation_y(1.0, 0.0).matrix, np.eye(3))

    @pytest.mark.parametrize("m", [0.5, 1.0, 1.5])
    def test_top_corner_closed_form(self, m):
        # <m|exp(-i theta S_y)|m> = cos(theta/2)^(2m); cross-check against a
        # general-purpose matrix exponential
        dim = int(2 * m) + 1
        _, sy, _ = spin_operators(m)
        for theta in (0.3, 1.1, 2.5):
            u = rotation_y(m, theta)
            top = u.matrix[0, 0]
            assert top == pytest.approx(math.cos(theta / 2) ** (2 * m), abs=1e-12)
            ref = scipy.linalg.expm(-1j * theta * sy.matrix)
            assert np.max(np.abs(u.matrix - ref)) < 1e-12

    def test_corner_element_nonzero_between_poles(self):
        for m in (0.5, 1.0, 1.5, 2.0):
            dim = int(2 * m) + 1
            for beta in (0.2, 1.0, 2.0, 3.0):
                val = rotation_y(m, beta).matrix[dim - 1, 0]
                assert abs(val) > 1e-12


class TestEvolve:
    def test_eigenstate_picks_up_energy_phase(self):
        sz, _, _ = spin_operators(1.0)
        psi0 = basis_state(3, 0)
        path = evolve(sz, psi0, np.linspace(0.0, 2.0, 1001))
        expect = psi0.phased(-1.0 * 2.0)  # e^{-i m t} with m = 1
        assert abs(inner(expect, path.states[-1]) - 1.0) < 1e-10

    def test_larmor_precession(self):
        # H = S_z for spin 1/2 advances the azimuth linearly: |theta, phi> ->
        # |theta, phi + t> exactly in the half-angle chart
        sz, _, _ = spin_operators(0.5)
        start = BlochPoint(1.1, 0.4)
        path = evolve(sz, to_state(start), np.linspace(0.0, 1.5, 301))
        end = from_state(path.states[-1], previous=start)
        assert end.theta == pytest.approx(1.1, abs=1e-9)
        assert end.phi == pytest.approx(0.4 + 1.5, abs=1e-9)

    def test_norm_preserved(self, rng):
        h = random_hermitian(4, rng)
        path = evolve(h, StateVector.normalized(rng.standard_normal(4)),
                      np.linspace(0.0, 10.0, 10_001))
        norms = np.linalg.norm(path.state_matrix(), axis=1)
        assert np.max(np.abs(norms - 1.0)) < 1e-10

    def test_matches_exact_exponential(self, rng):
        for dim in (2, 3, 5):
            h = random_hermitian(dim, rng)
            psi0 = StateVector.normalized(
                rng.standard_normal(dim) + 1j * rng.standard_normal(dim))
            grid = np.linspace(0.0, 2.0, 2001)
            rk4 = evolve(h, psi0, grid)
            exact = evolve_exact(h, psi0, grid)
            err = np.max(np.abs(rk4.state_matrix() - exact.state_matrix()))
            assert err < 1e-10

    def test_energy_constant_for_constant_h(self, rng):
        h = random_hermitian(3, rng)
        path = evolve(h, StateVector.normalized(rng.standard_normal(3)),
                      np.linspace(0.0, 5.0, 5001))
        trace = path.hamiltonian_trace
        assert np.max(np.abs(trace - trace[0])) < 1e-9

    def test_time_dependent_provider(self):
        sz, sy, _ = spin_operators(0.5)

        def h(t):
            return math.cos(t) * sz.matrix + math.sin(t) * sy.matrix

        path = evolve(h, basis_state(2, 0), np.linspace(0.0, 1.0, 501))
        assert len(path) == 501
        assert path.hamiltonian_trace is not None

    def test_giant_step_raises(self):
        sz, _, _ = spin_operators(2.0)
        with pytest.raises(StepSizeError):
            evolve(sz, basis_state(5, 0), np.array([0.0, 4.0]))

    def test_non_hermitian_rejected(self):
        with pytest.raises(ValueError, match="Hermitian"):
            evolve(np.array([[0.0, 1.0], [0.0, 0.0]]), basis_state(2, 0),
                   np.linspace(0, 1, 11))


class TestEvolutionPath:
    def test_times_must_increase(self):
        with pytest.raises(ValueError):
            EvolutionPath(times=[0.0, 0.0], states=(basis_state(2, 0),) * 2)

    def test_undersampling_rejected(self):
        with pytest.raises(PreconditionError, match="undersampled"):
            EvolutionPath(times=[0.0, 1.0],
                          states=(basis_state(2, 0), basis_state(2, 1)))

    def test_declared_gap_allowed(self):
        path = EvolutionPath(times=[0.0, 1.0],
                             states=(basis_state(2, 0), basis_state(2, 1)),
                             allow_gaps=True)
        assert len(path) == 2

    def test_trace_length_checked(self):
        with pytest.raises(ValueError, match="trace"):
            EvolutionPath(times=[0.0], states=(basis_state(2, 0),),
                          hamiltonian_trace=[1.0, 2.0])


class TestDynamicalPhase:
    def test_eigenstate_becomes_constant(self):
        sz, _, _ = spin_operators(1.5)
        psi0 = basis_state(4, 0)
        path = remove_dynamical_phase(evolve(sz, psi0, np.linspace(0.0, 3.0, 601)))
        for s in path.states[:: 60]:
            assert abs(inner(psi0, s) - 1.0) < 1e-9

    def test_ray_projections_untouched(self, rng):
        h = random_hermitian(3, rng)
        path = evolve(h, StateVector.normalized(rng.standard_normal(3)),
                      np.linspace(0.0, 2.0, 401))
        removed = remove_dynamical_phase(path)
        probe = StateVector.normalized(rng.standard_normal(3))
        before = np.abs(path.state_matrix() @ np.conj(probe.amplitudes))
        after = np.abs(removed.state_matrix() @ np.conj(probe.amplitudes))
        assert np.max(np.abs(before - after)) < 1e-13

    def test_removal_idempotent(self, rng):
        h = random_hermitian(3, rng)
        path = evolve(h, StateVector.normalized(rng.standard_normal(3)),
                      np.linspace(0.0, 2.0, 401))
        once = remove_dynamical_phase(path)
        assert np.allclose(once.hamiltonian_trace, 0.0)
        twice = remove_dynamical_phase(once)
        assert np.max(np.abs(once.state_matrix() - twice.state_matrix())) == 0.0

    def test_missing_trace_is_hard_error(self):
        path = EvolutionPath(times=[0.0], states=(basis_state(2, 0),))
        with pytest.raises(ValueError, match="trace"):
            remove_dynamical_phase(path)

    def test_additive_over_concatenation(self, rng):
        h = random_hermitian(3, rng)
        psi0 = StateVector.normalized(rng.standard_normal(3))
        grid = np.linspace(0.0, 2.0, 801)
        full = evolve(h, psi0, grid)
        first = evolve(h, psi0, grid[:401])
        second = evolve(h, first.states[-1], grid[400:])
        total = dynamical_phase(full).accumulated
        split = dynamical_phase(first).accumulated + dynamical_phase(second).accumulated
        assert total == pytest.approx(split, abs=1e-9)


class TestNearOrthogonalLoop:
    def test_zero_delta_constant_path(self):
        _, sy, sx = spin_operators(0.5)
        j = basis_state(2, 1)
        path = near_orthogonal_loop(
            j, lambda th: math.cos(th) * sy.matrix - math.sin(th) * sx.matrix,
            0.0, np.linspace(0.0, 2 * math.pi, 101))
        for s in path.states[::10]:
            assert abs(inner(j, s) - 1.0) < 1e-15

    def test_delta_range_enforced(self):
        _, sy, _ = spin_operators(0.5)
        with pytest.raises(ValueError):
            near_orthogonal_loop(basis_state(2, 1), lambda th: sy.matrix, 0.5,
                                 np.linspace(0, 1, 11))

    def test_spin_loop_matches_rotated_chart(self):
        # generator cos(phi) S_y - sin(phi) S_x makes the loop track the
        # constant-latitude circle at theta = pi - delta in ray space
        m, delta = 1.0, 0.05
        dim = 4 - 1
        sz, sy, sx = spin_operators(m)
        j = basis_state(dim, dim - 1)
        grid = np.linspace(0.0, 2 * math.pi, 201)
        path = near_orthogonal_loop(
            j, lambda th: math.cos(th) * sy.matrix - math.sin(th) * sx.matrix,
            delta, grid)
        for k in (0, 50, 100, 200):
            phi = grid[k]
            ref = rotation_y(m, math.pi - delta).matrix @ basis_state(dim, 0).amplitudes
            w, v = np.linalg.eigh(sz.matrix)
            rotator = (v * np.exp(-1j * phi * w)) @ v.conj().T
            ref = rotator @ ref
            ov = abs(np.vdot(ref, path.states[k].amplitudes))
            assert ov == pytest.approx(1.0, abs=1e-12)

    def test_fidelity_bound(self, rng):
        lam = random_hermitian(4, rng, unit_norm=False)
        norm = np.linalg.norm(lam, 2)
        j = StateVector.normalized(rng.standard_normal(4))
        delta = 0.03
        path = near_orthogonal_loop(j, lambda th: lam, delta, np.linspace(0, 1, 51))
        for s in path.states[::10]:
            fidelity = abs(inner(j, s)) ** 2
            assert fidelity >= 1.0 - (delta * norm) ** 2
