import math

import numpy as np
import pytest

from projphase import (
    CoveringViolationError,
    Geodesic,
    OrthogonalStatesError,
    PhaseValue,
    UnitPhasor,
    bargmann_invariant,
    compose_segments,
    connection_increment,
    geodesic_point,
    pancharatnam_phase,
    phasor_gap,
    projective_phase,
    switch_covering,
    transition_function,
    wrap_principal,
)
from conftest import KET_DOWN, KET_UP, KET_X, KET_Y, random_states_clear


class TestPhaseValue:
    def test_principal_range_enforced(self):
        with pytest.raises(ValueError):
            PhaseValue(4.0)

    def test_principal_wraps(self):
        assert PhaseValue.principal(3 * math.pi).angle == pytest.approx(math.pi)

    def test_phasor(self):
        p = PhaseValue.principal(math.pi / 3)
        assert abs(p.phasor().value - np.exp(1j * math.pi / 3)) < 1e-15

    def test_wrap_principal_edges(self):
        assert wrap_principal(math.pi) == pytest.approx(math.pi)
        assert wrap_principal(-math.pi) == pytest.approx(math.pi)
        assert wrap_principal(0.0) == 0.0


class TestUnitPhasor:
    def test_modulus_enforced(self):
        with pytest.raises(ValueError):
            UnitPhasor(0.5 + 0.1j)

    def test_product_renormalizes(self):
        p = UnitPhasor.from_angle(0.3)
        q = p
        for _ in range(100):
            q = q * p
        assert abs(abs(q.value) - 1.0) < 1e-12


class TestPancharatnam:
    def test_identity(self):
        assert pancharatnam_phase(KET_X, KET_X).angle == pytest.approx(0.0)

    def test_real_positive_overlap(self):
        assert pancharatnam_phase(KET_UP, KET_Y).angle == pytest.approx(0.0)

    def test_quarter_turn(self):
        # (i|up> + |down>)/sqrt2 against |up>: phase pi/2 by direct arithmetic
        from projphase import StateVector

        s = StateVector.normalized([1.0j, 1.0])
        assert pancharatnam_phase(KET_UP, s).angle == pytest.approx(math.pi / 2)

    def test_orthogonal_states_undefined(self):
        with pytest.raises(OrthogonalStatesError):
            pancharatnam_phase(KET_UP, KET_DOWN)


class TestProjectivePhase:
    def test_polarizer_between_orthogonal_states(self):
        # x-polarizer analogy: phase between |up> and |down> through (|up>+|down>)/sqrt2
        assert projective_phase(KET_UP, KET_X, KET_DOWN).angle == pytest.approx(0.0)

    def test_quarter_turn_through_polarizer(self):
        from projphase import StateVector

        target = StateVector.normalized([0.0, 1.0j])
        assert projective_phase(KET_UP, KET_X, target).angle == pytest.approx(math.pi / 2)

    def test_reduces_to_pancharatnam(self, rng):
        for _ in range(20):
            a, b = random_states_clear(3, 2, rng)
            assert phasor_gap(
                projective_phase(a, a, b).angle, pancharatnam_phase(a, b).angle
            ) < 1e-15

    def test_covering_violation_names_endpoint(self):
        with pytest.raises(CoveringViolationError) as info:
            projective_phase(KET_DOWN, KET_UP, KET_X)
        assert info.value.which == "a"
        assert info.value.overlap == pytest.approx(0.0)
        with pytest.raises(CoveringViolationError) as info:
            projective_phase(KET_X, KET_UP, KET_DOWN)
        assert info.value.which == "b"

    def test_gauge_invariance_in_reference(self, rng):
        for _ in range(20):
            a, i, b = random_states_clear(4, 3, rng)
            alpha = float(rng.uniform(-math.pi, math.pi))
            assert phasor_gap(
                projective_phase(a, i.phased(alpha), b).angle,
                projective_phase(a, i, b).angle,
            ) < 1e-12


class TestTransitionFunction:
    def test_s_ii_is_one(self, rng):
        for _ in range(10):
            i, p = random_states_clear(3, 2, rng)
            assert abs(transition_function(i, i, p).value - 1.0) < 1e-12

    def test_inverse_pair(self, rng):
        for _ in range(10):
            i, j, p = random_states_clear(3, 3, rng)
            prod = transition_function(i, j, p) * transition_function(j, i, p)
            assert abs(prod.value - 1.0) < 1e-12

    def test_bloch_transition_is_azimuth_phasor(self):
        from projphase import BlochPoint, to_state

        point = BlochPoint(2.0, -1.3)
        val = transition_function(KET_UP, KET_DOWN, to_state(point)).value
        assert abs(val - np.exp(-1.3j)) < 1e-14

    def test_covering_violation(self):
        with pytest.raises(CoveringViolationError):
            transition_function(KET_UP, KET_DOWN, KET_DOWN)


class TestBargmann:
    def test_repeated_state(self):
        assert bargmann_invariant([KET_X, KET_X, KET_X]).angle == pytest.approx(0.0)

    def test_octant(self):
        # one octant of the two-state sphere: invariant pi/4, half of the
        # octant solid angle pi/2 in magnitude
        assert bargmann_invariant([KET_UP, KET_X, KET_Y]).angle == pytest.approx(math.pi / 4)

    def test_great_circle_half_sphere(self):
        from projphase import StateVector

        minus_x = StateVector.normalized([1.0, -1.0])
        val = bargmann_invariant([KET_UP, KET_X, KET_DOWN, minus_x]).angle
        assert abs(abs(val) - math.pi) < 1e-12

    def test_rephasing_invariance(self, rng):
        states = random_states_clear(4, 5, rng)
        ref = bargmann_invariant(states).angle
        shifted = [s.phased(float(a)) for s, a in zip(states, rng.uniform(-3, 3, 5))]
        assert phasor_gap(bargmann_invariant(shifted).angle, ref) < 1e-12

    def test_needs_three_states(self):
        with pytest.raises(ValueError):
            bargmann_invariant([KET_UP, KET_X])

    def test_orthogonal_pair_identified(self):
        with pytest.raises(OrthogonalStatesError, match=r"\(1, 2\)"):
            bargmann_invariant([KET_X, KET_UP, KET_DOWN])


class TestCompose:
    def test_identity_element(self):
        x = PhaseValue.principal(0.4)
        assert compose_segments(x, PhaseValue.principal(0.0)).angle == pytest.approx(0.4)

    def test_wrapping(self):
        out = compose_segments(PhaseValue.principal(math.pi / 2),
                               PhaseValue.principal(3 * math.pi / 4))
        assert out.angle == pytest.approx(-3 * math.pi / 4)
        assert out.branch == "principal"

    def test_segment_associativity(self, rng):
        for _ in range(20):
            s0, s1, s2, i = random_states_clear(3, 4, rng)
            lhs = compose_segments(projective_phase(s0, i, s1), projective_phase(s1, i, s2))
            rhs = projective_phase(s0, i, s2)
            assert phasor_gap(lhs.angle, rhs.angle) < 1e-12

    def test_unwrapped_branch_propagates(self):
        out = compose_segments(PhaseValue.unwrapped(7.0), PhaseValue.principal(1.0))
        assert out.branch == "unwrapped"
        assert out.angle == pytest.approx(8.0)


class TestSwitchCovering:
    def test_identity_path(self):
        one = UnitPhasor(1.0 + 0.0j)
        assert switch_covering(one, one, one, one, one).value == pytest.approx(1.0)

    def test_matches_direct_phase(self, rng):
        # random path 0 -> t1 -> t2 -> t3 leaving the i covering in the middle
        for _ in range(20):
            s0, s1, s2, s3, i, j = random_states_clear(3, 6, rng)
            product = switch_covering(
                projective_phase(s0, i, s1).phasor(),
                transition_function(i, j, s1),
                projective_phase(s1, j, s2).phasor(),
                transition_function(j, i, s2),
                projective_phase(s2, i, s3).phasor(),
            )
            direct = projective_phase(s0, i, s3).phasor()
            assert abs(product.value - direct.value) < 1e-9

    def test_infinitesimal_inside_segment(self, rng):
        # when the inside segment collapses, the jump is the product of the
        # two transition functions alone
        s0, s1, i, j = random_states_clear(3, 4, rng)
        product = switch_covering(
            projective_phase(s0, i, s1).phasor(),
            transition_function(i, j, s1),
            UnitPhasor(1.0 + 0.0j),
            transition_function(j, i, s1),
            UnitPhasor(1.0 + 0.0j),
        )
        assert abs(product.value - projective_phase(s0, i, s1).phasor().value) < 1e-12


class TestDecomposition:
    def test_projective_splits_into_bargmann_and_pancharatnam(self, rng):
        # arg(<a|i><i|b>) = arg(<a|i><i|b><b|a>) + arg<a|b> modulo 2 pi:
        # the cyclic invariant plus the direct-comparison phase that removes
        # the dynamical content of the segment.
        for _ in range(30):
            a, i, b = random_states_clear(4, 3, rng)
            lhs = projective_phase(a, i, b).angle
            rhs = bargmann_invariant([a, i, b]).angle + pancharatnam_phase(a, b).angle
            assert phasor_gap(lhs, rhs) < 1e-12


class TestGeodesicIntegralEquivalence:
    def test_connection_sum_along_geodesic_chain(self, rng):
        # Chain a -> i -> b sampled at 10^4 points per geodesic: the summed
        # connection increments reproduce the projective phase. (The chain
        # direction makes the identity exact; see the decisions notes.)
        for _ in range(3):
            a, i, b = random_states_clear(3, 3, rng)
            k = 10_000
            grid = np.linspace(0.0, 1.0, k)
            g1 = Geodesic.between(a, i)
            g2 = Geodesic.between(i, b)
            chain = [a]
            chain += [geodesic_point(g1, float(s)) for s in grid[1:-1]]
            chain.append(i)
            chain += [geodesic_point(g2, float(s)) for s in grid[1:-1]]
            chain.append(b)
            total = sum(connection_increment(x, y) for x, y in zip(chain, chain[1:]))
            assert phasor_gap(total, projective_phase(a, i, b).angle) < 1e-6
