import math

import numpy as np
import pytest

from projphase import (
    BlochConnection,
    BlochPoint,
    CoveringViolationError,
    PreconditionError,
    bargmann_invariant,
    curvature_flux,
    from_state,
    phasor_gap,
    random_state,
    solid_angle,
    to_state,
)
from projphase.bloch import DOWN, UP, path_from_states
from conftest import KET_DOWN, KET_UP, KET_X


def constant_theta_loop(theta, windings=1, samples=512):
    phis = np.linspace(0.0, windings * 2.0 * math.pi, samples + 1)
    return [BlochPoint(theta, float(p)) for p in phis]


class TestChart:
    def test_north_pole(self):
        assert np.allclose(to_state(BlochPoint(0.0, 0.0)).amplitudes, KET_UP.amplitudes)

    def test_south_pole(self):
        assert np.allclose(to_state(BlochPoint(math.pi, 0.0)).amplitudes,
                           KET_DOWN.amplitudes)

    def test_equator(self):
        assert np.allclose(to_state(BlochPoint(math.pi / 2, 0.0)).amplitudes,
                           KET_X.amplitudes)

    def test_theta_range_enforced(self):
        with pytest.raises(ValueError):
            BlochPoint(-0.1, 0.0)

    def test_round_trip(self, rng):
        for _ in range(50):
            p = BlochPoint(float(rng.uniform(0.05, math.pi - 0.05)),
                           float(rng.uniform(-math.pi, math.pi)))
            q = from_state(to_state(p))
            assert q.theta == pytest.approx(p.theta, abs=1e-12)
            assert phasor_gap(q.phi, p.phi) < 1e-12

    def test_phase_blind(self, rng):
        p = BlochPoint(1.0, 0.3)
        q = from_state(to_state(p).phased(float(rng.uniform(-3, 3))))
        assert q.theta == pytest.approx(p.theta, abs=1e-12)
        assert q.phi == pytest.approx(p.phi, abs=1e-12)

    def test_pole_azimuth_fallback(self):
        assert from_state(KET_UP).phi == 0.0
        prev = BlochPoint(0.4, 2.2)
        assert from_state(KET_UP, previous=prev).phi == 2.2

    def test_continuity_against_previous(self):
        prev = BlochPoint(1.0, 3.0)
        nxt = from_state(to_state(BlochPoint(1.0, 3.4)), previous=prev)
        # 3.4 wraps to -2.88...; continuity restores the unbounded value
        assert nxt.phi == pytest.approx(3.4, abs=1e-12)

    def test_path_tracks_many_windings(self):
        pts = constant_theta_loop(1.2, windings=3, samples=600)
        states = [to_state(p) for p in pts]
        tracked = path_from_states(states)
        assert tracked[-1].phi - tracked[0].phi == pytest.approx(6 * math.pi, abs=1e-9)


class TestConnection:
    def test_gauge_difference_is_minus_one(self):
        up = BlochConnection(UP)
        down = BlochConnection(DOWN)
        for theta in np.linspace(0.01, math.pi - 0.01, 25):
            assert up.a_phi(theta) - down.a_phi(theta) == pytest.approx(-1.0)

    def test_unknown_covering_rejected(self):
        with pytest.raises(ValueError):
            BlochConnection("sideways")


class TestCurvatureFlux:
    def test_constant_theta_closed_forms(self):
        for theta in (0.4, 1.0, math.pi / 2, 2.4):
            loop = constant_theta_loop(theta)
            assert curvature_flux(loop, UP) == pytest.approx(
                -0.5 * (1 - math.cos(theta)) * 2 * math.pi, abs=1e-9)
            assert curvature_flux(loop, DOWN) == pytest.approx(
                +0.5 * (1 + math.cos(theta)) * 2 * math.pi, abs=1e-9)

    def test_covering_difference_counts_winding(self):
        for windings in (1, 2, 3):
            loop = constant_theta_loop(0.9, windings=windings)
            diff = curvature_flux(loop, UP) - curvature_flux(loop, DOWN)
            assert diff == pytest.approx(-2 * math.pi * windings, abs=1e-9)

    def test_deformed_loop_same_integer(self, rng):
        phis = np.linspace(0.0, 2 * math.pi, 2001)
        thetas = 1.1 + 0.35 * np.sin(3 * phis)
        loop = [BlochPoint(float(t), float(p)) for t, p in zip(thetas, phis)]
        diff = curvature_flux(loop, UP) - curvature_flux(loop, DOWN)
        assert diff == pytest.approx(-2 * math.pi, abs=1e-9)

    def test_pole_margin(self):
        loop = constant_theta_loop(math.pi - 1e-8)
        with pytest.raises(CoveringViolationError):
            curvature_flux(loop, UP)
        loop = constant_theta_loop(1e-8)
        with pytest.raises(CoveringViolationError):
            curvature_flux(loop, DOWN)

    def test_open_loop_rejected(self):
        pts = [BlochPoint(1.0, p) for p in np.linspace(0.0, 3.0, 64)]
        with pytest.raises(PreconditionError, match="close"):
            curvature_flux(pts, UP)

    def test_matches_projective_segment_sum(self):
        # flux oracle against the sum of per-segment cyclic invariants
        theta, n = 1.3, 10_000
        loop = constant_theta_loop(theta, samples=n)
        states = [to_state(p) for p in loop]
        i = KET_UP
        total = sum(
            bargmann_invariant([a, i, b]).angle for a, b in zip(states, states[1:])
        )
        assert abs(total - curvature_flux(loop, UP)) < 1e-6


class TestSolidAngle:
    def test_octant_magnitude(self):
        pts = [BlochPoint(0.0, 0.0), BlochPoint(math.pi / 2, 0.0),
               BlochPoint(math.pi / 2, math.pi / 2)]
        assert abs(solid_angle(pts)) == pytest.approx(math.pi / 2, abs=1e-12)

    def test_orientation_flip(self):
        fwd = [BlochPoint(0.0, 0.0), BlochPoint(math.pi / 2, 0.0),
               BlochPoint(math.pi / 2, math.pi / 2)]
        assert solid_angle(fwd) == pytest.approx(-solid_angle(fwd[::-1]), abs=1e-12)

    def test_degenerate_polygon(self):
        a = BlochPoint(0.7, 0.1)
        b = BlochPoint(1.2, 0.9)
        assert solid_angle([a, a, b]) == 0.0

    def test_lune_through_poles(self):
        pts = [BlochPoint(0.0, 0.0), BlochPoint(math.pi / 2, 0.0),
               BlochPoint(math.pi, 0.0), BlochPoint(math.pi / 2, math.pi)]
        assert abs(solid_angle(pts)) == pytest.approx(2 * math.pi, abs=1e-12)

    def test_antipodal_edge_rejected(self):
        pts = [BlochPoint(math.pi / 2, 0.0), BlochPoint(math.pi / 2, math.pi),
               BlochPoint(0.0, 0.0)]
        with pytest.raises(PreconditionError, match="antipodal"):
            solid_angle(pts)

    def test_needs_three_vertices(self):
        with pytest.raises(ValueError):
            solid_angle([BlochPoint(0.1, 0.0), BlochPoint(0.2, 0.0)])

    def test_area_law_random_triangles(self, rng):
        for _ in range(10):
            while True:
                tri = [random_state(2, rng) for _ in range(3)]
                vecs = [from_state(s).unit_vector() for s in tri]
                dots = [abs(float(np.dot(vecs[k], vecs[(k + 1) % 3]))) for k in range(3)]
                if max(dots) < 0.99:
                    break
            omega = solid_angle([from_state(s) for s in tri])
            assert phasor_gap(bargmann_invariant(tri).angle, -omega / 2) < 1e-9
