import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diracgeom.errors import (
    NonUnitAxisError,
    OnAxisError,
    SpeedOutOfRangeError,
    ZeroMomentumError,
    ZeroVelocityError,
)
from diracgeom.kinematics import (
    Branch,
    KinematicState,
    Quadrant,
    check_constraint,
    classify_quadrant,
    energy,
    from_momentum,
    from_velocity,
    helicity,
    momentum_from_state,
    proper_time_speed,
    rotate_r,
    rotate_s,
    velocity,
)

from conftest import angles, momenta, unit_vectors

I, J, K = np.eye(3)
REST = KinematicState.at_rest()


@st.composite
def velocities(draw):
    d = draw(unit_vectors())
    return draw(st.floats(min_value=1e-6, max_value=0.999)) * d


@st.composite
def states(draw):
    theta = draw(angles)
    return KinematicState([math.sin(theta), 0.0, math.cos(theta)], draw(unit_vectors()))


class TestState:
    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            KinematicState(1.1 * np.array([0.6, 0, 0.8]), K)
        with pytest.raises(ValueError):
            KinematicState([0.6, 0, 0.8], 2 * K)

    def test_rejects_off_plane_r(self):
        with pytest.raises(ValueError):
            KinematicState([0.6, 0.1, math.sqrt(1 - 0.37)], K)

    def test_r2_is_exact_zero(self):
        state = KinematicState([0.6, 1e-14, 0.8], K)
        assert state.r[1] == 0.0

    def test_immutable(self):
        with pytest.raises(ValueError):
            REST.r[0] = 1.0


class TestVelocity:
    def test_rest(self):
        assert np.array_equal(velocity(KinematicState(K, I)), [0, 0, 0])

    def test_light_speed_limit(self):
        assert np.array_equal(velocity(KinematicState(I, I)), [1, 0, 0])

    def test_diagonal(self):
        state = KinematicState([math.sin(math.pi / 4), 0, math.cos(math.pi / 4)], K)
        assert np.allclose(velocity(state), [0, 0, 1 / math.sqrt(2)], atol=1e-15)

    @given(states())
    def test_speed_is_abs_r1(self, state):
        assert abs(np.linalg.norm(velocity(state)) - abs(state.r[0])) < 1e-15


class TestProperTimeSpeed:
    def test_rest(self):
        assert proper_time_speed(REST) == 1.0

    @given(st.floats(0, 1.5))
    def test_time_dilation(self, theta):
        state = KinematicState([math.sin(theta), 0, math.cos(theta)], K)
        speed = np.linalg.norm(velocity(state))
        assert abs(proper_time_speed(state) - math.sqrt(1 - speed**2)) < 1e-12

    def test_antiparticle_branch_negative(self):
        theta = 0.4
        assert proper_time_speed(KinematicState([math.sin(theta), 0, -math.cos(theta)], K)) < 0


class TestConstraint:
    @settings(max_examples=300)
    @given(states())
    def test_random_states(self, state):
        assert check_constraint(state) < 1e-12

    @settings(max_examples=200)
    @given(momenta(), st.sampled_from(list(Branch)))
    def test_from_momentum(self, pm, branch):
        assert check_constraint(from_momentum(*pm, branch)) < 1e-12


class TestEnergy:
    def test_rest(self):
        assert energy(REST, [0, 0, 0], 1.0) == 1.0

    def test_consistent_state(self):
        state = from_momentum([0, 0, 1], 1.0)
        assert abs(energy(state, [0, 0, 1], 1.0) - math.sqrt(2)) < 1e-12

    def test_inconsistent_state_is_formula_only(self):
        state = KinematicState([0.6, 0, 0.8], I)
        assert energy(state, [0, 0, 3.0], 2.0) == pytest.approx(0.8 * 2.0, abs=1e-15)

    @settings(max_examples=300)
    @given(momenta(p_min=0.0), st.sampled_from(list(Branch)))
    def test_breit_equals_dispersion(self, pm, branch):
        p, m = pm
        e = math.sqrt(p @ p + m * m)
        assert abs(energy(from_momentum(p, m, branch), p, m) - e) < 1e-12


class TestFromVelocity:
    def test_up(self):
        state = from_velocity([0, 0, 0.6], Branch.UP)
        assert np.array_equal(state.s, K)
        assert np.allclose(state.r, [0.6, 0, 0.8], atol=1e-15)

    def test_down(self):
        state = from_velocity([0, 0, 0.6], Branch.DOWN)
        assert np.array_equal(state.s, -K)
        assert np.allclose(state.r, [-0.6, 0, 0.8], atol=1e-15)

    def test_matches_arcsin_construction(self):
        v = np.array([0.1, -0.3, 0.5])
        theta = math.asin(np.linalg.norm(v))
        up, down = from_velocity(v, Branch.UP), from_velocity(v, Branch.DOWN)
        assert np.allclose(up.r, [math.sin(theta), 0, math.cos(theta)], atol=1e-15)
        assert np.allclose(down.r, [math.sin(-theta), 0, math.cos(-theta)], atol=1e-15)

    @settings(max_examples=300)
    @given(velocities())
    def test_two_valuedness(self, v):
        up, down = from_velocity(v, Branch.UP), from_velocity(v, Branch.DOWN)
        assert np.max(np.abs(velocity(up) - v)) < 1e-12
        assert np.max(np.abs(velocity(down) - v)) < 1e-12
        assert proper_time_speed(up) == proper_time_speed(down) > 0
        assert helicity(up, v) == pytest.approx(1, abs=1e-12)
        assert helicity(down, v) == pytest.approx(-1, abs=1e-12)

    def test_errors(self):
        with pytest.raises(SpeedOutOfRangeError):
            from_velocity([1.0, 0, 0])
        with pytest.raises(SpeedOutOfRangeError):
            from_velocity([0.8, 0.8, 0])
        with pytest.raises(ZeroVelocityError):
            from_velocity([0, 0, 0])


class TestFromMomentum:
    def test_unit_momentum(self):
        state = from_momentum([0, 0, 1], 1.0, Branch.UP)
        s = 1 / math.sqrt(2)
        assert np.allclose(state.r, [s, 0, s], atol=1e-15)
        assert np.array_equal(state.s, K)

    def test_rest(self):
        up, down = from_momentum([0, 0, 0], 2.0, Branch.UP), from_momentum([0, 0, 0], 2.0, Branch.DOWN)
        assert np.array_equal(up.r, K) and np.array_equal(up.s, K)
        assert np.array_equal(down.s, -K)
        assert energy(up, [0, 0, 0], 2.0) == 2.0

    @given(momenta())
    def test_helicity(self, pm):
        p, m = pm
        assert helicity(from_momentum(p, m, Branch.UP), p) == pytest.approx(1, abs=1e-12)
        assert helicity(from_momentum(p, m, Branch.DOWN), p) == pytest.approx(-1, abs=1e-12)

    @given(momenta())
    def test_velocity_is_p_over_e(self, pm):
        p, m = pm
        e = math.sqrt(p @ p + m * m)
        for branch in Branch:
            assert np.max(np.abs(velocity(from_momentum(p, m, branch)) - p / e)) < 1e-12

    @given(momenta())
    def test_momentum_round_trip(self, pm):
        p, m = pm
        for branch in Branch:
            assert np.max(np.abs(momentum_from_state(from_momentum(p, m, branch), m) - p)) < 1e-10

    def test_rejects_nonpositive_mass(self):
        with pytest.raises(ValueError):
            from_momentum([0, 0, 1], 0.0)


class TestRotations:
    def test_rotate_s_zero(self):
        state = from_velocity([0.3, 0.2, 0.1])
        assert np.array_equal(rotate_s(state, K, 0.0).s, state.s)

    def test_rotate_s_quarter(self):
        state = KinematicState([0.6, 0, 0.8], I)
        assert np.allclose(rotate_s(state, K, math.pi / 2).s, J, atol=1e-15)

    @given(states(), unit_vectors(), angles)
    def test_rotate_s_preserves_speed_and_tau(self, state, n, theta):
        rotated = rotate_s(state, n, theta)
        assert np.array_equal(rotated.r, state.r)
        assert proper_time_speed(rotated) == proper_time_speed(state)
        assert abs(np.linalg.norm(velocity(rotated)) - np.linalg.norm(velocity(state))) < 1e-15
        assert check_constraint(rotated) < 1e-12

    def test_rotate_s_bad_axis(self):
        with pytest.raises(NonUnitAxisError):
            rotate_s(REST, [0, 0, 0.5], 1.0)

    @given(st.floats(-1.5, 1.5))
    def test_rotate_r_from_rest(self, theta):
        rotated = rotate_r(REST, theta)
        assert np.allclose(rotated.r, [math.sin(theta), 0, math.cos(theta)], atol=1e-15)
        assert abs(np.linalg.norm(velocity(rotated)) - abs(math.sin(theta))) < 1e-15

    def test_rotate_r_pi_flips_branch(self):
        state = KinematicState([0.6, 0, 0.8], K)
        flipped = rotate_r(state, math.pi)
        assert proper_time_speed(flipped) < 0
        assert classify_quadrant(flipped) is Quadrant.ANTIPARTICLE_DOWN

    def test_rotate_r_full_turn(self):
        state = KinematicState([0.6, 0, 0.8], K)
        assert np.allclose(rotate_r(state, 2 * math.pi).r, state.r, atol=1e-15)

    @given(states(), angles)
    def test_rotate_r_inverse(self, state, phi):
        back = rotate_r(rotate_r(state, phi), -phi)
        assert np.max(np.abs(back.r - state.r)) < 1e-12
        assert back.r[1] == 0.0


class TestHelicity:
    def test_values(self):
        p = np.array([0, 3.0, 4.0])
        d = p / 5
        assert helicity(KinematicState(K, d), p) == pytest.approx(1)
        assert helicity(KinematicState(K, -d), p) == pytest.approx(-1)
        assert helicity(KinematicState(K, I), p) == 0

    def test_zero_momentum(self):
        with pytest.raises(ZeroMomentumError):
            helicity(REST, [0, 0, 0])


class TestQuadrant:
    @pytest.mark.parametrize(
        "r, expected",
        [
            ([0.6, 0, 0.8], Quadrant.PARTICLE_UP),
            ([0.6, 0, -0.8], Quadrant.ANTIPARTICLE_UP),
            ([-0.6, 0, -0.8], Quadrant.ANTIPARTICLE_DOWN),
            ([-0.6, 0, 0.8], Quadrant.PARTICLE_DOWN),
        ],
    )
    def test_quadrants(self, r, expected):
        assert classify_quadrant(KinematicState(r, K)) is expected

    @pytest.mark.parametrize("r", [[0, 0, 1], [1, 0, 0], [0, 0, -1], [-1, 0, 0]])
    def test_on_axis(self, r):
        with pytest.raises(OnAxisError):
            classify_quadrant(KinematicState(r, K))

    def test_branches_land_in_particle_quadrants(self):
        v = [0.2, 0.1, -0.4]
        assert classify_quadrant(from_velocity(v, Branch.UP)) is Quadrant.PARTICLE_UP
        assert classify_quadrant(from_velocity(v, Branch.DOWN)) is Quadrant.PARTICLE_DOWN
