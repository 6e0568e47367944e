"""Classical velocity-space kinematics of a free relativistic point particle.

A motion state is a pair of unit vectors. ``r = (r_1, 0, r_3)`` lives in the
i-k plane and carries the signed speed ``r_1`` and the proper-time speed
``r_3 = dtau/dt``; ``s`` is the direction of motion. Velocity is ``r_1 * s``.
Units have c = 1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    OnAxisError,
    SpeedOutOfRangeError,
    ZeroMomentumError,
    ZeroVelocityError,
)
from .linalg import IDENTITY_TOL, as_vector, rodrigues_rotation

J_AXIS = np.array([0.0, 1.0, 0.0])
K_AXIS = np.array([0.0, 0.0, 1.0])
QUADRANT_TOL = 1e-12


class Branch(enum.Enum):
    UP = "up"
    DOWN = "down"


class Quadrant(enum.Enum):
    """Quadrant of r in the i-k plane, keyed by (sign r_1, sign r_3)."""

    PARTICLE_UP = "ParticleUp"  # (+, +)
    ANTIPARTICLE_UP = "AntiparticleUp"  # (+, -)
    ANTIPARTICLE_DOWN = "AntiparticleDown"  # (-, -)
    PARTICLE_DOWN = "ParticleDown"  # (-, +)


@dataclass(frozen=True)
class KinematicState:
    r: np.ndarray
    s: np.ndarray

    def __post_init__(self):
        r = as_vector(self.r, 3).copy()
        s = as_vector(self.s, 3).copy()
        if abs(r[1]) > IDENTITY_TOL:
            raise ValueError(f"r must lie in the i-k plane, got r_2 = {r[1]!r}")
        r[1] = 0.0
        for name, v in (("r", r), ("s", s)):
            if abs(np.linalg.norm(v) - 1.0) > IDENTITY_TOL:
                raise ValueError(f"{name} must be a unit vector, got norm {np.linalg.norm(v)!r}")
            v.setflags(write=False)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    @classmethod
    def at_rest(cls, branch: Branch = Branch.UP) -> "KinematicState":
        return cls(K_AXIS, K_AXIS if branch is Branch.UP else -K_AXIS)


def velocity(state: KinematicState) -> np.ndarray:
    return state.r[0] * state.s


def proper_time_speed(state: KinematicState) -> float:
    return float(state.r[2])


def check_constraint(state: KinematicState) -> float:
    """|v^2 + tau_dot^2 - 1|, which is zero for every physical state."""
    v = velocity(state)
    return abs(float(v @ v) + proper_time_speed(state) ** 2 - 1.0)


def energy(state: KinematicState, p, m: float) -> float:
    """Breit energy v.p + tau_dot m.

    This only evaluates the formula; it equals sqrt(p^2 + m^2) only when the
    state is the one actually produced by momentum ``p`` (see
    :func:`from_momentum`).
    """
    p = as_vector(p, 3)
    return float(velocity(state) @ p) + proper_time_speed(state) * m


def from_velocity(v, branch: Branch = Branch.UP) -> KinematicState:
    """One of the two states describing velocity ``v``.

    UP takes s along v and r at angle arcsin|v| from k; DOWN flips both s
    and the angle, giving the same physical velocity.
    """
    v = as_vector(v, 3)
    speed = float(np.linalg.norm(v))
    if speed >= 1.0:
        raise SpeedOutOfRangeError(f"|v| = {speed!r} must be below the speed of light")
    if speed == 0.0:
        raise ZeroVelocityError("direction undefined at rest; use KinematicState.at_rest")
    d = v / speed
    tau_dot = math.sqrt((1.0 - speed) * (1.0 + speed))
    if branch is Branch.UP:
        return KinematicState(np.array([speed, 0.0, tau_dot]), d)
    return KinematicState(np.array([-speed, 0.0, tau_dot]), -d)


def from_momentum(p, m: float, branch: Branch = Branch.UP) -> KinematicState:
    if m <= 0.0:
        raise ValueError("mass must be positive")
    p = as_vector(p, 3)
    pmag = float(np.linalg.norm(p))
    if pmag == 0.0:
        return KinematicState.at_rest(branch)
    e = math.hypot(pmag, m)
    sign = 1.0 if branch is Branch.UP else -1.0
    # r = (|p|, 0, m) / E directly; going through v = p/E loses digits in r_3
    return KinematicState(np.array([sign * pmag / e, 0.0, m / e]), sign * p / pmag)


def momentum_from_state(state: KinematicState, m: float) -> np.ndarray:
    """Momentum m v / tau_dot = m (r_1 / r_3) s of a particle in ``state``."""
    r3 = proper_time_speed(state)
    if r3 == 0.0:
        raise ZeroDivisionError("momentum diverges at tau_dot = 0")
    return m * (state.r[0] / r3) * state.s


def rotate_s(state: KinematicState, axis, angle: float) -> KinematicState:
    return KinematicState(state.r, rodrigues_rotation(axis, angle) @ state.s)


def rotate_r(state: KinematicState, angle: float) -> KinematicState:
    """Rotate r about the j axis; this changes speed while keeping r in-plane."""
    return KinematicState(rodrigues_rotation(J_AXIS, angle) @ state.r, state.s)


def helicity(state: KinematicState, p) -> float:
    p = as_vector(p, 3)
    pmag = float(np.linalg.norm(p))
    if pmag == 0.0:
        raise ZeroMomentumError("helicity is undefined for p = 0")
    return float(state.s @ p) / pmag


def classify_quadrant(state: KinematicState) -> Quadrant:
    r1, r3 = state.r[0], state.r[2]
    if abs(r1) <= QUADRANT_TOL or abs(r3) <= QUADRANT_TOL:
        raise OnAxisError(f"r = {state.r} lies on an axis")
    if r3 > 0:
        return Quadrant.PARTICLE_UP if r1 > 0 else Quadrant.PARTICLE_DOWN
    return Quadrant.ANTIPARTICLE_UP if r1 > 0 else Quadrant.ANTIPARTICLE_DOWN
