"""Plane-wave Dirac solutions built by factorising spin space and r space.

For momentum p the Hamiltonian ``rho_1 (x) sigma.p + m rho_3 (x) I`` commutes
with the helicity operator, so each solution is a product ``zeta (x) eta``:
``eta`` is a helicity eigenstate in sigma space and ``zeta`` is an eigenstate
of ``s_h . rho`` in r space, where ``s_h = (h|p|, 0, m) / sqrt(p^2 + m^2)``.
Four-spinors are ordered with the r-space factor outermost, the same order
used to build ``alpha_i = rho_1 (x) sigma_i``.

Only momentum-space amplitudes are represented; the plane-wave phase
``exp(-iEt + ip.x)`` is implied by the stored ``p`` and ``energy``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import DiracSet, build_dirac
from .errors import (
    LightSpeedSingularityError,
    NonUnitDirectionError,
    NotHermitianError,
    NotNormalizedError,
    OffPlaneError,
    ZeroMomentumError,
)
from .kinematics import J_AXIS, KinematicState, Quadrant
from .linalg import (
    IDENTITY_TOL,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    as_vector,
    fix_phase,
    is_hermitian,
    kron_state,
    rodrigues_rotation,
    su2_exponential,
)

SINGULARITY_TOL = 1e-9


@dataclass(frozen=True)
class PlaneWaveSolution:
    p: np.ndarray
    m: float
    helicity_sign: int
    energy_sign: int
    energy: float
    eta: np.ndarray
    zeta: np.ndarray
    psi: np.ndarray

    @property
    def direction(self) -> np.ndarray:
        """Unit vector that spin is quantised along (p-hat, or k at rest)."""
        return self.helicity_sign * bloch_vector(self.eta)


def _solution(p, m, h, e_sign, energy, eta, zeta) -> PlaneWaveSolution:
    return PlaneWaveSolution(
        p=np.array(p, dtype=float),
        m=float(m),
        helicity_sign=int(h),
        energy_sign=int(e_sign),
        energy=float(energy),
        eta=eta,
        zeta=zeta,
        psi=kron_state(zeta, eta) + 0.0,
    )


def hamiltonian(p, m: float, dset: DiracSet | None = None) -> np.ndarray:
    """Dirac Hamiltonian alpha.p + beta m for a plane wave of momentum p."""
    if m <= 0.0:
        raise ValueError("mass must be positive")
    dset = dset or build_dirac()
    p = as_vector(p, 3)
    return sum(pi * a for pi, a in zip(p, dset.alpha)) + m * dset.beta


def _check_unit(direction, tol=IDENTITY_TOL) -> np.ndarray:
    d = as_vector(direction, 3)
    if abs(np.linalg.norm(d) - 1.0) > tol:
        raise NonUnitDirectionError(f"direction {d} is not a unit vector")
    return d


def _check_sign(sign: int) -> int:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return sign


def helicity_eigenstate(p_hat, sign: int) -> np.ndarray:
    """Eigenstate of sigma.p_hat with eigenvalue ``sign``."""
    n = _check_unit(p_hat)
    _check_sign(sign)
    polar = math.atan2(math.hypot(n[0], n[1]), n[2])
    azimuth = math.atan2(n[1], n[0])
    c, s = math.cos(polar / 2), math.sin(polar / 2)
    if sign > 0:
        v = np.array([c, np.exp(1j * azimuth) * s])
    else:
        v = np.array([-np.exp(-1j * azimuth) * s, c])
    return fix_phase(v)


def s_vectors(p_mag: float, m: float) -> tuple[np.ndarray, np.ndarray]:
    """The two kinematic unit vectors (+-p, 0, m) / sqrt(p^2 + m^2)."""
    if m <= 0.0:
        raise ValueError("mass must be positive")
    if p_mag < 0.0:
        raise ValueError("p_mag must be non-negative")
    e = math.hypot(p_mag, m)
    return np.array([p_mag / e, 0.0, m / e]), np.array([-p_mag / e, 0.0, m / e])


def r_eigenstate(direction, energy_sign: int) -> np.ndarray:
    """Eigenstate of direction.rho with eigenvalue ``energy_sign``.

    ``direction`` must be a unit vector in the i-k plane; for energy_sign = +1
    the state is (cos t/2, sin t/2) where t is the angle from k towards i.
    """
    d = _check_unit(direction)
    _check_sign(energy_sign)
    if abs(d[1]) > IDENTITY_TOL:
        raise OffPlaneError(f"direction {d} has a j component")
    half = 0.5 * math.atan2(d[0], d[2])
    c, s = math.cos(half), math.sin(half)
    v = np.array([c, s]) if energy_sign > 0 else np.array([-s, c])
    return fix_phase(v)


def solve_plane_wave(p, m: float) -> list[PlaneWaveSolution]:
    """The four plane-wave solutions for momentum p, ordered
    (E>0, h=+1), (E>0, h=-1), (E<0, h=+1), (E<0, h=-1)."""
    if m <= 0.0:
        raise ValueError("mass must be positive")
    p = as_vector(p, 3)
    pmag = float(np.linalg.norm(p))
    if pmag == 0.0:
        raise ZeroMomentumError("helicity undefined at p = 0; use solve_rest")
    p_hat = p / pmag
    e_abs = math.hypot(pmag, m)
    s_plus, s_minus = s_vectors(pmag, m)
    out = []
    for e_sign in (1, -1):
        for h, s_h in ((1, s_plus), (-1, s_minus)):
            eta = helicity_eigenstate(p_hat, h)
            zeta = r_eigenstate(s_h, e_sign)
            out.append(_solution(p, m, h, e_sign, e_sign * e_abs, eta, zeta))
    return out


def solve_rest(m: float) -> list[PlaneWaveSolution]:
    """Solutions at p = 0 with spin quantised along k.

    ``helicity_sign`` then holds the spin projection on k. Ordering matches
    :func:`solve_plane_wave`.
    """
    if m <= 0.0:
        raise ValueError("mass must be positive")
    up, down = np.array([1.0 + 0j, 0.0]), np.array([0.0 + 0j, 1.0])
    out = []
    for e_sign, zeta in ((1, up), (-1, down)):
        for h, eta in ((1, up), (-1, down)):
            out.append(_solution(np.zeros(3), m, h, e_sign, e_sign * m, eta.copy(), zeta.copy()))
    return out


def solve(p, m: float) -> list[PlaneWaveSolution]:
    """:func:`solve_plane_wave`, falling back to :func:`solve_rest` at p = 0."""
    p = as_vector(p, 3)
    return solve_rest(m) if not np.any(p) else solve_plane_wave(p, m)


def expectation(operator, psi) -> float:
    op = np.asarray(operator, dtype=complex)
    psi = as_vector(psi, dtype=complex)
    if not is_hermitian(op):
        raise NotHermitianError("expectation needs a Hermitian operator")
    if abs(np.linalg.norm(psi) - 1.0) > IDENTITY_TOL:
        raise NotNormalizedError(f"state norm {np.linalg.norm(psi)!r} is not 1")
    return float(np.vdot(psi, op @ psi).real)


def bloch_vector(state) -> np.ndarray:
    """Pauli expectation values (<sigma_1>, <sigma_2>, <sigma_3>) of a 2-state."""
    return np.array([expectation(s, state) for s in (SIGMA_X, SIGMA_Y, SIGMA_Z)])


def alpha_expectation(sol: PlaneWaveSolution, dset: DiracSet | None = None) -> np.ndarray:
    dset = dset or build_dirac()
    return np.array([expectation(a, sol.psi) for a in dset.alpha])


def beta_expectation(sol: PlaneWaveSolution, dset: DiracSet | None = None) -> float:
    dset = dset or build_dirac()
    return expectation(dset.beta, sol.psi)


def classical_correspondence(sol: PlaneWaveSolution) -> KinematicState:
    """Kinematic state whose r and s are the Bloch vectors of zeta and eta."""
    return KinematicState(bloch_vector(sol.zeta), bloch_vector(sol.eta))


def expected_quadrant(helicity_sign: int, energy_sign: int) -> Quadrant:
    """Quadrant the classical image of a solution must fall in.

    Positive energy puts r along s_h: first quadrant for h = +1, fourth for
    h = -1. Negative energy reverses r, so h = +1 lands in the third quadrant
    (spin-down antiparticle) and h = -1 in the second (spin-up antiparticle).
    """
    table = {
        (1, 1): Quadrant.PARTICLE_UP,
        (-1, 1): Quadrant.PARTICLE_DOWN,
        (1, -1): Quadrant.ANTIPARTICLE_DOWN,
        (-1, -1): Quadrant.ANTIPARTICLE_UP,
    }
    return table[(_check_sign(helicity_sign), _check_sign(energy_sign))]


def lagrangian_identity_residual(p, energy: float, m: float, dset: DiracSet | None = None) -> float:
    """Residual of gamma^0 (gamma^mu p_mu - m) = E - H in momentum space."""
    dset = dset or build_dirac()
    p = as_vector(p, 3)
    eye = np.eye(4)
    g0 = dset.gamma[0]
    slash = energy * g0 - sum(pi * g for pi, g in zip(p, dset.gamma[1:]))
    lhs = g0 @ (slash - m * eye)
    rhs = energy * eye - (sum(pi * a for pi, a in zip(p, dset.alpha)) + m * dset.beta)
    return float(np.max(np.abs(lhs - rhs)))


def rotation_conjugation_residual(axis, angle: float) -> float:
    """Max over i of |D^dagger rho_i D - R_ij rho_j| for D = exp(-i angle n.rho / 2)."""
    d = su2_exponential(axis, angle)
    rot = rodrigues_rotation(axis, angle)
    paulis = (SIGMA_X, SIGMA_Y, SIGMA_Z)
    worst = 0.0
    for i in range(3):
        lhs = d.conj().T @ paulis[i] @ d
        rhs = sum(rot[i, j] * paulis[j] for j in range(3))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def boost_via_rotation(sol: PlaneWaveSolution, phi: float) -> PlaneWaveSolution:
    """Rotate the r-space factor about j by ``phi`` and re-read it as a new plane wave.

    The spin factor eta and the quantisation axis stay fixed, so only the
    momentum modulus changes: with r at angle t from k before rotation,
    the result has ``p' = h m tan(t + phi)`` along the axis and
    ``E' = m / cos(t + phi)``, which turns negative once r crosses r_3 = 0.
    The returned zeta is exactly the rotated state, so successive calls
    compose.
    """
    r = bloch_vector(sol.zeta)
    theta = math.atan2(r[0], r[2]) + phi
    cos_t = math.cos(theta)
    if abs(cos_t) < SINGULARITY_TOL:
        raise LightSpeedSingularityError(
            f"rotated r is at angle {theta!r} from k; momentum diverges at r_3 = 0"
        )
    zeta = su2_exponential(J_AXIS, phi) @ sol.zeta
    axis = sol.direction
    signed_p = sol.helicity_sign * sol.m * math.tan(theta)
    h = sol.helicity_sign if signed_p >= 0.0 else -sol.helicity_sign
    e_sign = 1 if cos_t > 0.0 else -1
    return _solution(signed_p * axis, sol.m, h, e_sign, sol.m / cos_t, sol.eta, zeta)


__all__ = [
    "PlaneWaveSolution",
    "alpha_expectation",
    "beta_expectation",
    "bloch_vector",
    "boost_via_rotation",
    "classical_correspondence",
    "expectation",
    "expected_quadrant",
    "hamiltonian",
    "helicity_eigenstate",
    "lagrangian_identity_residual",
    "r_eigenstate",
    "rotation_conjugation_residual",
    "s_vectors",
    "solve",
    "solve_plane_wave",
    "solve_rest",
]
