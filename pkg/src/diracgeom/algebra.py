"""Pauli, Dirac, gamma and spin-1 matrices, plus Lorentz generators.

Conventions: metric signature (+, -, -, -); gammas carry upper indices and
``S^{mu nu} = (i/4) [gamma^mu, gamma^nu]``. The Dirac matrices are built as
two-space products with the r-space (rho) factor outermost, so that
``alpha_i = rho_1 (x) sigma_i`` and ``beta = rho_3 (x) I``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .linalg import (
    I2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    anticommutator,
    as_vector,
    check_unit_axis,
    commutator,
    matrix_exponential,
    max_abs,
    tensor_product,
)

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
ANTISYMMETRY_TOL = 1e-14


def _frozen(m: np.ndarray) -> np.ndarray:
    m = np.array(m, dtype=complex)
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class PauliTriple:
    """Three Pauli matrices; index with 1, 2, 3 to match physics notation."""

    x: np.ndarray
    y: np.ndarray
    z: np.ndarray

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __getitem__(self, i: int) -> np.ndarray:
        if i not in (1, 2, 3):
            raise IndexError("Pauli matrices are indexed 1..3")
        return (self.x, self.y, self.z)[i - 1]

    def dot(self, n) -> np.ndarray:
        n = as_vector(n, 3)
        return n[0] * self.x + n[1] * self.y + n[2] * self.z


@dataclass(frozen=True)
class DiracSet:
    alpha: tuple[np.ndarray, np.ndarray, np.ndarray]
    beta: np.ndarray
    gamma: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]

    @property
    def alpha4(self) -> tuple[np.ndarray, ...]:
        """alpha_1, alpha_2, alpha_3 and beta, the four mutually anticommuting matrices."""
        return (*self.alpha, self.beta)


@dataclass(frozen=True)
class Spin1Triple:
    j1: np.ndarray
    j2: np.ndarray
    j3: np.ndarray

    def __iter__(self):
        return iter((self.j1, self.j2, self.j3))


@dataclass(frozen=True)
class LorentzParameters:
    """Antisymmetric parameters omega_{mu nu} (lower indices) of a Lorentz transformation.

    Use :meth:`rotation` and :meth:`boost` rather than filling the matrix by
    hand; they fix the sign conventions so that a rotation's vector
    representation equals :func:`~diracgeom.linalg.rodrigues_rotation` and a
    boost has ``Lambda^0_0 = cosh(rapidity)``.
    """

    omega: np.ndarray = field(default_factory=lambda: np.zeros((4, 4)))

    def __post_init__(self):
        omega = np.array(self.omega, dtype=float)
        if omega.shape != (4, 4):
            raise ValueError(f"omega must be 4x4, got {omega.shape}")
        if max_abs(omega + omega.T) > ANTISYMMETRY_TOL:
            raise ValueError("omega must be antisymmetric")
        omega.setflags(write=False)
        object.__setattr__(self, "omega", omega)

    @classmethod
    def rotation(cls, axis, angle: float) -> "LorentzParameters":
        n = check_unit_axis(axis)
        omega = np.zeros((4, 4))
        # omega_{ij} = angle * eps_{ijk} n_k
        omega[1, 2], omega[2, 3], omega[3, 1] = angle * n[2], angle * n[0], angle * n[1]
        return cls(omega - omega.T)

    @classmethod
    def boost(cls, direction, rapidity: float) -> "LorentzParameters":
        d = check_unit_axis(direction)
        omega = np.zeros((4, 4))
        omega[0, 1:] = rapidity * d
        return cls(omega - omega.T)

    def __add__(self, other: "LorentzParameters") -> "LorentzParameters":
        return LorentzParameters(self.omega + other.omega)


def build_pauli() -> PauliTriple:
    return PauliTriple(_frozen(SIGMA_X), _frozen(SIGMA_Y), _frozen(SIGMA_Z))


def build_dirac() -> DiracSet:
    """Standard-representation Dirac matrices assembled from two Pauli spaces."""
    rho = build_pauli()
    sigma = build_pauli()
    alpha = tuple(_frozen(tensor_product(rho.x, s)) for s in sigma)
    beta = _frozen(tensor_product(rho.z, I2))
    gamma = (beta, *(_frozen(beta @ a) for a in alpha))
    return DiracSet(alpha=alpha, beta=beta, gamma=gamma)


def check_clifford(dset: DiracSet) -> float:
    """Largest entry of {a_i, a_j} - 2 delta_ij I over alpha_1..3 and beta."""
    mats = dset.alpha4
    eye = np.eye(mats[0].shape[0])
    worst = 0.0
    for i, j in product(range(4), repeat=2):
        target = 2.0 * eye if i == j else 0.0 * eye
        worst = max(worst, max_abs(anticommutator(mats[i], mats[j]) - target))
    return worst


def spin_generator(mu: int, nu: int, dset: DiracSet | None = None) -> np.ndarray:
    dset = dset or build_dirac()
    return 0.25j * commutator(dset.gamma[mu], dset.gamma[nu])


def _spinor_algebra_element(params: LorentzParameters, dset: DiracSet) -> np.ndarray:
    gen = np.zeros((4, 4), dtype=complex)
    for mu, nu in product(range(4), repeat=2):
        w = params.omega[mu, nu]
        if w != 0.0:
            gen += w * spin_generator(mu, nu, dset)
    return -0.5j * gen


def spinor_lorentz(params: LorentzParameters, dset: DiracSet | None = None) -> np.ndarray:
    """Spinor representation exp(-(i/2) omega_{mu nu} S^{mu nu})."""
    dset = dset or build_dirac()
    return matrix_exponential(_spinor_algebra_element(params, dset))


def vector_lorentz(params: LorentzParameters) -> np.ndarray:
    """Vector representation Lambda^mu_nu = exp(g omega)."""
    return matrix_exponential(METRIC @ params.omega).real


def check_gamma_transformation(params: LorentzParameters, dset: DiracSet | None = None) -> float:
    """Max over mu of |L^-1 gamma^mu L - Lambda^mu_nu gamma^nu| for the given parameters."""
    dset = dset or build_dirac()
    spinor = spinor_lorentz(params, dset)
    # inverse from the negated generator, not from a numerical inversion
    spinor_inv = matrix_exponential(-_spinor_algebra_element(params, dset))
    lam = vector_lorentz(params)
    worst = 0.0
    for mu in range(4):
        lhs = spinor_inv @ dset.gamma[mu] @ spinor
        rhs = sum(lam[mu, nu] * dset.gamma[nu] for nu in range(4))
        worst = max(worst, max_abs(lhs - rhs))
    return worst


def build_spin1() -> Spin1Triple:
    """Angular momentum matrices for j = 1 in the J_3 eigenbasis (m = 1, 0, -1)."""
    # J_+ has <m+1|J_+|m> = sqrt(2) for j = 1
    jp = np.zeros((3, 3), dtype=complex)
    jp[0, 1] = jp[1, 2] = math.sqrt(2.0)
    jm = jp.conj().T
    j1 = 0.5 * (jp + jm)
    j2 = -0.5j * (jp - jm)
    j3 = np.diag([1.0, 0.0, -1.0]).astype(complex)
    return Spin1Triple(_frozen(j1), _frozen(j2), _frozen(j3))


def spin1_zero_velocity_state() -> np.ndarray:
    """The m = 0 state: <J_1> = <J_3> = 0, which no spin-1/2 state can achieve."""
    return np.array([0.0, 1.0, 0.0], dtype=complex)
