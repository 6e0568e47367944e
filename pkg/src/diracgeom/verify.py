"""Randomised invariant suites shared by the ``verify`` command.

Every check draws from its own ``numpy.random.Generator`` (PCG64), seeded
from the user seed and a CRC32 of the check name, so results depend only on
(seed, draws) and not on which other checks run or in what order.
"""
from __future__ import annotations

import math
import zlib
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import algebra, dirac, kinematics
from .errors import OnAxisError
from .linalg import eigenprojector, hermitian_eigensystem, pauli_dot


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    draws: int
    max_residual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


def check_rng(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng([int(seed), zlib.crc32(name.encode())])


def random_unit(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_momentum(rng: np.random.Generator) -> tuple[np.ndarray, float]:
    """Momentum with |p| in [0.01, 10] and mass in [0.1, 10]."""
    return rng.uniform(0.01, 10.0) * random_unit(rng), float(rng.uniform(0.1, 10.0))


def random_state2(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return v / np.linalg.norm(v)


def _clifford(rng, draws):
    return algebra.check_clifford(algebra.build_dirac())


def _dispersion(rng, draws):
    worst = 0.0
    for _ in range(draws):
        p, m = random_momentum(rng)
        e = math.hypot(np.linalg.norm(p), m)
        values = [v for v, _ in hermitian_eigensystem(dirac.hamiltonian(p, m))]
        worst = max(worst, float(np.max(np.abs(np.array(values) - [-e, -e, e, e]))))
    return worst


def _breit(rng, draws):
    dset = algebra.build_dirac()
    worst = 0.0
    for _ in range(draws):
        p, m = random_momentum(rng)
        for sol in dirac.solve_plane_wave(p, m):
            a = dirac.alpha_expectation(sol, dset)
            b = dirac.beta_expectation(sol, dset)
            worst = max(
                worst,
                float(np.max(np.abs(a - p / sol.energy))),
                abs(b - m / sol.energy),
                abs(float(a @ a) + b * b - 1.0),
            )
    return worst


def _projectors(rng, draws):
    worst = 0.0
    for _ in range(draws):
        p, m = random_momentum(rng)
        pairs = hermitian_eigensystem(dirac.hamiltonian(p, m))
        sols = dirac.solve_plane_wave(p, m)
        for sign in (1, -1):
            oracle = eigenprojector(pairs, lambda v: sign * v > 0)
            ours = sum(np.outer(s.psi, s.psi.conj()) for s in sols if s.energy_sign == sign)
            worst = max(worst, float(np.linalg.norm(oracle - ours)))
    return worst


def _rotation_conjugation(rng, draws):
    return max(
        dirac.rotation_conjugation_residual(random_unit(rng), rng.uniform(-math.pi, math.pi))
        for _ in range(draws)
    )


def _gamma_transformation(rng, draws):
    dset = algebra.build_dirac()
    worst = 0.0
    for _ in range(draws):
        n = random_unit(rng)
        rot = algebra.LorentzParameters.rotation(n, rng.uniform(-math.pi, math.pi))
        boost = algebra.LorentzParameters.boost(random_unit(rng), rng.uniform(-3.0, 3.0))
        worst = max(
            worst,
            algebra.check_gamma_transformation(rot, dset),
            algebra.check_gamma_transformation(boost, dset),
        )
    return worst


def _lagrangian(rng, draws):
    worst = 0.0
    for _ in range(draws):
        p, m = random_momentum(rng)
        worst = max(worst, dirac.lagrangian_identity_residual(p, rng.uniform(-20.0, 20.0), m))
    return worst


def _geometry(rng, draws):
    """Count of solutions outside their predicted quadrant or with <beta> >= 0 at E < 0."""
    failures = 0
    for _ in range(draws):
        p, m = random_momentum(rng)
        for sol in dirac.solve_plane_wave(p, m):
            try:
                quad = kinematics.classify_quadrant(dirac.classical_correspondence(sol))
            except OnAxisError:
                quad = None
            if quad is not dirac.expected_quadrant(sol.helicity_sign, sol.energy_sign):
                failures += 1
            if sol.energy_sign < 0 and dirac.beta_expectation(sol) >= 0.0:
                failures += 1
    return float(failures)


def _rel(a, b) -> float:
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b)) / max(1.0, float(np.max(np.abs(b)))))


def sample_boost_case(rng, margin: float = 1e-3):
    """Positive-energy solution and two angles keeping every |cos| above ``margin``."""
    while True:
        p, m = random_momentum(rng)
        sol = dirac.solve_plane_wave(p, m)[int(rng.integers(2))]
        phi1, phi2 = rng.uniform(-math.pi / 2, math.pi / 2, size=2)
        r = dirac.bloch_vector(sol.zeta)
        theta = math.atan2(r[0], r[2])
        if min(abs(math.cos(theta + phi1)), abs(math.cos(theta + phi1 + phi2))) > margin:
            return sol, float(phi1), float(phi2), theta


def boost_residual(sol, phi1, phi2, theta) -> float:
    """Composition, inversion and momentum-extraction residuals of one boost case."""
    once = dirac.boost_via_rotation(sol, phi1)
    twice = dirac.boost_via_rotation(once, phi2)
    direct = dirac.boost_via_rotation(sol, phi1 + phi2)
    back = dirac.boost_via_rotation(once, -phi1)
    state = dirac.classical_correspondence(once)
    expected_p = sol.helicity_sign * sol.m * math.tan(theta + phi1) * sol.direction
    return max(
        _rel(twice.psi, direct.psi),
        _rel(twice.p, direct.p),
        _rel(twice.energy, direct.energy),
        _rel(back.psi, sol.psi),
        _rel(back.p, sol.p),
        _rel(back.energy, sol.energy),
        _rel(once.p, expected_p),
        _rel(kinematics.momentum_from_state(state, sol.m), once.p),
    )


def _boost_rotation(rng, draws):
    return max(boost_residual(*sample_boost_case(rng)) for _ in range(draws))


def _spin1(rng, draws):
    s1 = algebra.build_spin1()
    state = algebra.spin1_zero_velocity_state()
    return max(abs(dirac.expectation(s1.j1, state)), abs(dirac.expectation(s1.j3, state)))


def _pauli_purity(rng, draws):
    worst = 0.0
    for _ in range(draws):
        b = dirac.bloch_vector(random_state2(rng))
        worst = max(worst, abs(float(b @ b) - 1.0))
    return worst


def _kinematic_constraint(rng, draws):
    worst = 0.0
    for _ in range(draws):
        p, m = random_momentum(rng)
        e = math.hypot(np.linalg.norm(p), m)
        v = p / e
        for branch in kinematics.Branch:
            from_p = kinematics.from_momentum(p, m, branch)
            from_v = kinematics.from_velocity(v, branch)
            worst = max(
                worst,
                kinematics.check_constraint(from_p),
                abs(kinematics.energy(from_p, p, m) - e),
                float(np.max(np.abs(kinematics.velocity(from_v) - v))),
            )
    return worst


def _helicity_commutation(rng, draws):
    worst = 0.0
    for _ in range(draws):
        p, m = random_momentum(rng)
        h = dirac.hamiltonian(p, m)
        op = np.kron(np.eye(2), pauli_dot(p / np.linalg.norm(p)))
        worst = max(worst, float(np.max(np.abs(h @ op - op @ h))))
    return worst


CHECKS: dict[str, tuple[Callable, float, bool]] = {
    # name: (suite, tolerance, uses random draws)
    "boost_rotation": (_boost_rotation, 1e-10, True),
    "breit_correspondence": (_breit, 1e-10, True),
    "clifford": (_clifford, 1e-14, False),
    "dispersion": (_dispersion, 1e-10, True),
    "gamma_transformation": (_gamma_transformation, 1e-10, True),
    "geometry_quadrants": (_geometry, 1.0, True),
    "helicity_commutation": (_helicity_commutation, 1e-14, True),
    "kinematic_constraint": (_kinematic_constraint, 1e-12, True),
    "lagrangian_identity": (_lagrangian, 1e-14, True),
    "pauli_purity": (_pauli_purity, 1e-12, True),
    "projector_oracle": (_projectors, 1e-9, True),
    "rotation_conjugation": (_rotation_conjugation, 1e-12, True),
    "spin1_zero_velocity": (_spin1, 1e-14, False),
}


def run_verification(
    seed: int = 42, draws: int = 100, tolerance_override: float | None = None
) -> list[VerificationReport]:
    if draws < 1:
        raise ValueError("draws must be at least 1")
    reports = []
    for name in sorted(CHECKS):
        suite, tol, randomised = CHECKS[name]
        if tolerance_override is not None:
            tol = tolerance_override
        n = draws if randomised else 1
        residual = float(suite(check_rng(seed, name), n))
        reports.append(VerificationReport(name, n, residual, tol, residual < tol))
    return reports
