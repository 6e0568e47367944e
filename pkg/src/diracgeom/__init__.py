"""Velocity-space kinematics and geometric plane-wave solutions of the Dirac equation."""
from .algebra import (
    DiracSet,
    LorentzParameters,
    PauliTriple,
    Spin1Triple,
    build_dirac,
    build_pauli,
    build_spin1,
    check_clifford,
    check_gamma_transformation,
    spin1_zero_velocity_state,
    spin_generator,
    spinor_lorentz,
    vector_lorentz,
)
from .dirac import (
    PlaneWaveSolution,
    bloch_vector,
    boost_via_rotation,
    classical_correspondence,
    expectation,
    hamiltonian,
    solve,
    solve_plane_wave,
    solve_rest,
)
from .kinematics import Branch, KinematicState, Quadrant

__version__ = "0.1.0"
