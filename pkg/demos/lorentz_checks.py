"""
Spinor and vector Lorentz transformations
=========================================

The spinor matrix built from the generators S^{mu nu} must conjugate the
gamma matrices into the vector-transformed ones. Rotations are unitary and
come back with a sign after a full turn; boosts are Hermitian.
"""

import math

import numpy as np

from diracgeom.algebra import (
    LorentzParameters,
    build_dirac,
    check_clifford,
    check_gamma_transformation,
    spinor_lorentz,
    vector_lorentz,
)

dset = build_dirac()
print("Clifford residual:", check_clifford(dset))

###############################################################################
# A rapidity-1 boost along k

boost = LorentzParameters.boost([0, 0, 1], 1.0)
lam = spinor_lorentz(boost, dset)
print("vector boost block:\n", vector_lorentz(boost)[[0, 3]][:, [0, 3]].round(6))
print("spinor boost Hermitian:", np.allclose(lam, lam.conj().T))
print("gamma residual (boost):", check_gamma_transformation(boost, dset))

###############################################################################
# Rotation by 2 pi gives -1 on spinors but the identity on vectors

turn = LorentzParameters.rotation([1, 1, 0] / np.sqrt(2), 2 * math.pi)
print("spinor after 2 pi:", np.round(np.diag(spinor_lorentz(turn, dset)).real, 12))
print("vector after 2 pi:", np.round(np.diag(vector_lorentz(turn)), 12))
print("gamma residual (rotation):", check_gamma_transformation(turn, dset))
