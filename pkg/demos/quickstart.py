"""
Plane waves and their two-sphere geometry
=========================================

Solve the free Dirac equation for one momentum and look at each solution
as a pair of Bloch vectors. The r-space factor zeta lives in the i-k
plane; its quadrant tells particle from antiparticle and up from down.
"""

import numpy as np

from diracgeom import dirac, kinematics

np.set_printoptions(precision=6, suppress=True)

p = np.array([0.0, 0.0, 1.0])
m = 1.0

###############################################################################
# Four solutions, ordered (E+, h+), (E+, h-), (E-, h+), (E-, h-)

sols = dirac.solve_plane_wave(p, m)
for sol in sols:
    print(f"E = {sol.energy:+.6f}  h = {sol.helicity_sign:+d}  psi = {sol.psi.real}")

###############################################################################
# Each psi is an exact eigenvector of H

h = dirac.hamiltonian(p, m)
print("max |H psi - E psi| =", max(np.abs(h @ s.psi - s.energy * s.psi).max() for s in sols))

###############################################################################
# Expectation values reproduce p/E and m/E, i.e. velocity and proper-time speed

for sol in sols:
    print("<alpha> =", dirac.alpha_expectation(sol), " <beta> =", round(dirac.beta_expectation(sol), 6))

###############################################################################
# The factor Bloch vectors give a classical kinematic state

for sol in sols:
    state = dirac.classical_correspondence(sol)
    print(f"r = {state.r}  s = {state.s}  ->  {kinematics.classify_quadrant(state).value}")
