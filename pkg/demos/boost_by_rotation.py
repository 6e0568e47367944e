"""
Boosting by turning the r-space factor
======================================

Rotating zeta about the j axis by phi moves its Bloch vector through the
kinematic plane. Starting from rest this produces p = m tan(phi) with
energy m / cos(phi). Passing phi = pi/2 crosses onto the antiparticle branch.
"""

import math

import numpy as np

from diracgeom import dirac
from diracgeom.errors import LightSpeedSingularityError

m = 1.0
rest = dirac.solve_rest(m)[0]

for phi in np.linspace(0.0, 1.4, 8):
    out = dirac.boost_via_rotation(rest, phi)
    print(f"phi = {phi:.2f}  p_z = {out.p[2]:+9.5f}  m tan(phi) = {m * math.tan(phi):+9.5f}  E = {out.energy:8.5f}")

###############################################################################
# Two turns add up

a, b = 0.3, 0.45
twice = dirac.boost_via_rotation(dirac.boost_via_rotation(rest, a), b)
once = dirac.boost_via_rotation(rest, a + b)
print("composition residual:", np.abs(twice.psi - once.psi).max())

###############################################################################
# Past the light cone the energy changes sign

out = dirac.boost_via_rotation(rest, 2.0)
print("phi = 2.0  energy sign:", out.energy_sign, " <beta> =", round(dirac.beta_expectation(out), 6))

try:
    dirac.boost_via_rotation(rest, math.pi / 2)
except LightSpeedSingularityError as exc:
    print("phi = pi/2:", exc)
