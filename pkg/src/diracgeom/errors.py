"""Exception types raised by diracgeom."""


class DiracGeomError(ValueError):
    """Base class for all domain errors in this package."""


class NotHermitianError(DiracGeomError):
    pass


class NoConvergenceError(DiracGeomError, ArithmeticError):
    pass


class NonUnitAxisError(DiracGeomError):
    pass


class NonUnitDirectionError(DiracGeomError):
    pass


class OffPlaneError(DiracGeomError):
    """A vector meant to live in the i-k plane has a j component."""


class NotNormalizedError(DiracGeomError):
    pass


class SpeedOutOfRangeError(DiracGeomError):
    pass


class ZeroVelocityError(DiracGeomError):
    pass


class ZeroMomentumError(DiracGeomError):
    pass


class OnAxisError(DiracGeomError):
    """Kinematic vector on the i or k axis has no quadrant."""


class LightSpeedSingularityError(DiracGeomError, ArithmeticError):
    """Rotated kinematic vector reached the r_3 = 0 axis, where momentum diverges."""
