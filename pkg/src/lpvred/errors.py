"""Exception types raised across the package."""

__all__ = [
    "LpvError",
    "DimensionError",
    "ParameterRangeError",
    "WellPosednessError",
    "RationalDependenceError",
    "StabilityError",
    "FeasibilityError",
    "NumericalError",
]


class LpvError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(LpvError, ValueError):
    """Matrix or channel dimensions are inconsistent."""


class ParameterRangeError(LpvError, ValueError):
    """A scheduling-parameter value lies outside its admissible box."""


class WellPosednessError(LpvError):
    """A fractional-transformation loop is singular for an admissible block."""


class RationalDependenceError(LpvError):
    """An operation would create non-affine parameter dependence."""


class StabilityError(LpvError):
    """A computation requires a Hurwitz state matrix and did not get one."""


class FeasibilityError(LpvError):
    """A matrix-inequality problem is infeasible or no stable candidate exists."""


class NumericalError(LpvError):
    """An iterative numerical procedure failed to converge or broke down."""
