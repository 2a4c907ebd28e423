"""Exception types shared by all oalpha modules."""


class OalphaError(Exception):
    """Base class for every error raised by this package."""


class AngleDegenerateError(OalphaError):
    """Angle is within tolerance of an integer multiple of pi."""


class AngleOutOfRangeError(OalphaError):
    """Angle has sin(alpha) <= 0; only the upper half-range is supported."""


class DomainError(OalphaError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class GridError(OalphaError):
    """Sampling grid does not satisfy an operation's requirements."""


class GridAsymmetryError(GridError):
    """Grid is not centered on zero, which the +-s combination needs."""


class NonUniformGridError(GridError):
    """Samples are not uniformly spaced within tolerance."""


class TailMassError(OalphaError):
    """Signal does not decay at the grid ends; truncated quadrature invalid."""


class SingularWeightError(OalphaError):
    """Non-integrable weight singularity inside the grid support."""


class WindowError(OalphaError):
    """Too few usable points inside a fit window."""


class EmptySetError(OalphaError):
    """Interval set has zero measure."""


class BandwidthError(OalphaError):
    """Requested bandwidth is at or above the grid Nyquist rate."""


class InputError(OalphaError):
    """Empty or inconsistent top-level input to the harness."""


class ParseError(OalphaError):
    """Malformed signal file."""


class EmptyFileError(ParseError):
    """Signal file contains no data rows."""


class IoError(OalphaError):
    """Failure writing or reading an artifact file."""
