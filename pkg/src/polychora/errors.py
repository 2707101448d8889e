"""Exception types shared across the engine."""


class PolychoraError(Exception):
    """Base class for everything this package raises on purpose."""


class UnknownPolytopeError(PolychoraError):
    """Name is not one of the six regular 4-polytopes."""


class ZeroVectorError(PolychoraError):
    """Radial projection of a (near-)zero vector."""


class AntipodalPairError(PolychoraError):
    """Slerp between antipodal points: the geodesic is not unique."""


class NearPoleError(PolychoraError):
    """Stereographic projection evaluated too close to the pole."""


class SubdivisionTooDeepError(PolychoraError):
    """Tessellation level above the memory guard."""


class ConfigError(PolychoraError):
    """Game configuration out of bounds."""


class NonMonotonicTimeError(PolychoraError):
    """Step timestamps must be nondecreasing."""


class BadStepError(PolychoraError):
    """Trajectory step size out of bounds."""


class TrajectoryFormatError(PolychoraError):
    """Malformed trajectory or event-log line.

    Carries the 1-based line number in .line when parsed from a file.
    """

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
