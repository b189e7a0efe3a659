"""Exception hierarchy shared by all entmon modules."""


class EntmonError(Exception):
    """Base class for all entmon errors."""


class ShapeMismatch(EntmonError):
    """Matrix dimensions incompatible with the requested operation."""


class DimMismatch(EntmonError):
    """Objects of different Hilbert-space dimensions were combined."""


class NonHermitian(EntmonError):
    """Matrix violates Hermitian symmetry beyond tolerance."""


class NoConvergence(EntmonError):
    """Iterative solver hit its sweep limit before converging."""


class InvalidDensity(EntmonError):
    """Matrix is not a valid density operator (trace one, PSD, Hermitian)."""


class NegativeCoefficient(EntmonError):
    """A Schmidt coefficient was negative."""


class AllZero(EntmonError):
    """All Schmidt coefficients were zero."""


class AlphaOutOfRange(EntmonError):
    """Isotropic mixedness parameter outside [0, 1]."""


class NotPrime(EntmonError):
    """MUB family construction requested for a non-prime dimension."""


class ZeroVariance(EntmonError):
    """A marginal is deterministic under the chosen outcome values."""


class OutOfRangeInput(EntmonError):
    """Measured value outside the mathematically valid input range."""


class WrongDimension(EntmonError):
    """Operation defined only for a specific qudit dimension."""


class BoundaryPoint(EntmonError):
    """Closed-form derivative evaluated on the simplex boundary."""


class WrongPlane(EntmonError):
    """Detection-plane configuration does not match the operation."""


class ParseError(EntmonError):
    """Matrix file could not be parsed as a numeric grid."""


class NegativeEntry(EntmonError):
    """Raw correlation matrix contains a negative entry."""


class DimInconsistent(EntmonError):
    """Matrices in one set do not share a common dimension."""


class ModelMismatch(EntmonError):
    """Estimation model incompatible with the measurement configuration."""
