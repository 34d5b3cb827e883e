"""Exception types shared across the package."""


class PolyzetaError(Exception):
    """Base class for the domain errors raised by this package."""


class AlphabetMismatchError(PolyzetaError):
    """Letters or words from incompatible alphabets were combined."""


class ShapeError(PolyzetaError):
    """A word does not have the shape required by the series encoding."""


class DiagonalError(PolyzetaError):
    """Shift tuples violate the common-diagonal requirement."""


class DivergenceError(PolyzetaError):
    """A numeric operation was asked for on a divergent parameter set."""
