"""Exception types shared across the package."""


class FermatQuadError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(FermatQuadError, ValueError):
    """Non-finite numbers, zero or wrong-sign weights, bad parameters."""


class DegenerateInputError(FermatQuadError, ValueError):
    """Geometrically degenerate input: coincident points, collinear
    overlap of segments, repeated or collinear vertices."""


class DegenerateCoefficientsError(FermatQuadError):
    """Equilibrium quartic collapses because |B1| == |B4|; the caller
    must handle the resulting linear equation itself."""


class WrongCaseError(FermatQuadError):
    """A closed-form case solver was called on an instance outside its
    weight pattern or convexity requirements."""


class NotFloatingError(WrongCaseError):
    """A floating-case method was called on an absorbed configuration."""

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class NonConvergenceError(FermatQuadError):
    """Iterative solver hit its iteration cap; carries the last iterate."""

    def __init__(self, message: str, last=None, residual: float | None = None):
        super().__init__(message)
        self.last = last
        self.residual = residual


class InternalInconsistencyError(FermatQuadError):
    """A verified postcondition failed, e.g. two vertices passing the
    absorbed test at once (possible only near a numerical tie)."""
