"""Exception types shared across the package."""


class DoreError(Exception):
    """Base class for all errors raised by this package."""


class ContextMismatch(DoreError):
    """Operands belong to different base contexts (field or generator list)."""


class ZeroInverse(DoreError):
    """Multiplicative inverse of zero requested."""


class DivisorNotInvertible(DoreError):
    """A fraction literal whose denominator is not invertible in the field."""


class ParseError(DoreError):
    """Syntax error in an expression, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownGenerator(DoreError):
    """A name was used that is not a declared generator."""


class SpecFormatError(DoreError):
    """An extension-spec document is structurally malformed."""


class ArityError(SpecFormatError):
    """A sigma matrix, delta column or tail has the wrong shape."""


class UnvalidatedSpec(DoreError):
    """Normal-form arithmetic requested on a spec not known to be consistent."""


class PreconditionFailed(DoreError):
    """A transform was applied to a spec outside its domain."""


class SingularBasis(DoreError):
    """A basis-change matrix with zero determinant."""


class ShapeError(DoreError):
    """A basis change whose quadratic relation cannot be put in extension shape.

    ``residuals`` holds the mismatch at the three quadratic components
    (y1^2, y1*y2, y2^2); ``z2_squared`` is the y2^2 component, which is the
    z2^2 obstruction whenever the second new generator is y2 itself.
    """

    def __init__(self, message: str, z2_squared, residuals):
        super().__init__(message)
        self.z2_squared = z2_squared
        self.residuals = residuals


class ZeroB(DoreError):
    """The b parameter of the anti-diagonal example family must be nonzero."""
