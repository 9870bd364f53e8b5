"""Exception types raised by numrange.

Separate classes (rather than bare ValueError) so callers and the CLI can
map failure modes to exit codes without string matching.
"""


class NumrangeError(Exception):
    """Base class for all numrange errors."""


class NotHermitian(NumrangeError):
    """Matrix handed to a Hermitian-only routine is not (numerically) Hermitian."""


class FullSpace(NumrangeError):
    """Orthogonal complement of the whole space was requested."""


class ZeroNotEnclosed(NumrangeError):
    """A zero-of-the-quadratic-form vector was requested but 0 lies outside the range."""


class CrawfordZero(NumrangeError):
    """A verifier that requires a positive Crawford number got c(T) ~ 0."""


class DimensionMismatch(NumrangeError):
    """Operator/vector/space dimensions are incompatible with the operation."""


class DimensionTooLarge(NumrangeError):
    """Exact sign-vector enumeration was requested above the dimension cap."""


class NotUnitVector(NumrangeError):
    """Vector is not on the unit sphere of the requested space."""


class PolygonTooSmall(NumrangeError):
    """Polygonal construction needs more vertices than the given polygon has."""


class PreconditionFailed(NumrangeError):
    """A checker's precondition does not hold; carries the violated item."""

    def __init__(self, item, message=None):
        self.item = item
        super().__init__(message or f"precondition violated: {item}")


class FieldMismatch(NumrangeError):
    """Operation does not support the operator's scalar field / space combination."""


class InputFormatError(NumrangeError):
    """Malformed matrix / vector / space JSON."""
