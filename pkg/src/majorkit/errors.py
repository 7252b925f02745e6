"""Exception hierarchy shared by the whole package.

Everything derives from :class:`MajorkitError` so callers can catch the
package's failures with one clause.  Input-shaped problems additionally
derive from ``ValueError``.
"""


class MajorkitError(Exception):
    """Base class for all errors raised by majorkit."""


class ParseError(MajorkitError, ValueError):
    """A literal, vector, matrix, or cycle string is malformed."""


class DimensionMismatch(MajorkitError, ValueError):
    """Operands have incompatible lengths or shapes."""


class NotDecreasing(MajorkitError, ValueError):
    """An operation required a decreasing (sorted) vector."""


class NegativeInput(MajorkitError, ValueError):
    """An operation required nonnegative entries."""


class NotMajorized(MajorkitError):
    """The target vector is not majorized by the source vector."""


class NotDoublyStochastic(MajorkitError):
    """A matrix failed the exact doubly stochastic test."""


class GroupTooLarge(MajorkitError):
    """Group generation or enumeration exceeded the element cap."""


class SubgroupUnsupported(MajorkitError):
    """Membership queries are only decided for the full symmetric group."""


class NotMember(MajorkitError):
    """The point lies outside the permutohedron."""


class VerificationError(MajorkitError):
    """A certificate failed its exact re-verification."""
