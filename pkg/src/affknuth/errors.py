"""Exception types.

Input problems derive from :class:`ValueError` and map to CLI exit code 2.
Broken internal invariants derive from :class:`InvariantError` and map to
exit code 1.
"""


class AffknuthError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(AffknuthError, ValueError):
    pass


class InvariantError(AffknuthError, RuntimeError):
    """An internal consistency check failed."""


class DuplicateResidue(ValidationError):
    pass


class UndefinedPosition(ValidationError):
    pass


class IncompleteTabloid(ValidationError):
    pass


class SizeMismatch(ValidationError):
    pass


class SharedRowOrColumn(ValidationError):
    pass


class OverlappingData(ValidationError):
    pass


class UnequalRows(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class EmptyPermutation(ValidationError):
    pass


class MalformedFiber(ValidationError):
    """The stream and partial permutation are not a valid pair for the
    backward step."""


class NotRebasable(ValidationError):
    pass


class UnknownTheorem(ValidationError):
    pass
