"""Exception hierarchy and resource guards."""

import os


class DestabError(Exception):
    """Base class for all library errors."""


class InputError(DestabError, ValueError):
    """Malformed user input (bad file, bad field, float literal...)."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class CentralSubgroup(DestabError):
    """The one-parameter subgroup lies in the centre and has no building point."""


class SingularMatrix(DestabError):
    pass


class NotInParabolic(DestabError):
    pass


class EmptyScheme(DestabError):
    """The ideal is the unit ideal, so V(I) is empty before anything starts."""


class NotStabilized(DestabError):
    pass


class FlatnessViolation(DestabError):
    pass


class ZeroVector(DestabError):
    pass


class ZeroPolynomial(DestabError):
    pass


class DegenerateDegree(DestabError):
    pass


class Degenerate(DestabError):
    """The embedded scheme lies in a hyperplane (its ideal has a linear form)."""


class TooLarge(DestabError):
    """A combinatorial guard tripped."""


def cell_limit(default):
    """Return the combinatorial guard, overridable through ``DESTAB_MAX_CELLS``."""
    value = os.environ.get("DESTAB_MAX_CELLS")
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise InputError(f"DESTAB_MAX_CELLS must be an integer, got {value!r}",
                         field="DESTAB_MAX_CELLS")
