class UnavoidableError(Exception):
    """Base class for errors raised by this package."""


class InvalidInputError(UnavoidableError, ValueError):
    """Malformed or inconsistent input (bad vertex index, non-facet, ...)."""


class CapacityError(UnavoidableError):
    """The requested computation exceeds a configured size limit.

    Raised instead of silently truncating an exhaustive search.
    """


class CertificationError(UnavoidableError):
    """A loaded complex failed one of the structural checks of its profile."""

    def __init__(self, name, invariant, detail=""):
        self.name = name
        self.invariant = invariant
        msg = f"{name}: certification failed at '{invariant}'"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
