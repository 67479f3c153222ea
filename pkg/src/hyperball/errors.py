"""Exception types raised across the package.

Every error derives from :class:`HyperballError`, so callers (and the CLI)
can catch one base class and report ``type(err).__name__``.
"""


class HyperballError(Exception):
    """Base class for all package errors."""


class SingularMatrix(HyperballError, ValueError):
    pass


class NonFiniteInput(HyperballError, ValueError):
    pass


class NotRealizable(HyperballError, ValueError):
    pass


class DivisionByZero(HyperballError, ValueError):
    """An essential angle equals pi/2, so the auxiliary angle is pi/2."""


class NotProperPoint(HyperballError, ValueError):
    pass


class ArgumentBelowOne(HyperballError, ValueError):
    pass


class PlanesIntersect(HyperballError, ValueError):
    pass


class FamilyMismatch(HyperballError, ValueError):
    pass


class UnsupportedFamily(HyperballError, ValueError):
    pass


class VertexNotTruncated(HyperballError, ValueError):
    pass


class NegativeHeight(HyperballError, ValueError):
    pass


class EmptyAdmissibleSet(HyperballError, ValueError):
    pass


class ParseError(HyperballError, ValueError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(where + message)


class CountMismatch(HyperballError, ValueError):
    pass


class MissingParameter(HyperballError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class RuleMissing(HyperballError, LookupError):
    pass


class UnboundGenerator(HyperballError, KeyError):
    def __str__(self):
        return Exception.__str__(self)
