"""Exception hierarchy shared by all linmatch modules."""


class LinmatchError(Exception):
    """Base class for every error raised by this package."""


# group matchings
class SpecMismatch(LinmatchError, ValueError):
    pass


class SizeMismatch(LinmatchError, ValueError):
    pass


class TooLarge(LinmatchError, ValueError):
    pass


# fields and polynomials
class ZeroPolynomial(LinmatchError, ValueError):
    pass


class NotDecidable(LinmatchError):
    """Irreducibility (or root existence) cannot be settled by the implemented criteria."""


class ContextMismatch(LinmatchError, ValueError):
    pass


class RationalBase(LinmatchError, ValueError):
    """Operation is only defined over a finite prime field."""


class NotADivisor(LinmatchError, ValueError):
    pass


class NotIrreducible(LinmatchError, ValueError):
    pass


class NotPrimeDegree(LinmatchError, ValueError):
    pass


# linear matchings
class ZeroElement(LinmatchError, ValueError):
    pass


class DimensionMismatch(LinmatchError, ValueError):
    pass


class SearchExhausted(LinmatchError):
    """A search gave up before proving or disproving existence."""


class BoundExceeded(LinmatchError):
    pass


# prime degree
class GcdNotOne(LinmatchError, ValueError):
    pass


class InvariantViolation(LinmatchError, AssertionError):
    """An internally computed object failed its own consistency check."""
