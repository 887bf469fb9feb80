"""Exception hierarchy shared by all modules."""


class HilbertSOError(Exception):
    """Base class for every error raised by this package."""


# quadfield
class NotSquarefree(HilbertSOError, ValueError):
    pass


class TrivialField(HilbertSOError, ValueError):
    pass


class DegenerateBasis(HilbertSOError, ValueError):
    pass


class NoRepresentation(HilbertSOError, ValueError):
    pass


class ParseError(HilbertSOError, ValueError):
    pass


# ideals
class ZeroIdeal(HilbertSOError, ValueError):
    pass


class NotIntegral(HilbertSOError, ValueError):
    pass


class BadDivisor(HilbertSOError, ValueError):
    pass


class NotPrimitive(HilbertSOError, ValueError):
    pass


# modgroup
class NoBezout(HilbertSOError, ArithmeticError):
    """The Bezout equation defining an Atkin-Lehner matrix has no solution."""


class WrongCase(HilbertSOError, ValueError):
    pass


class NotTotallyPositiveUnit(HilbertSOError, ValueError):
    pass


class NotInGamma(HilbertSOError, ValueError):
    pass


# ortho4
class WrongSignature(HilbertSOError, ValueError):
    pass


class NotOrthogonal(HilbertSOError, ValueError):
    pass


# isomap
class IrrationalEntry(HilbertSOError, AssertionError):
    """An entry that must be rational came out irrational.

    Only an implementation bug can trigger this; callers should treat it as fatal.
    """


class NotInImage(HilbertSOError, ValueError):
    pass


class NotIntegralImage(HilbertSOError, ValueError):
    pass


# action
class PoleAtPoint(HilbertSOError, ZeroDivisionError):
    pass


class SingularAutomorphy(HilbertSOError, AssertionError):
    pass
