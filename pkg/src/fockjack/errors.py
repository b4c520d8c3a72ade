"""Exception hierarchy. Every error raised by the package derives from FockJackError."""

from __future__ import annotations


class FockJackError(Exception):
    pass


class DivisionByZero(FockJackError, ZeroDivisionError):
    pass


class DiscriminantMismatch(FockJackError, ValueError):
    pass


class PoleAtKappa(FockJackError, ZeroDivisionError):
    def __init__(self, kappa, detail: str = ""):
        self.kappa = kappa
        msg = f"pole at kappa = {kappa}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NotAUnit(FockJackError, ArithmeticError):
    pass


class BoxOutOfDiagram(FockJackError, ValueError):
    pass


class DegreeMismatch(FockJackError, ValueError):
    pass


class EmptyPartition(FockJackError, ValueError):
    pass


class SizeGuardExceeded(FockJackError, ValueError):
    pass


class LengthExceedsN(FockJackError, ValueError):
    pass


class GammaPole(FockJackError, ValueError):
    pass


class NotCoprime(FockJackError, ValueError):
    pass


class OutOfRange(FockJackError, ValueError):
    pass


class BadConstantTerm(FockJackError, ValueError):
    pass


class ZeroFirstOrder(FockJackError, ValueError):
    pass


class NotProportional(FockJackError, ArithmeticError):
    def __init__(self, msg: str, lhs=None, rhs=None):
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(msg)


class OutOfSector(FockJackError, ValueError):
    pass


class DegreeGuardExceeded(FockJackError, ValueError):
    pass


class NotSymmetric(FockJackError, ValueError):
    pass


class FactorizationMismatch(FockJackError, ArithmeticError):
    def __init__(self, msg: str, missing=None, extra=None):
        self.missing = missing or {}
        self.extra = extra or {}
        super().__init__(msg)


class InconsistentTable(FockJackError, ArithmeticError):
    pass


class RelationViolated(FockJackError, ArithmeticError):
    def __init__(self, entry: str, detail: str = ""):
        self.entry = entry
        super().__init__(f"relation {entry} violated" + (f": {detail}" if detail else ""))


class TriangularityViolated(FockJackError, ArithmeticError):
    pass


class NegativeCoefficient(FockJackError, ArithmeticError):
    pass


class CharacterMismatch(FockJackError, ArithmeticError):
    pass
