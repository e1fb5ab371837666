"""Exception hierarchy.

Every domain error carries a stable ``name`` so the CLI can report it verbatim.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all domain errors raised by the library."""

    @property
    def name(self) -> str:
        return type(self).__name__

    def to_json(self) -> dict:
        return {"error": self.name, "message": str(self)}


# polycore
class NotDivisible(AlgebraError):
    pass


class DivideByZero(AlgebraError, ZeroDivisionError):
    pass


class NotSplitOverRationals(AlgebraError):
    pass


# parity
class SameParity(AlgebraError):
    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step

    def to_json(self) -> dict:
        out = super().to_json()
        if self.step is not None:
            out["step"] = self.step
        return out


class NotHook(AlgebraError):
    pass


class IncompatibleCounts(AlgebraError):
    pass


# lweight
class ParityMismatch(AlgebraError):
    pass


class NotStandardParity(AlgebraError):
    pass


class InvalidLWeight(AlgebraError):
    pass


# qchar11
class WrongRank(AlgebraError):
    pass


class NegativeMultiplicity(AlgebraError):
    pass


class NonTermination(AlgebraError):
    pass


# tableaux
class NotContained(AlgebraError):
    pass


class TableauOverflow(AlgebraError):
    pass


# bethe
class PoleAtEvaluation(AlgebraError):
    pass


class NotASolution(AlgebraError):
    pass


class DegenerateReproduction(AlgebraError):
    pass


# diffop
class OrderMismatch(AlgebraError):
    pass
