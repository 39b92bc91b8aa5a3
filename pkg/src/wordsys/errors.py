"""Exception types shared across the package.

Every domain error raised by the library is a subclass of ``WordsysError``,
so callers (in particular the CLI) can catch one type and report the
subclass name as the error code.
"""


class WordsysError(Exception):
    """Base class for all domain errors raised by this package."""


class LengthMismatchError(WordsysError):
    """Two words were required to have equal length but do not."""


class InvalidLetterError(WordsysError):
    """A word uses a letter outside the declared alphabet."""


class BadLengthError(WordsysError):
    """A word sits at a level that does not match its length."""


class NotClosedError(WordsysError):
    """A leveled family fails the subword-closure requirement."""


class MissingTableError(WordsysError):
    """A required injection table is absent."""


class RangeError(WordsysError):
    """An injection table maps into elements not present at the target level."""


class NotValidError(WordsysError):
    """A Cartesian system failed validation."""


class HorizonTooSmallError(WordsysError):
    """The operation needs more levels than the input provides."""


class ShapeError(WordsysError):
    """A matrix has dimensions inconsistent with its declared level."""


class NotCoisometricError(WordsysError):
    """A product matrix fails the row-orthonormality requirement."""


class NotAssociativeError(WordsysError):
    """The product matrices fail the associativity identity."""


class SizeLimitError(WordsysError):
    """A dense tensor-power computation would exceed the size guard."""


class EmptyWordError(WordsysError):
    """The empty word is not allowed here."""


class PreconditionViolatedError(WordsysError):
    """The nested-block construction's root inequality fails.

    ``index`` is the first level m at which it fails.
    """

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"root condition fails at level {index}")


class BudgetExceededError(WordsysError):
    """An exhaustive search ran out of budget.

    Carries the best value found so far, which is only a lower bound.
    """

    def __init__(self, best, witness, message: str = ""):
        self.best = best
        self.witness = witness
        super().__init__(message or "search budget exceeded; result is a lower bound")


class SchemaError(WordsysError):
    """A document does not conform to its JSON schema.

    ``pointer`` is a JSON-pointer string locating the offending value.
    """

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer
        super().__init__(f"{pointer}: {message}")
