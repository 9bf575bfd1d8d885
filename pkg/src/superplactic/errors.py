"""Exception hierarchy for the superplactic package.

Every domain error raised by this package derives from SuperplacticError,
so callers (and the command line driver) can distinguish bad mathematical
input from genuine bugs.
"""


class SuperplacticError(Exception):
    """Base class for all domain errors raised by this package."""


class AlphabetError(SuperplacticError):
    """Malformed signed alphabet: duplicate symbol, length mismatch, bad parity."""


class ForeignLetterError(SuperplacticError):
    """A symbol or letter index does not belong to the alphabet in play."""


class AlphabetMismatchError(SuperplacticError):
    """Two objects built over different alphabets were combined."""


class ShapeError(SuperplacticError):
    """Malformed partition or skew shape, or a shape-level precondition failed."""


class ValidationError(SuperplacticError):
    """A filling violates the super semistandard conditions.

    Attributes carry the first offending cell (1-based) and which condition
    broke: "row" for the horizontal condition, "column" for the vertical one.
    """

    def __init__(self, message, cell=None, condition=None):
        super().__init__(message)
        self.cell = cell
        self.condition = condition


class CornerError(SuperplacticError):
    """A deletion was requested at a cell that is not a removable corner."""


class BoundExceededError(SuperplacticError):
    """A desk-scale size bound was exceeded; raise the bound explicitly to proceed."""


class HypothesisError(SuperplacticError):
    """Input does not satisfy the hypotheses of a restricted theorem.

    Kept distinct from the other domain errors so harnesses can route such
    inputs to unrestricted probes instead of treating them as failures.
    """
