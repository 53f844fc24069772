"""Exception hierarchy shared by every layer of the workbench."""

from typing import Optional


class WorkbenchError(ValueError):
    """Base class. Callers that only care about bad input catch this."""


class AlphabetError(WorkbenchError):
    """Elements over different generator alphabets were combined."""


class ParameterError(WorkbenchError):
    """A construction parameter is out of range (e.g. n < 2)."""


class OrientationError(WorkbenchError):
    """A rewrite rule does not decrease in the monomial order."""


class UnderdeterminedError(WorkbenchError):
    """A cocycle has no direct or derivable value on a generator."""


class ClosureError(WorkbenchError):
    """A generating set is not closed under the involution."""


class CertificationError(WorkbenchError):
    """The requested work needs a higher certified completion degree."""


class DegreeError(WorkbenchError):
    """Degree of the zero element was requested."""


class _PositionedError(WorkbenchError):

    def __init__(self, message: str, line: Optional[int] = None, col: Optional[int] = None):
        self.line = line
        self.col = col
        if line is not None and col is not None:
            message = f"{message} (line {line}, col {col})"
        super().__init__(message)


class ExpressionSyntaxError(_PositionedError):
    """Expression text does not match the grammar."""


class UnknownGeneratorError(_PositionedError):
    """Expression names a generator the alphabet does not have."""


class IndexRangeError(_PositionedError):
    """Generator index outside 1..n."""
