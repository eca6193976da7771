"""Exception hierarchy shared by every module of the toolkit."""


class GinvError(Exception):
    """Base class for all toolkit errors."""


class ShapeError(GinvError, ValueError):
    """Operands have incompatible shapes."""


class SingularMatrixError(GinvError, ArithmeticError):
    """A square matrix is singular at the configured rank tolerance."""


class NonexistenceError(GinvError, ArithmeticError):
    """The requested group inverse does not exist.

    ``operand`` names the matrix whose group inverse is missing, when known.
    """

    def __init__(self, message, operand=None):
        super().__init__(message)
        self.operand = operand


class CertificationError(GinvError, ArithmeticError):
    """A computed object failed its own defining-equation certificate."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class ConstraintError(GinvError, ValueError):
    """Generator parameters violate the family's scalar constraints."""


class PreconditionError(GinvError, ValueError):
    """A verifier's hypothesis does not hold for the given operands.

    ``report`` carries the failing hypothesis report.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class MatrixParseError(GinvError, ValueError):
    """Malformed matrix file; carries 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
