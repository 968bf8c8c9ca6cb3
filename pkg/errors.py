"""
Error types for the almost contact Norden toolkit
Every error carries the exit code the command-line front end reports
"""


class ACNError(Exception):
    """Base class for all toolkit errors"""

    exit_code = 1

    def __init__(self, message, field=None):
        super().__init__(message)
        self.message = message
        self.field = field

    def __str__(self):
        if self.field:
            return f"{self.field}: {self.message}"
        return self.message


class ParseError(ACNError):
    """Malformed expression or input document"""

    exit_code = 2


class ValidationError(ACNError):
    """Well-formed input with inconsistent shape or content"""

    exit_code = 2


class SymbolTableError(ValidationError):
    """Duplicate symbols, unknown symbols or non-triangular square rules"""


class ComputationError(ACNError):
    """A computation precondition does not hold"""

    exit_code = 3


class TableMismatchError(ComputationError):
    """Operands live in different symbol tables"""


class DivisionByZeroError(ComputationError):
    """Division by a scalar whose normal form is zero"""


class SingularMatrixError(ComputationError):
    """Matrix inverse requested for a matrix with zero determinant"""


class RuleViolationError(ComputationError):
    """Substitution or parameter choice contradicts a square rule"""


class NotASubalgebraError(ComputationError):
    """Tangent space is not closed under the bracket"""


class InconsistentDataError(ComputationError):
    """Two routes to the same quantity disagree"""


class SectionTypeError(ACNError):
    """Normal section is not of the type an operation requires"""

    exit_code = 4
