"""Exception hierarchy shared across the package.

Every error carries a stable ``code`` string; the CLI uses it when rendering
JSON error objects.
"""


class NildecompError(Exception):
    code = "error"

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.context = context


class ParseError(NildecompError):
    """Malformed input file or scalar string (CLI exit code 2)."""

    code = "parse_error"


class DivisionByZero(NildecompError):
    code = "division_by_zero"


class AmbientMismatch(NildecompError):
    code = "ambient_mismatch"


class DimensionMismatch(NildecompError):
    code = "dimension_mismatch"


class SingularMatrix(NildecompError):
    code = "singular_matrix"


class NotASubalgebra(NildecompError):
    code = "not_a_subalgebra"


class NotAnIdeal(NildecompError):
    code = "not_an_ideal"


class NotNilpotent(NildecompError):
    code = "not_nilpotent"


class NotSolvableNonnilpotent(NildecompError):
    code = "not_solvable_nonnilpotent"


class WrongTag(NildecompError):
    code = "wrong_tag"


class InternalContradiction(NildecompError):
    """An identity that is provably true for valid input failed to hold.

    Raised by the constructive algorithms when a step contradicts what the
    underlying theory guarantees; it always signals a precondition violation
    (or a bug), never a recoverable condition.
    """

    code = "internal_contradiction"


class ConstraintViolation(NildecompError):
    code = "constraint_violation"

    def __init__(self, message: str, report=None, **context):
        super().__init__(message, **context)
        self.report = report


class NotQuotientPreserving(NildecompError):
    code = "not_quotient_preserving"


class InvalidParameters(NildecompError):
    code = "invalid_parameters"


class UnknownLabel(NildecompError):
    code = "unknown_label"


class MissingParameter(NildecompError):
    code = "missing_parameter"


class InvalidParameter(NildecompError):
    code = "invalid_parameter"
