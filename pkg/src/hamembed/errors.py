"""Exception hierarchy.

Every error carries a stable ``code`` string so the CLI and tests can tell
failure causes apart without parsing messages.
"""


class HamEmbedError(Exception):
    code = "error"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class DomainError(HamEmbedError, ValueError):
    """A query was made outside the domain of an operation."""

    code = "domain"


class ParameterError(DomainError):
    code = "invalid-params"


class LambdaEqualsMuError(ParameterError):
    code = "lambda-equals-mu"


class InstanceError(HamEmbedError, ValueError):
    """Malformed instance or result file.

    ``code`` is one of ``schema``, ``unknown-vertex``, ``color-range``,
    ``multiplicity``.
    """

    code = "schema"


class ConstructionError(HamEmbedError):
    """A construction step was invoked without its preconditions.

    ``condition`` names the failed condition identifier.
    """

    code = "construction"

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class ContractViolation(HamEmbedError, RuntimeError):
    """Internal invariant broken. Always a bug, never a user error."""

    code = "contract"


class BudgetExceeded(HamEmbedError):
    code = "budget"
