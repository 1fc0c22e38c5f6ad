"""Exception hierarchy.

Each class carries the CLI exit code it maps to, so the command layer never
needs a lookup table.
"""


class MultisatError(Exception):
    exit_code = 3


class ParameterDomainError(MultisatError, ValueError):
    """A numeric parameter (k, n, t, ...) is outside its admissible range."""


class IndexDomainError(MultisatError, IndexError):
    """A vertex coordinate or part index is out of range."""


class MultipartiteViolationError(MultisatError, ValueError):
    """An edge joins two vertices of the same part."""


class ContractError(MultisatError, ValueError):
    """A caller broke an operation's precondition."""


class NoClosedFormError(MultisatError, ValueError):
    """The construction has no closed-form edge count."""


class CapExceededError(MultisatError, ValueError):
    """Host is too large for exhaustive enumeration."""


class Graph6ParseError(MultisatError, ValueError):
    exit_code = 5

    def __init__(self, message: str, offset: int | None = None) -> None:
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset
