"""Exception hierarchy for the EHIG toolkit"""

from typing import Any


class EHIGError(Exception):
    """Base class for all toolkit errors"""


class InputError(EHIGError, ValueError):
    """Malformed user input"""


class FormatError(InputError):
    """Text format parse error carrying its position"""

    def __init__(self, message: str, line: int | None = None, column: int = 1):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class GraphInputError(InputError):
    """Invalid graph input (loops, multi-edges, unknown labels)"""


class HypergraphInputError(InputError):
    """Invalid interval hypergraph input"""


class ContractError(EHIGError):
    """A caller broke an operation's precondition"""


class NotIntervalGraphError(ContractError):
    """Operation requires an interval graph"""

    def __init__(self, message: str, refutation: Any = None):
        super().__init__(message)
        self.refutation = refutation


class GuardExceededError(EHIGError):
    """An exponential routine refused an input above its size guard"""

    def __init__(self, guard: str, limit: int, actual: int):
        self.guard = guard
        self.limit = limit
        self.actual = actual
        super().__init__(
            f"{guard} exceeded: input size {actual} is above the limit {limit}"
        )
