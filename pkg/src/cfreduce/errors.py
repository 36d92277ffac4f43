"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every error raised by this package."""


class ParseError(ToolkitError):
    """Malformed input file; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvalidColoringError(ToolkitError):
    """Coloring does not cover exactly the hypergraph's vertex set."""


class InvalidParameterError(ToolkitError):
    """Operation called with an argument outside its contract."""


class InvalidPairError(ToolkitError):
    """Pair classification asked about an invalid triple pair."""


class InvalidSetError(ToolkitError):
    """Vertex set contains ids outside the graph."""


class InvalidAssignmentError(ToolkitError):
    """Multicolor assignment violates its palette or phase bounds."""


class ContractViolationError(ToolkitError):
    """A verified invariant failed, e.g. a claimed independent set is not one."""


class SizeLimitError(ToolkitError):
    """Instance exceeds the exact solver's vertex cap."""


class GenerationError(ToolkitError):
    """Planted-instance generation is infeasible for the given parameters."""
