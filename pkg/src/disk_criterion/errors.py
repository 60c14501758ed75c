"""Exception hierarchy for disk-criterion."""


class DiskCriterionError(Exception):
    """Base class for all disk-criterion errors."""

    exit_code: int = 3


class InputError(DiskCriterionError, ValueError):
    """Malformed shape input or out-of-bounds coordinate."""

    exit_code = 2

    def __init__(self, message: str, line: int | None = None):
        """
        Initialize input error.

        Args:
            message: Human-readable description
            line: 1-based line number in the shape file, if known
        """
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractViolation(DiskCriterionError):
    """An operation was called outside its precondition."""


class NoArcError(DiskCriterionError):
    """Arc endpoints lie in different components of the region."""


class NoCycleError(DiskCriterionError):
    """The boundary is not a single cycle."""

    exit_code = 1


class IncompleteNetError(DiskCriterionError):
    """The dyadic net does not exhaust the arc."""


class InternalInvariantViolation(DiskCriterionError):
    """An exact audit failed; indicates a bug, never bad input."""
