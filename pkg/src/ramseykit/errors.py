"""Exception types shared by all ramseykit modules."""

from __future__ import annotations


class RamseyKitError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(RamseyKitError, ValueError):
    """An argument is outside the operation's domain."""


class PreconditionError(RamseyKitError, ValueError):
    """A mathematical precondition of an operation does not hold.

    The message names the failing object (interval, cardinality bound,
    property, ...) so callers can report it verbatim.
    """


class BudgetExceededError(RamseyKitError, RuntimeError):
    """An exhaustive search would exceed the configured work budget.

    ``estimate`` carries the estimated number of elementary steps and
    ``budget`` the configured limit.  ``partial`` may carry certified
    partial results (e.g. bounds from an interrupted branch-and-bound).
    """

    def __init__(self, message, estimate=None, budget=None, partial=None):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget
        self.partial = partial


class IncompleteSearchError(RamseyKitError, RuntimeError):
    """A constructive search ran below its guaranteed threshold and failed.

    ``stage`` names the step of the construction that could not be
    completed; ``details`` carries diagnostic data.
    """

    def __init__(self, message, stage, details=None):
        super().__init__(message)
        self.stage = stage
        self.details = details or {}


class FileFormatError(RamseyKitError, ValueError):
    """An input file does not match the documented format."""

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc = f"{path}:"
        if line is not None:
            loc += f"{line}:"
        super().__init__(f"{loc} {message}" if loc else message)
        self.path = path
        self.line = line


DEFAULT_BUDGET = 10**9
