"""Exception types shared across the toolkit."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """An exact search ran out of its node budget.

    Carries the best bounds established before the search was cut off, so
    callers can still report a certified interval.
    """

    def __init__(self, message: str, *, lower_bound=None, upper_bound=None, nodes: int = 0):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.nodes = nodes


class CapExceededError(RuntimeError):
    """An enumeration produced more results than the caller's cap.

    ``found`` is the number of results collected before aborting.
    """

    def __init__(self, message: str, *, found: int = 0):
        super().__init__(message)
        self.found = found


class SizeLimitError(ValueError):
    """A construction or operation would exceed its configured size guard."""


class RetryLimitError(RuntimeError):
    """A randomized construction gave up after too many rejected samples."""

    def __init__(self, message: str, *, attempts: int = 0):
        super().__init__(message)
        self.attempts = attempts


class GraphFormatError(ValueError):
    """A graph text file is malformed; message carries the line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
