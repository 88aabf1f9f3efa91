"""Exception hierarchy shared across the package."""


class GTCError(Exception):
    """Base class for all library errors."""


class GraphError(GTCError):
    """Malformed graph input or unknown node reference."""


class FormatError(GTCError):
    """Malformed graph/community/result file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeLimitError(GTCError):
    """An exact-mode enumeration bound or explicit budget was exceeded."""


class NumericalError(GTCError):
    """Numerical failures: non-convergence, infeasible or undefined values."""


class ConvergenceError(NumericalError):
    """Iteration failed to converge; carries the last iterate for inspection."""

    def __init__(self, message: str, iterate=None):
        self.iterate = iterate
        super().__init__(message)
