"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid configuration: bad delimiter, key columns, capacity, or paths."""


class IoFailure(Exception):
    """An I/O operation failed.

    ``op`` identifies the failed operation: "open_input", "open", "write",
    "flush", or "write_report". ``filename`` is the file involved.
    """

    def __init__(self, op: str, filename: str, message: str):
        super().__init__(message)
        self.op = op
        self.filename = filename


class MalformedInput(Exception):
    """Raised under the fail policy when an input line cannot be routed."""

    def __init__(self, reason):
        super().__init__(f"line {reason.line_number}: {reason.kind} ({reason.detail})")
        self.reason = reason
        self.line_number = reason.line_number
