"""Exception hierarchy.

Input problems (bad files, violated preconditions, caps) map to CLI exit
code 2; failed internal verification maps to exit code 3.
"""


class SliceTreeError(Exception):
    """Base class for every error raised by this package."""


class GraphInputError(SliceTreeError, ValueError):
    """Malformed graph data: parse errors, loops, multi-edges, unknown vertices."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(SliceTreeError, ValueError):
    """An operation was called outside its domain.

    ``witness`` names the offending object (a cut vertex, a size, a pair).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceededError(SliceTreeError, ValueError):
    """A configured size cap (vertex count, group order, family size) was hit."""


class VerificationError(SliceTreeError, RuntimeError):
    """A constructed object failed its certificate check.

    ``diagnostics`` carries the witness (a cycle, a disconnected pair of
    nodes, a mismatching separator set, ...).
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics
