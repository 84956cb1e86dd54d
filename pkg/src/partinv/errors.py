"""Exception types shared across the library.

The CLI maps these onto its exit-code contract: bad input is 2, a broken
internal invariant is 3, a refused oversized computation is 4.
"""


class InputError(ValueError):
    """Malformed input or a violated call precondition."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed.  This signals a bug, never bad input."""


class BoundExceededError(RuntimeError):
    """A configured resource bound was exceeded."""
