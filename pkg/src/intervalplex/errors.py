"""Error types shared across the package.

Each error class corresponds to one process exit code in the CLI:

* ``InputError``       -> exit 2 (malformed input, violated precondition)
* ``GuardError``       -> exit 3 (instance exceeds a search guard rail)
* ``ConsistencyError`` -> exit 4 (a verified construction contradicted a
  property it is guaranteed to have; seeing this means either the input
  violated an undeclared assumption or there is a bug)
"""


class InputError(ValueError):
    """Malformed input or violated precondition."""


class GuardError(RuntimeError):
    """Instance is larger than the guard rail of an exhaustive search."""

    def __init__(self, message: str, limit: int | None = None):
        super().__init__(message)
        self.limit = limit


class ConsistencyError(RuntimeError):
    """A construction failed a property it is mathematically guaranteed."""
