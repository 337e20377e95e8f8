class GraphError(ValueError):
    """Malformed graph input or a parameter outside its documented range."""


class ResourceCapError(RuntimeError):
    """A construction would exceed the configured size cap."""


class CheckFailure(AssertionError):
    """An explicit verification map failed (points to an implementation bug)."""
