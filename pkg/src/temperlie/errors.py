"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent user input (bad pair spec, non-closed basis, ...)."""


class UnsupportedError(ValueError):
    """Operation outside the exact-arithmetic scope of the tool.

    Raised for irrational eigenvalues, non-nilpotent exponential arguments,
    orthogonal complements w.r.t. a possibly degenerate form, and similar.
    """


class InternalInconsistencyError(RuntimeError):
    """A certified invariant failed at runtime; signals a bug, not bad input."""


class ResourceBudgetError(RuntimeError):
    """A configured enumeration or sampling budget was exceeded."""
