"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """Input outside an operation's domain.

    Raised for ideals that are not (x, y)-primary where primality is
    required, for incomplete ideals under the strict policy, and for
    degenerate or non-convex polygons passed to operations that need
    proper convex ones.
    """


class ParseError(ValueError):
    """Malformed ideal expression (bad syntax, negative exponent, bad JSON)."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed.

    This never indicates bad input; it indicates a bug, and callers should
    treat it as fatal rather than retry.
    """


class IncompleteIdealWarning(UserWarning):
    """An incomplete ideal was silently replaced by its integral closure."""
