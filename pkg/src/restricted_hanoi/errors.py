"""Exception hierarchy shared by the library and the CLI."""


class HanoiError(Exception):
    """Base class for all errors raised by this package."""


class DigraphError(HanoiError, ValueError):
    """Invalid movement digraph (bad peg count, self-loop, out-of-range peg)."""


class StateError(HanoiError, ValueError):
    """Malformed state, state code, or state text."""


class CapacityError(HanoiError):
    """The requested state space is too large to enumerate."""
