"""Exception types shared across the library."""


class FuelExhausted(Exception):
    """A bounded search ran out of fuel.

    This never asserts nonexistence: it only means the answer was not found
    within the inspected index range.
    """


class PreconditionFailed(ValueError):
    """An operation's stated precondition does not hold for the given input."""


class TooLarge(ValueError):
    """A desk-scale enumeration guard rejected the instance size."""
