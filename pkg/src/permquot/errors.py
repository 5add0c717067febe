"""Exception types shared across the package."""


class AutomatonError(Exception):
    """Base class for all errors raised by permquot."""


class UnknownLetter(AutomatonError, ValueError):
    pass


class AlphabetMismatch(AutomatonError, ValueError):
    pass


class NotPermutation(AutomatonError, ValueError):
    pass


class ParseError(AutomatonError, ValueError):
    pass


class DegreeMismatch(AutomatonError, ValueError):
    pass


class NotClosed(AutomatonError, ValueError):
    pass


class IndexOutOfRange(AutomatonError, ValueError):
    pass


class CapExceeded(AutomatonError, RuntimeError):
    """Group closure grew beyond the configured element cap."""

    def __init__(self, cap: int):
        super().__init__(f"closure exceeds cap of {cap} elements")
        self.cap = cap


class BadParams(AutomatonError, ValueError):
    pass


class WitnessCheckFailed(AutomatonError, AssertionError):
    """A constructed witness did not measure as expected.

    ``expected`` and ``measured`` are ``(asc_K, asc_L, asc_quotient)`` triples.
    """

    def __init__(self, expected, measured):
        super().__init__(f"expected asc triple {expected}, measured {measured}")
        self.expected = expected
        self.measured = measured


class CounterexampleFound(AutomatonError, AssertionError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair
