"""Exception hierarchy shared by every module."""


class ExpMinorsError(Exception):
    """Base class for all library errors."""


class InputError(ExpMinorsError, ValueError):
    """Arguments violate an operation's preconditions."""


class NotConnectedError(ExpMinorsError):
    """A path or spanning structure was requested where none exists."""


class GenerationError(ExpMinorsError):
    """A random generator ran out of rejection budget."""


class TooLargeError(ExpMinorsError):
    """An exact (exponential) search would exceed its configured budget."""


class HypothesisViolated(ExpMinorsError):
    """A lemma hypothesis turned out false at runtime.

    ``witness`` holds the vertex set that exhibits the violation.
    """

    def __init__(self, message, witness=frozenset()):
        super().__init__(message)
        self.witness = frozenset(witness)


class InvariantViolation(ExpMinorsError):
    """Something a proof guarantees did not hold; ``diagnostics`` says what."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class PatternTooLarge(InputError):
    pass


class EmbeddingFailed(ExpMinorsError):
    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class RandomnessFailure(ExpMinorsError):
    """Every retry of a randomized step missed its acceptance condition."""
