"""
Error hierarchy shared by the library, the verifiers and the CLI
"""


class LevelZeroError(Exception):
    """Base class for all errors raised by this package"""


class ParameterError(LevelZeroError, ValueError):
    """A precondition or an invariant of the input data does not hold"""


class ResourceBoundError(LevelZeroError):
    """An exhaustive sweep would exceed the configured bound"""

    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what} has {size} elements, over the sweep bound {bound}")
        self.what = what
        self.size = size
        self.bound = bound


class VerificationTimeout(LevelZeroError):
    """A verifier ran past its deadline or was cancelled"""
