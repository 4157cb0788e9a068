"""Exceptions shared across the package."""


class PosetError(ValueError):
    """Raised for malformed poset input: cycles, duplicate or dangling covers."""


class SingularValue(ArithmeticError):
    """Raised when a realm value has no inverse (singular matrix, zero fraction).

    ``element`` carries the poset element id at which a transfer map or toggle
    hit the singular value, when that context is known.
    """

    def __init__(self, message, element=None):
        if element is not None:
            message = f"{message} (at element {element})"
        super().__init__(message)
        self.element = element


class SamplingExhausted(RuntimeError):
    """Raised when a labeling sampler exceeds its retry bound.

    The failing master seed is kept on the exception so the run can be replayed.
    """

    def __init__(self, message, seed=None):
        if seed is not None:
            message = f"{message} (seed {seed})"
        super().__init__(message)
        self.seed = seed
