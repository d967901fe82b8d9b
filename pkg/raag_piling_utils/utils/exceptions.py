class RaagError(ValueError):
    """Base class for every input or precondition error raised by the library."""


class InvalidLetter(RaagError):
    def __init__(self, index: int, value):
        self.index = index
        self.value = value
        super().__init__(f"invalid letter {value!r} at position {index}")


class InvalidGroupSpec(RaagError):
    pass


class MalformedPiling(RaagError):
    pass


class EmptyPiling(RaagError):
    pass


class NotNonSplit(RaagError):
    pass


class NotFreeGroup(RaagError):
    pass


class NotAbelianGroup(RaagError):
    pass


class EmptyGroup(RaagError):
    pass


class BudgetExceeded(RaagError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"state budget of {cap} exceeded")


class WitnessVerificationFailed(RuntimeError):
    """The assembled conjugator did not satisfy w1 = x^-1 w2 x.

    This is never caused by user input; it means one of the pipeline
    conventions is broken.
    """

    def __init__(self, w1, w2, witness):
        self.w1 = tuple(w1)
        self.w2 = tuple(w2)
        self.witness = tuple(witness)
        super().__init__(
            f"witness {list(self.witness)} does not conjugate {list(self.w2)} to {list(self.w1)}"
        )
