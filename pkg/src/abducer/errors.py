"""Exception and warning classes shared across the package."""


class AbducerError(Exception):
    """Base class for every error raised by abducer."""


class FormulaSyntaxError(AbducerError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnknownOperator(FormulaSyntaxError):
    """A character sequence that is not part of the formula grammar."""


class UnknownWorld(AbducerError, LookupError):
    pass


class UnknownAtom(AbducerError, LookupError):
    pass


class InvalidModel(AbducerError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid plausibility model: {lines}")


class EmptyObservation(AbducerError, ValueError):
    """Observing the formula would leave no world."""


class PointEliminated(AbducerError, ValueError):
    """The designated world does not satisfy the observed formula."""


class NoSolutions(AbducerError, ValueError):
    pass


class BudgetExceeded(AbducerError, ValueError):
    pass


class TooManyAtoms(AbducerError, ValueError):
    pass


class NotPropositional(AbducerError, ValueError):
    pass


class BackendUnavailable(AbducerError, LookupError):
    pass


class OrderMismatch(AbducerError, ValueError):
    pass


class SmallInputWarning(UserWarning):
    """Compression estimates on short inputs carry little signal."""


class NotASolution(AbducerError, ValueError):
    pass
