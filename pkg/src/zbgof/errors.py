"""Exception hierarchy shared by all modules."""


class ZBGOFError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(ZBGOFError, ValueError):
    pass


class TooFewObservations(InvalidInput):
    pass


class DegenerateSample(InvalidInput):
    pass


class NonFiniteInput(InvalidInput):
    pass


class InvalidTuning(InvalidInput):
    pass


class UnsupportedSampleSize(InvalidInput):
    pass


class InvalidParams(InvalidInput):
    pass


class QuadratureFailure(ZBGOFError, ArithmeticError):
    pass


class InfeasibleMoments(ZBGOFError, ValueError):
    """Raised when beta2 <= beta1 + 1, i.e. no distribution has these moments."""


class UnsupportedAlternative(ZBGOFError, ValueError):
    pass


class UnknownAlternativeName(ZBGOFError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown alternative"


class MissingCriticalValue(ZBGOFError, LookupError):
    pass


class ParseError(ZBGOFError, ValueError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
