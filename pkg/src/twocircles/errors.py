"""Exception hierarchy shared by every module."""


class TwoCirclesError(Exception):
    pass


class InvalidInput(TwoCirclesError, ValueError):
    pass


class InvalidRadii(InvalidInput):
    pass


class InvalidParams(InvalidInput):
    pass


class InvalidTriple(InvalidInput):
    pass


class IncompatibleRadicands(TwoCirclesError, ArithmeticError):
    pass


class VerificationFailure(TwoCirclesError):
    """Raised when an independent check disagrees with the exact engine.

    ``report`` carries whatever object the failing check produced, so callers
    can list the offending entries.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
