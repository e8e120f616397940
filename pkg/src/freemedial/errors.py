"""Exception hierarchy shared by every layer of the package."""


class AlgebraError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


# ring layer
class SpecMismatch(AlgebraError):
    pass


class NotQuotient(AlgebraError):
    pass


class NotDivisible(AlgebraError):
    pass


class FactorMismatch(AlgebraError):
    pass


class BadModulus(AlgebraError):
    pass


class PolySyntaxError(AlgebraError):
    pass


# free quandles
class ContextMismatch(AlgebraError):
    pass


class NotInImage(AlgebraError):
    pass


class NotInModel(AlgebraError):
    pass


class WrongContext(AlgebraError):
    pass


class UnsupportedIdeal(AlgebraError):
    pass


# terms
class TermSyntaxError(AlgebraError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


# finite tables
class NotLeftQuasigroup(AlgebraError):
    pass


class ClosureLimitExceeded(AlgebraError):
    pass


class NotMedial(AlgebraError):
    pass


class NotGenerating(AlgebraError):
    pass


class NotAutomorphism(AlgebraError):
    pass


class SizeLimit(AlgebraError):
    pass


class NotCancellative(AlgebraError):
    pass


class TableFormatError(AlgebraError):
    pass
