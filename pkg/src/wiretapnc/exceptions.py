"""Exception hierarchy shared by all modules."""


class WiretapNCError(Exception):
    """Base class for all library errors."""


class NonPrimeCharacteristic(WiretapNCError):
    pass


class FieldTooLarge(WiretapNCError):
    pass


class FieldMismatch(WiretapNCError):
    pass


class DivisionByZero(WiretapNCError):
    pass


class DimensionMismatch(WiretapNCError):
    pass


class SingularMatrix(WiretapNCError):
    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


class NoSolution(WiretapNCError):
    pass


class LengthExceedsField(WiretapNCError):
    pass


class ExtensionTooSmall(WiretapNCError):
    pass


class TooManySubsets(WiretapNCError):
    pass


class UnknownNode(WiretapNCError):
    pass


class AcyclicityViolated(WiretapNCError):
    pass


class InsufficientCut(WiretapNCError):
    def __init__(self, message, receiver=None):
        super().__init__(message)
        self.receiver = receiver


class SingularDecodingMatrix(WiretapNCError):
    pass


class BadParameters(WiretapNCError):
    pass


class BudgetExceedsCut(WiretapNCError):
    pass


class FieldTooSmall(WiretapNCError):
    def __init__(self, message, edge=None, bound=None):
        super().__init__(message)
        self.edge = edge
        self.bound = bound


class ComplexityCapExceeded(WiretapNCError):
    pass


class BadBudgets(WiretapNCError):
    pass


class CutNotInvertible(WiretapNCError):
    pass


class NoFullRankObservation(WiretapNCError):
    pass


class TooLargeForExhaustive(WiretapNCError):
    pass


class EnumerationTooLarge(WiretapNCError):
    pass


class GoldenMismatch(WiretapNCError):
    pass
