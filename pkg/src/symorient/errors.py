"""Exception hierarchy shared by all modules."""


class SymOrientError(ValueError):
    """Base class for every error raised by this package."""


class InvalidType(SymOrientError):
    pass


class IndexOutOfRange(SymOrientError):
    pass


class NonHomogeneousInput(SymOrientError):
    pass


class VariableMismatch(SymOrientError):
    pass


class InvalidParameters(SymOrientError):
    pass


class SpaceParseError(SymOrientError):
    pass


class UnsupportedSpace(SymOrientError):
    pass


class NotEqualRank(UnsupportedSpace):
    """Cohomology model needs rank(U) = rank(K)."""


class NotHermitian(SymOrientError):
    pass


class DegenerateEulerClass(SymOrientError):
    pass


class DegreeAboveTop(SymOrientError):
    pass


class DimensionNotDivisibleBy4(SymOrientError):
    pass


class ZeroEulerCharacteristic(SymOrientError):
    pass
