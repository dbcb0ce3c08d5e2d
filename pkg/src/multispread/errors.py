"""Exception types shared across the package."""


class MultispreadError(Exception):
    """Base class for all package-specific errors."""


# finite fields

class NonPrimeCharacteristic(MultispreadError):
    pass


class ReducibleModulus(MultispreadError):
    pass


class NonPrimitiveModulus(MultispreadError):
    pass


class FieldMismatch(MultispreadError):
    pass


class NonDivisorDegree(MultispreadError):
    pass


# subspace algebra

class MixedAmbient(MultispreadError):
    pass


class AmbientTooLarge(MultispreadError):
    pass


# multispread core

class DimensionExceedsT(MultispreadError):
    pass


class NonUniformCoverage(MultispreadError):
    """Some nonzero vector is covered with the wrong weighted multiplicity."""

    def __init__(self, vector: int, got: int, expected: int):
        self.vector = vector
        self.got = got
        self.expected = expected
        super().__init__(
            f"vector {vector:#x} covered {got} times, expected {expected}"
        )


class NonUniformFold(MultispreadError):
    def __init__(self, vector: int, got: int, expected: int):
        self.vector = vector
        self.got = got
        self.expected = expected
        super().__init__(
            f"vector {vector:#x} lies in {got} members, expected {expected}"
        )


class NonIntegerNu(MultispreadError):
    pass


class FormatError(MultispreadError):
    """A multispread/partition/matrix file violates the line format."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class InconsistentHeader(MultispreadError):
    """Declared parameters in a file header do not match the verified ones."""


# feasibility

class UnsupportedQ(MultispreadError):
    pass


# constructions

class DivisibilityViolated(MultispreadError):
    pass


class ParamMismatch(MultispreadError):
    pass


class KindPreconditionFailed(MultispreadError):
    pass


class NoSuchMember(MultispreadError):
    pass


class AmbientNotTPlusS(MultispreadError):
    pass


class ConfigurationNotFound(MultispreadError):
    pass


class SOutOfRange(MultispreadError):
    pass


class BlockDisjointnessFailed(MultispreadError):
    pass


class NotCovered(MultispreadError):
    """The recipe engine has no construction for the requested parameters."""

    def __init__(self, message: str, verdict=None):
        self.verdict = verdict
        super().__init__(message)


class InternalVerifyFailed(MultispreadError):
    """A construction produced something other than what it promised."""


# code bridge

class ZeroMu(MultispreadError):
    pass


class WidthNotMultipleOfT(MultispreadError):
    pass


class NotOneWeight(MultispreadError):
    """Two nonzero codewords of different weight witness the failure."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"codewords of weights {witness[1]} and {witness[3]} coexist")


class RankDeficientWarning(UserWarning):
    pass


# search

class SpecInconsistent(MultispreadError):
    """The per-dimension counting equations rule the search space out."""


class OrderNotDividing(MultispreadError):
    pass
