"""Exception hierarchy shared by all modules."""


class BenedicksError(Exception):
    """Base class for every error raised by this package."""


class NotSymmetric(BenedicksError, ValueError):
    pass


class NoConvergence(BenedicksError, ArithmeticError):
    pass


class NotSPD(BenedicksError, ValueError):
    pass


class OddDimension(BenedicksError, ValueError):
    pass


class Singular(BenedicksError, ValueError):
    pass


class NotUnitary(BenedicksError, ValueError):
    pass


class DimensionMismatch(BenedicksError, ValueError):
    pass


class UnknownName(BenedicksError, KeyError):
    pass


class BadParam(BenedicksError, ValueError):
    pass


class NotSymplectic(BenedicksError, ValueError):
    pass


class NumericalBreakdown(BenedicksError, ArithmeticError):
    pass


class NotFree(BenedicksError, ValueError):
    """Upper-right block is singular; use the tau-rotation path instead."""


class RealityCheckFailed(BenedicksError, ArithmeticError):
    pass


class NotBlockDiagonal(BenedicksError, ValueError):
    pass


class NotConjugatePair(BenedicksError, ValueError):
    pass


class HalfDimOdd(BenedicksError, ValueError):
    pass


class VerdictHolds(BenedicksError):
    """The uncertainty principle holds, so no compactly supported witness exists."""


class NotCriticallySampled(BenedicksError, ValueError):
    pass


class GridMismatch(BenedicksError, ValueError):
    pass


class BadK(BenedicksError, ValueError):
    pass


class WitnessMismatch(BenedicksError, ArithmeticError):
    pass
