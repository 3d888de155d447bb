class StackyRRError(Exception):
    """Base class for errors raised by the engine."""


class NotRationalError(StackyRRError, ValueError):
    def __init__(self, order, coeffs):
        self.order = order
        self.coeffs = coeffs
        bad = {i: str(c) for i, c in enumerate(coeffs) if i > 0 and c != 0}
        super().__init__(f"element of Q(zeta_{order}) is not rational; nonzero coefficients {bad}")


class NonUnitError(StackyRRError, ArithmeticError):
    """Raised when inverting a truncated polynomial with zero constant term."""


class ConstantTermError(StackyRRError, ValueError):
    """Raised when a series needs a nilpotent argument but got a constant term."""


class SpecMismatchError(StackyRRError, ValueError):
    pass


class RankError(StackyRRError, ValueError):
    pass


class GroupClosureError(StackyRRError, ValueError):
    pass


class IntegralityError(StackyRRError, ArithmeticError):
    """A total that must be an integer was not. Always an engine bug."""


class OracleRangeError(StackyRRError, ValueError):
    pass
