"""Exception hierarchy. Every error subclasses the closest built-in so callers can catch broadly."""


class DarbouxError(Exception):
    """Base class for all analysis errors."""


class CoefficientGrowthWarning(UserWarning):
    pass


class PolynomialSyntaxError(DarbouxError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.reason = message
        self.offset = offset


class UnknownIdentifierError(PolynomialSyntaxError):
    def __init__(self, name: str, offset: int):
        super().__init__(f"Unknown identifier '{name}'", offset)
        self.name = name


class ExponentOverflowError(PolynomialSyntaxError):
    def __init__(self, exponent: int, cap: int, offset: int):
        super().__init__(f"Exponent {exponent} exceeds cap {cap}", offset)
        self.exponent = exponent


class SystemFileError(DarbouxError, ValueError):
    def __init__(self, message: str, line: int, offset: int = 0):
        super().__init__(f"line {line}, offset {offset}: {message}")
        self.line = line
        self.offset = offset


class DivisionByZeroPolynomial(DarbouxError, ZeroDivisionError):
    pass


class DegenerateResultantInput(DarbouxError, ValueError):
    pass


class DegreeTooLow(DarbouxError, ValueError):
    def __init__(self, m: int):
        super().__init__(f"Vector field degree m = {m}; need m > 1")
        self.m = m


class CommonFactor(DarbouxError, ValueError):
    def __init__(self, factor):
        super().__init__(f"P and Q share the nonconstant factor {factor}")
        self.factor = factor


class DicriticalInfinity(DarbouxError, RuntimeError):
    def __init__(self, message: str = "R_{m+1} = x*Q_m - y*P_m vanishes identically (dicritical infinity)"):
        super().__init__(message)


class InfinitelyManyEquilibria(DarbouxError, RuntimeError):
    pass


class NonReducedCurve(DarbouxError, ValueError):
    def __init__(self, factor):
        super().__init__(f"Curve is not squarefree; repeated factor {factor}")
        self.factor = factor


class CommonComponentThroughPoint(DarbouxError, ValueError):
    pass


class VerticalLineComponent(DarbouxError, ValueError):
    pass


class BranchCountInconclusive(DarbouxError, RuntimeError):
    pass


class ParityViolation(DarbouxError, ArithmeticError):
    pass


class UncertifiedGenus(DarbouxError, RuntimeError):
    pass


class CurveNotSmooth(DarbouxError, ValueError):
    pass
