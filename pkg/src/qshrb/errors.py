"""Exception hierarchy.  Identity-check failures are Report outcomes, not errors."""


class QshError(Exception):
    """Base class for all package errors."""


class DivisionByNonUnit(QshError, ZeroDivisionError):
    pass


class ZeroSubstitution(QshError, ZeroDivisionError):
    pass


class DimensionMismatch(QshError, ValueError):
    pass


class DegreeOverflow(QshError, ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class DegreeMismatch(QshError, ValueError):
    pass


class PositionOutOfRange(QshError, IndexError):
    pass


class NoUnitDesignated(QshError, ValueError):
    pass


class GenericRankAmbiguity(QshError):
    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class NotASubalgebra(QshError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ZeroDegreeOperand(QshError, ValueError):
    pass


class WrongWeight(QshError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InternalInconsistency(QshError, RuntimeError):
    pass


class ParseError(QshError, ValueError):
    def __init__(self, message, line=None, field=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(loc)})" if loc else message)
        self.line = line
        self.field = field


class ValidationError(QshError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnknownLetter(QshError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown letter"
