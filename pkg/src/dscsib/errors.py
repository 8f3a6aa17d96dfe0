"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""


class DscError(Exception):
    code = "DSC_ERROR"


class EmptyAggregate(DscError):
    code = "EMPTY_AGGREGATE"


class SingleSibling(DscError):
    code = "SINGLE_SIBLING"


class Unsupported(DscError):
    code = "UNSUPPORTED"


class TooManyClasses(DscError):
    code = "TOO_MANY_CLASSES"


class NotCountable(DscError):
    code = "NOT_COUNTABLE"


class ConditionFails(DscError):
    code = "CONDITION_FAILS"


class NotBounded(DscError):
    code = "NOT_BOUNDED"


class NoStrictFamily(DscError):
    code = "NO_STRICT_FAMILY"


class FiniteJ(DscError):
    code = "FINITE_J"


class AbsentTarget(DscError):
    code = "ABSENT_TARGET"


class CapExceeded(DscError):
    code = "CAP_EXCEEDED"


class UnknownDeclared(DscError):
    code = "UNKNOWN_DECLARED"


class ZeroMultiplicity(DscError):
    code = "ZERO_MULTIPLICITY"


class ParseError(DscError):
    code = "PARSE_ERROR"

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
