"""Exceptions shared across the package, with their CLI exit codes."""


class CurvetopError(Exception):
    exit_code = 1


class ParseError(CurvetopError):
    exit_code = 5


class ImproperParametrization(CurvetopError):
    exit_code = 2


class HypothesisRepairFailed(CurvetopError):
    exit_code = 3


class PrecisionExhausted(CurvetopError):
    exit_code = 4


class PoleError(CurvetopError):
    """Evaluation at (or across) a zero of a denominator."""

    exit_code = 1


class DegenerateSystem(CurvetopError):
    """Elimination produced an identically zero resultant."""

    exit_code = 1
