"""Exception hierarchy shared by the library and the command line.

Every error carries the process exit code the CLI maps it to, so commands can
translate failures without a lookup table.
"""
from typing import Optional


class CycloError(Exception):
    exit_code: int = 3

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class InputError(CycloError):
    """Invalid user-supplied parameters (exit 2)."""

    exit_code = 2


class PreconditionError(CycloError):
    """Valid parameters that a method cannot work with (exit 3)."""

    exit_code = 3


class VerificationFailure(CycloError):
    """Two computations that must agree did not (exit 1)."""

    exit_code = 1


# --- invalid input ---

class NotPrime(InputError):
    pass


class DistinctnessViolated(InputError):
    pass


class NotCommonPrimitiveRoot(InputError):
    pass


# --- method preconditions ---

class NonCoprime(PreconditionError):
    pass


class NotInGroup(PreconditionError):
    pass


class BadModulus(PreconditionError):
    pass


class WrongOrder(PreconditionError):
    pass


class BothZero(PreconditionError):
    pass


class DegreeOutOfRange(PreconditionError):
    pass


class ReducibleModulus(PreconditionError):
    pass


class DivisionByZero(PreconditionError, ZeroDivisionError):
    pass


class MixedFields(PreconditionError):
    pass


class OrderUnavailable(PreconditionError):
    pass


class NoSubfield(PreconditionError):
    pass


# --- verification ---

class FormulaMismatch(VerificationFailure):
    pass
