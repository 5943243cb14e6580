"""Exception hierarchy shared by all frcodes modules."""

from __future__ import annotations


class FrCodeError(Exception):
    """Base class for every error raised by frcodes."""


class MalformedStructure(FrCodeError, ValueError):
    """Incidence data violates the basic point/block invariants."""


class EmptyStructure(FrCodeError, ValueError):
    pass


class NonUniformBlockSize(FrCodeError, ValueError):
    pass


class NonUniformPointDegree(FrCodeError, ValueError):
    pass


class ParameterMismatch(FrCodeError, ValueError):
    pass


class BadParameters(FrCodeError, ValueError):
    pass


class NonDivisible(BadParameters):
    pass


class NotPrime(BadParameters):
    pass


class NotRegular(FrCodeError, ValueError):
    pass


class InadmissibleOrder(BadParameters):
    pass


class NotSteiner(FrCodeError, ValueError):
    pass


class RhoOutOfRange(BadParameters):
    pass


class SideConditionViolated(BadParameters):
    pass


class NotLatin(FrCodeError, ValueError):
    pass


class NotOrthogonal(FrCodeError, ValueError):
    pass


class OrderMismatch(FrCodeError, ValueError):
    pass


class KOutOfRange(BadParameters):
    pass


class EllOutOfRange(BadParameters):
    pass


class FileTooLarge(BadParameters):
    pass


class OutOfTheoremRange(BadParameters):
    pass


class DegenerateDenominator(BadParameters):
    pass


class Unrepairable(FrCodeError, ValueError):
    """Some point has a single replica, so a lost node cannot be rebuilt by copying."""


class SizeLimitExceeded(FrCodeError, RuntimeError):
    """An exhaustive search would exceed the configured work budget."""
