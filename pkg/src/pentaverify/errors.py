"""Shared exception types for the pentaverify package."""


class CapExceeded(ValueError):
    """An index exceeds an enumeration or evaluation cap."""


class TableTooSmall(ValueError):
    """A sequence table does not cover a requested index."""


class OrderMismatch(ValueError):
    """Series operands have different truncation orders."""


class NonUnitConstantTerm(ValueError):
    """Series inversion requires constant term +1 or -1."""


class InexactDivision(ArithmeticError):
    """A polynomial division expected to be exact left a remainder."""


class DomainError(ValueError):
    """An argument lies outside a function's numeric domain."""


class RegimeViolation(ValueError):
    """(n, k) lies outside the regime an asymptotic check assumes."""


class NoConvergence(RuntimeError):
    """An adaptive numeric procedure hit its resolution cap."""
