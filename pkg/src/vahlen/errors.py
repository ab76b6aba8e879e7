"""Exception types shared across the package."""

from __future__ import annotations


class VahlenError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(VahlenError, ValueError):
    """Operands do not belong together (different rings, spaces, lengths...)."""


class NotAUnitError(VahlenError, ArithmeticError):
    """Inversion of a ring element that is not a unit."""


class NotInvertibleByNormError(VahlenError, ArithmeticError):
    """The norm of a Clifford element is not a scalar unit.

    This does not prove the element has no inverse; it only means the
    inverse cannot be produced from the conjugate and the norm.
    """


class NotInvertibleError(VahlenError, ArithmeticError):
    """A 2x2 Clifford matrix could not be inverted by the Vahlen formula."""


class ImageNotInModuleError(VahlenError, ArithmeticError):
    """The twisted adjoint action sent a vector outside the module."""


class UnsupportedError(VahlenError):
    """Operation needs a finite ring (or another unavailable capability)."""


class ParseError(VahlenError, ValueError):
    """Malformed literal. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        self.reason = message
        super().__init__(f"{message} at position {position}")

    def annotated(self) -> str:
        """Message with the offending literal and a caret under the position."""
        return f"{self}\n  {self.text}\n  {' ' * self.position}^"
