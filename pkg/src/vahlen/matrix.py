"""2x2 matrices over a Clifford algebra."""

from __future__ import annotations

from dataclasses import dataclass

from .clifford import CliffordElement
from .errors import DomainError, NotInvertibleError

__all__ = ["CliffordMatrix2"]


@dataclass(frozen=True)
class CliffordMatrix2:
    """The matrix ``(alpha beta; gamma delta)``; all entries share one space."""

    alpha: CliffordElement
    beta: CliffordElement
    gamma: CliffordElement
    delta: CliffordElement

    def __post_init__(self):
        s = self.alpha.space
        for x in (self.beta, self.gamma, self.delta):
            if x.space is not s and x.space != s:
                raise DomainError("matrix entries belong to different spaces")

    @property
    def space(self):
        return self.alpha.space

    @property
    def entries(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.delta)

    @classmethod
    def identity(cls, space) -> CliffordMatrix2:
        one, zero = CliffordElement.one(space), CliffordElement.zero(space)
        return cls(one, zero, zero, one)

    @classmethod
    def scalar(cls, space, r) -> CliffordMatrix2:
        s, zero = CliffordElement.scalar(space, r), CliffordElement.zero(space)
        return cls(s, zero, zero, s)

    @classmethod
    def zero(cls, space) -> CliffordMatrix2:
        z = CliffordElement.zero(space)
        return cls(z, z, z, z)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: CliffordMatrix2) -> CliffordMatrix2:
        return CliffordMatrix2(*(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: CliffordMatrix2) -> CliffordMatrix2:
        return CliffordMatrix2(*(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> CliffordMatrix2:
        return CliffordMatrix2(*(-x for x in self.entries))

    def __mul__(self, other):
        if isinstance(other, CliffordMatrix2):
            a, b, c, d = self.entries
            p, q, r, s = other.entries
            return CliffordMatrix2(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)
        return CliffordMatrix2(*(x * other for x in self.entries))

    def __rmul__(self, other):
        return CliffordMatrix2(*(other * x for x in self.entries))

    def scale(self, r) -> CliffordMatrix2:
        return CliffordMatrix2(*(x.scale(r) for x in self.entries))

    def pseudo_det(self) -> CliffordElement:
        """alpha delta^t - beta gamma^t."""
        return self.alpha * self.delta.transpose() - self.beta * self.gamma.transpose()

    def adjugate(self) -> CliffordMatrix2:
        """(delta^t, -beta^t; -gamma^t, alpha^t); equals the matrix conjugate."""
        return CliffordMatrix2(
            self.delta.transpose(), -self.beta.transpose(), -self.gamma.transpose(), self.alpha.transpose()
        )

    def inverse(self) -> CliffordMatrix2:
        """pseudo_det^-1 * (delta^t, -beta^t; -gamma^t, alpha^t), checked on both sides."""
        pd = self.pseudo_det()
        if not pd.is_scalar_unit():
            raise NotInvertibleError(f"pseudo-determinant {pd} is not a unit scalar")
        inv = self.adjugate().scale(pd.scalar_part().invert())
        ident = CliffordMatrix2.identity(self.space)
        if self * inv != ident or inv * self != ident:
            raise NotInvertibleError("the Vahlen inverse formula does not invert this matrix")
        return inv

    # -- involutions induced from the big algebra ---------------------------

    def grade(self) -> CliffordMatrix2:
        """(alpha', -beta'; -gamma', delta')."""
        a, b, c, d = (x.grade_involution() for x in self.entries)
        return CliffordMatrix2(a, -b, -c, d)

    def transpose(self) -> CliffordMatrix2:
        """(conj delta, conj beta; conj gamma, conj alpha)."""
        a, b, c, d = (x.conjugate() for x in self.entries)
        return CliffordMatrix2(d, b, c, a)

    def conjugate(self) -> CliffordMatrix2:
        """(delta^t, -beta^t; -gamma^t, alpha^t)."""
        return self.adjugate()

    # -- grading -------------------------------------------------------------

    def is_even(self) -> bool:
        return self.alpha.is_even() and self.delta.is_even() and self.beta.is_odd() and self.gamma.is_odd()

    def is_odd(self) -> bool:
        return self.alpha.is_odd() and self.delta.is_odd() and self.beta.is_even() and self.gamma.is_even()

    def key(self) -> tuple:
        return tuple(x.coefficient_vector() for x in self.entries)

    def __str__(self):
        return "; ".join(str(x) for x in self.entries)
