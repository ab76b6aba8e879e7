"""Exact commutative rings used as coefficient domains.

Each ring works on *raw* values (``int`` for integers and residues, a sorted
tuple of ``(exponent, coefficient)`` pairs for Laurent polynomials) so the
Clifford kernel can run without wrapper objects.  :class:`RingElement` is the
public, operator-friendly wrapper around one raw value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterator

from .errors import DomainError, NotAUnitError, UnsupportedError

__all__ = [
    "Ring",
    "Integers",
    "IntegersMod",
    "PrimeField",
    "LaurentPolynomials",
    "RingElement",
    "ring_from_config",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


class Ring:
    """Abstract commutative ring with unit testing.

    Subclasses are frozen dataclasses so rings compare and hash by value.
    """

    kind: str = ""
    #: modulus for residue rings, 0 for the integers, None for non-int rings
    int_modulus: int | None = None

    # -- raw arithmetic ------------------------------------------------------

    @property
    def zero(self) -> Any:
        raise NotImplementedError

    @property
    def one(self) -> Any:
        raise NotImplementedError

    def from_int(self, n: int) -> Any:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero

    def raw_is_unit(self, a) -> bool:
        raise NotImplementedError

    def raw_inv(self, a):
        raise NotImplementedError

    # -- structure ------------------------------------------------------------

    def is_finite(self) -> bool:
        return False

    def size(self) -> int:
        raise UnsupportedError(f"{self} is infinite")

    def raw_elements(self) -> Iterator[Any]:
        raise UnsupportedError(f"cannot enumerate the infinite ring {self}")

    def is_integral_domain(self) -> bool:
        raise NotImplementedError

    def characteristic(self) -> int:
        raise NotImplementedError

    def config(self) -> dict:
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    # -- wrapped API ------------------------------------------------------------

    def __call__(self, value) -> RingElement:
        """Coerce an int, literal string or RingElement into this ring."""
        if isinstance(value, RingElement):
            if value.ring != self:
                raise DomainError(f"{value!r} does not belong to {self}")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(value, int):
            return RingElement(self, self.from_int(value))
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def wrap(self, raw) -> RingElement:
        return RingElement(self, raw)

    def raw(self, value) -> Any:
        """Raw representation of an int / literal / RingElement."""
        return self(value).value

    def parse(self, text: str) -> RingElement:
        from .literals import parse_ring_literal

        return parse_ring_literal(self, text)

    def elements(self) -> Iterator[RingElement]:
        """Yield every element exactly once (finite rings only)."""
        for a in self.raw_elements():
            yield RingElement(self, a)

    def units(self) -> list[RingElement]:
        return [x for x in self.elements() if x.is_unit()]


@dataclass(frozen=True)
class Integers(Ring):
    kind = "integers"
    int_modulus = 0

    zero = 0
    one = 1

    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def raw_is_unit(self, a):
        return a in (1, -1)

    def raw_inv(self, a):
        if a not in (1, -1):
            raise NotAUnitError(f"{a} is not a unit of the integers")
        return a

    def is_integral_domain(self):
        return True

    def characteristic(self):
        return 0

    def config(self):
        return {"kind": self.kind}

    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class IntegersMod(Ring):
    n: int

    kind = "integers-mod-n"

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"integers-mod-n needs n >= 2, got {self.n}")

    @property
    def int_modulus(self):
        return self.n

    zero = 0
    one = 1

    def from_int(self, k):
        return int(k) % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return -a % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return a * b % self.n

    def raw_is_unit(self, a):
        return math.gcd(a, self.n) == 1

    def raw_inv(self, a):
        if math.gcd(a, self.n) != 1:
            raise NotAUnitError(f"{a} is not a unit modulo {self.n}")
        return pow(a, -1, self.n)

    def is_finite(self):
        return True

    def size(self):
        return self.n

    def raw_elements(self):
        return iter(range(self.n))

    def is_integral_domain(self):
        return is_prime(self.n)

    def characteristic(self):
        return self.n

    def config(self):
        return {"kind": self.kind, "n": self.n}

    def __str__(self):
        return f"Z/{self.n}"


@dataclass(frozen=True)
class PrimeField(IntegersMod):
    """GF(p); construct as ``PrimeField(3)``."""

    kind = "prime-field-p"

    def __post_init__(self):
        if not is_prime(self.n):
            raise DomainError(f"prime-field-p needs a prime, got {self.n}")

    @property
    def p(self) -> int:
        return self.n

    def config(self):
        return {"kind": self.kind, "p": self.n}

    def __str__(self):
        return f"GF({self.n})"


@dataclass(frozen=True)
class LaurentPolynomials(Ring):
    """GF(p)[t, t^-1].

    Raw values are tuples of ``(exponent, coefficient)`` sorted by exponent,
    with coefficients in ``1..p-1``; zero is the empty tuple.
    """

    p: int

    kind = "laurent-over-prime-field-p"
    int_modulus = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"Laurent ring needs a prime characteristic, got {self.p}")

    zero = ()

    @property
    def one(self):
        return ((0, 1),)

    def from_int(self, k):
        c = int(k) % self.p
        return ((0, c),) if c else ()

    def monomial(self, coeff: int, exp: int):
        c = coeff % self.p
        return ((exp, c),) if c else ()

    @staticmethod
    def _pack(acc: dict) -> tuple:
        return tuple(sorted((k, c) for k, c in acc.items() if c))

    def add(self, a, b):
        if not a:
            return b
        if not b:
            return a
        acc = dict(a)
        p = self.p
        for k, c in b:
            acc[k] = (acc.get(k, 0) + c) % p
        return self._pack(acc)

    def neg(self, a):
        p = self.p
        return tuple((k, p - c) for k, c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        p = self.p
        if len(b) == 1:
            a, b = b, a
        if len(a) == 1:
            # monomial shift: order kept, no new zeros since p is prime
            ((k1, c1),) = a
            return tuple((k1 + k, c1 * c % p) for k, c in b)
        acc: dict[int, int] = {}
        get = acc.get
        for k1, c1 in a:
            for k2, c2 in b:
                k = k1 + k2
                acc[k] = get(k, 0) + c1 * c2
        return tuple(sorted((k, c % p) for k, c in acc.items() if c % p))

    def raw_is_unit(self, a):
        return len(a) == 1

    def raw_inv(self, a):
        if len(a) != 1:
            raise NotAUnitError(f"{self.format(a)} is not a monomial, hence not a unit")
        ((k, c),) = a
        return ((-k, pow(c, -1, self.p)),)

    def is_integral_domain(self):
        return True

    def characteristic(self):
        return self.p

    def config(self):
        return {"kind": self.kind, "p": self.p}

    def format(self, a):
        if not a:
            return "0"
        parts = []
        for k, c in a:
            parts.append(str(c) if k == 0 else f"{c}*t^{k}")
        return " + ".join(parts)

    def __str__(self):
        return f"GF({self.p})[t,t^-1]"


def ring_from_config(cfg: dict) -> Ring:
    """Build a ring from its JSON descriptor, e.g. ``{"kind": "prime-field-p", "p": 3}``."""
    try:
        kind = cfg["kind"]
    except (KeyError, TypeError):
        raise DomainError(f"ring descriptor needs a 'kind': {cfg!r}") from None
    if kind == "integers":
        return Integers()
    if kind == "integers-mod-n":
        return IntegersMod(int(cfg["n"]))
    if kind == "prime-field-p":
        return PrimeField(int(cfg["p"]))
    if kind == "laurent-over-prime-field-p":
        return LaurentPolynomials(int(cfg["p"]))
    raise DomainError(f"unknown ring kind {kind!r}")


class RingElement:
    """Immutable element of a :class:`Ring`; supports ``+ - *``, ``==`` and hashing."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def __reduce__(self):
        return (RingElement, (self.ring, self.value))

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise DomainError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        result = self.ring.one
        for _ in range(k):
            result = self.ring.mul(result, self.value)
        return RingElement(self.ring, result)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return not self.ring.is_zero(self.value)

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def is_unit(self) -> bool:
        return self.ring.raw_is_unit(self.value)

    def invert(self) -> RingElement:
        return RingElement(self.ring, self.ring.raw_inv(self.value))

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"RingElement({self.ring}, {self.ring.format(self.value)})"
