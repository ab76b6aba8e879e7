"""Elements of Cl(M, q) stored as blade -> coefficient maps.

A blade is a bitmask over the basis of M; bit ``i`` stands for ``e_{i+1}`` in
literals.  Blade products are reduced with ``e_k e_k = q(e_k)`` and
``e_j e_k = (e_j, e_k) - e_k e_j``, which stays correct for non-orthogonal
bases such as hyperbolic pairs.  Products are cached per space as a table of
structure constants.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainError, NotInvertibleByNormError
from .qspace import QuadraticSpace
from .ring import RingElement

__all__ = ["CliffordElement", "blade_name", "popcount"]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def blade_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "".join(f"e{i + 1}" for i in blade_indices(mask))


# -- structure constants ---------------------------------------------------------


def _blade_times_generator(space: QuadraticSpace, blade: int, k: int) -> dict:
    """e_B * e_k as {blade: raw coefficient}.

    e_k travels right-to-left through e_B; passing e_j emits the contraction
    (e_j, e_k) e_{B - j} and flips the sign of the carried product, meeting
    e_k itself emits q(e_k) e_{B - k}.
    """
    cache = space._cache.setdefault("bg", {})
    key = (blade, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    R = space.ring
    if blade == 0:
        out = {1 << k: R.one}
    else:
        j = blade.bit_length() - 1
        if j < k:
            out = {blade | (1 << k): R.one}
        else:
            rest = blade & ~(1 << j)
            out = {}
            if j == k:
                if not R.is_zero(space.q_raw(k)):
                    out[rest] = space.q_raw(k)
            else:
                b = space.b_raw(j, k)
                if not R.is_zero(b):
                    out[rest] = b
                top = 1 << j
                for c, v in _blade_times_generator(space, rest, k).items():
                    key2 = c | top
                    acc = R.sub(out.get(key2, R.zero), v)
                    if R.is_zero(acc):
                        out.pop(key2, None)
                    else:
                        out[key2] = acc
    cache[key] = out
    return out


def _terms_times_generator(space: QuadraticSpace, terms: dict, k: int) -> dict:
    R = space.ring
    out: dict = {}
    for blade, c in terms.items():
        for d, v in _blade_times_generator(space, blade, k).items():
            acc = R.add(out.get(d, R.zero), R.mul(c, v))
            if R.is_zero(acc):
                out.pop(d, None)
            else:
                out[d] = acc
    return out


def _table_row(space: QuadraticSpace, a: int) -> list:
    rows = space._cache.get("rows")
    if rows is None:
        rows = space._cache["rows"] = [None] * space.dim
    row = rows[a]
    if row is None:
        R = space.ring
        row = []
        for b in range(space.dim):
            terms = {a: R.one}
            for k in blade_indices(b):
                terms = _terms_times_generator(space, terms, k)
            row.append(tuple(terms.items()))
        rows[a] = row
    return row


def _reverse_table(space: QuadraticSpace) -> list:
    """Transpose of each blade, computed by re-multiplying its generators in reverse."""
    tab = space._cache.get("rev")
    if tab is None:
        R = space.ring
        tab = []
        for b in range(space.dim):
            idx = blade_indices(b)
            terms = {0: R.one}
            for k in reversed(idx):
                terms = _terms_times_generator(space, terms, k)
            tab.append(tuple(terms.items()))
        space._cache["rev"] = tab
    return tab


def _conj_table(space: QuadraticSpace) -> list:
    tab = space._cache.get("conj")
    if tab is None:
        R = space.ring
        rev = _reverse_table(space)
        tab = []
        for b in range(space.dim):
            # grade applied after reversing ...
            after = tuple((c, R.neg(v) if popcount(c) & 1 else v) for c, v in rev[b])
            # ... must agree with reversing after grading
            before = tuple((c, R.neg(v)) for c, v in rev[b]) if popcount(b) & 1 else rev[b]
            assert dict(after) == dict(before), "grade involution and transpose do not commute"
            tab.append(after)
        space._cache["conj"] = tab
    return tab


def _apply_linear(space: QuadraticSpace, terms: dict, table: list) -> dict:
    R = space.ring
    out: dict = {}
    for blade, c in terms.items():
        for d, v in table[blade]:
            acc = R.add(out.get(d, R.zero), R.mul(c, v))
            if R.is_zero(acc):
                out.pop(d, None)
            else:
                out[d] = acc
    return out


def _mul_terms(space: QuadraticSpace, a: dict, b: dict) -> dict:
    R = space.ring
    mod = R.int_modulus
    if mod is not None:
        # int-backed rings: accumulate exactly, reduce once per blade
        acc: dict[int, int] = {}
        get = acc.get
        for A, ca in a.items():
            row = _table_row(space, A)
            for B, cb in b.items():
                p = ca * cb
                for C, k in row[B]:
                    acc[C] = get(C, 0) + p * k
        if mod:
            out = {}
            for C, v in acc.items():
                v %= mod
                if v:
                    out[C] = v
            return out
        return {C: v for C, v in acc.items() if v}
    out = {}
    add, mul, is_zero, zero = R.add, R.mul, R.is_zero, R.zero
    for A, ca in a.items():
        row = _table_row(space, A)
        for B, cb in b.items():
            p = mul(ca, cb)
            for C, k in row[B]:
                out[C] = add(out.get(C, zero), mul(p, k))
    return {C: v for C, v in out.items() if not is_zero(v)}


# -- elements --------------------------------------------------------------------


class CliffordElement:
    """Immutable element of Cl(space).

    ``terms`` maps blade bitmasks to raw, nonzero ring values.  Use the
    classmethod constructors (``scalar``, ``vector``, ``basis``, ``blade``)
    or :func:`vahlen.literals.parse_element` instead of building maps by hand.
    """

    __slots__ = ("space", "terms", "_hash")

    def __init__(self, space: QuadraticSpace, terms: dict | None = None):
        R = space.ring
        clean = {}
        for blade, c in (terms or {}).items():
            if not 0 <= blade < space.dim:
                raise DomainError(f"blade {blade:b} not in a rank-{space.rank} space")
            v = R.raw(c)
            if not R.is_zero(v):
                clean[blade] = v
        self.space = space
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, space: QuadraticSpace, terms: dict) -> CliffordElement:
        """Trusted constructor: terms already canonical."""
        obj = cls.__new__(cls)
        obj.space = space
        obj.terms = terms
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, space: QuadraticSpace) -> CliffordElement:
        return cls._make(space, {})

    @classmethod
    def one(cls, space: QuadraticSpace) -> CliffordElement:
        return cls._make(space, {0: space.ring.one})

    @classmethod
    def scalar(cls, space: QuadraticSpace, r) -> CliffordElement:
        return cls(space, {0: r})

    @classmethod
    def vector(cls, space: QuadraticSpace, coeffs: Sequence) -> CliffordElement:
        if len(coeffs) != space.rank:
            raise DomainError(f"expected {space.rank} coefficients, got {len(coeffs)}")
        return cls(space, {1 << i: c for i, c in enumerate(coeffs)})

    @classmethod
    def basis(cls, space: QuadraticSpace, i: int) -> CliffordElement:
        if not 0 <= i < space.rank:
            raise DomainError(f"no basis vector {i} in a rank-{space.rank} space")
        return cls._make(space, {1 << i: space.ring.one})

    @classmethod
    def blade(cls, space: QuadraticSpace, mask: int, coeff=1) -> CliffordElement:
        return cls(space, {mask: coeff})

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: CliffordElement):
        if other.space is not self.space and other.space != self.space:
            raise DomainError("Clifford elements belong to different spaces")

    def _coerce(self, other):
        if isinstance(other, CliffordElement):
            self._check(other)
            return other
        if isinstance(other, (int, RingElement)) and not isinstance(other, bool):
            return CliffordElement.scalar(self.space, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        R = self.space.ring
        out = dict(self.terms)
        for b, c in other.terms.items():
            v = R.add(out[b], c) if b in out else c
            if R.is_zero(v):
                del out[b]
            else:
                out[b] = v
        return CliffordElement._make(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        R = self.space.ring
        return CliffordElement._make(self.space, {b: R.neg(c) for b, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            self._check(other)
            return CliffordElement._make(self.space, _mul_terms(self.space, self.terms, other.terms))
        if isinstance(other, (int, RingElement)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, RingElement)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def scale(self, r) -> CliffordElement:
        R = self.space.ring
        r = R.raw(r)
        out = {}
        for b, c in self.terms.items():
            v = R.mul(c, r)
            if not R.is_zero(v):
                out[b] = v
        return CliffordElement._make(self.space, out)

    def __pow__(self, k: int):
        if k < 0:
            return self.try_invert() ** (-k)
        result = CliffordElement.one(self.space)
        for _ in range(k):
            result = result * self
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CliffordElement):
            return self.terms == other.terms and (
                other.space is self.space or other.space == self.space
            )
        if isinstance(other, (int, RingElement)) and not isinstance(other, bool):
            return self == CliffordElement.scalar(self.space, other)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash(frozenset(self.terms.items()))
        return h

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- (anti)automorphisms -------------------------------------------------

    def grade_involution(self) -> CliffordElement:
        """x' : negate the odd blades."""
        R = self.space.ring
        return CliffordElement._make(
            self.space, {b: (R.neg(c) if popcount(b) & 1 else c) for b, c in self.terms.items()}
        )

    def transpose(self) -> CliffordElement:
        """x^t : reverse the order of generators in every product."""
        return CliffordElement._make(self.space, _apply_linear(self.space, self.terms, _reverse_table(self.space)))

    def conjugate(self) -> CliffordElement:
        """Clifford conjugation, (x^t)' = (x')^t."""
        return CliffordElement._make(self.space, _apply_linear(self.space, self.terms, _conj_table(self.space)))

    def even(self) -> CliffordElement:
        return CliffordElement._make(self.space, {b: c for b, c in self.terms.items() if not popcount(b) & 1})

    def odd(self) -> CliffordElement:
        return CliffordElement._make(self.space, {b: c for b, c in self.terms.items() if popcount(b) & 1})

    def grade_part(self, parity: str) -> CliffordElement:
        if parity == "even":
            return self.even()
        if parity == "odd":
            return self.odd()
        raise DomainError(f"parity must be 'even' or 'odd', not {parity!r}")

    def is_even(self) -> bool:
        return all(not popcount(b) & 1 for b in self.terms)

    def is_odd(self) -> bool:
        return all(popcount(b) & 1 for b in self.terms)

    # -- norm and predicates ------------------------------------------------

    def norm(self) -> CliffordElement:
        """N(x) = x * conj(x)."""
        return self * self.conjugate()

    def is_scalar(self) -> bool:
        t = self.terms
        return not t or (len(t) == 1 and 0 in t)

    def scalar_part(self) -> RingElement:
        R = self.space.ring
        return R.wrap(self.terms.get(0, R.zero))

    def is_scalar_unit(self) -> bool:
        t = self.terms
        return len(t) == 1 and 0 in t and self.space.ring.raw_is_unit(t[0])

    def is_vector(self, sub: Iterable[int] | None = None) -> bool:
        """Every blade is a single generator (from ``sub`` if given); 0 passes."""
        allowed = None if sub is None else set(sub)
        for b in self.terms:
            if b == 0 or b & (b - 1):
                return False
            if allowed is not None and b.bit_length() - 1 not in allowed:
                return False
        return True

    def is_paravector(self, sub: Iterable[int] | None = None) -> bool:
        """Element of R ⊕ (span of ``sub``)."""
        allowed = None if sub is None else set(sub)
        for b in self.terms:
            if b == 0:
                continue
            if b & (b - 1):
                return False
            if allowed is not None and b.bit_length() - 1 not in allowed:
                return False
        return True

    def vector_coefficients(self) -> list[RingElement]:
        if not self.is_vector():
            raise DomainError(f"{self} is not a vector")
        R = self.space.ring
        return [R.wrap(self.terms.get(1 << i, R.zero)) for i in range(self.space.rank)]

    def in_twisted_centre(self) -> bool:
        """x e_i = e_i x' for every basis vector."""
        xg = self.grade_involution()
        for i in range(self.space.rank):
            e = CliffordElement.basis(self.space, i)
            if self * e != e * xg:
                return False
        return True

    def try_invert(self) -> CliffordElement:
        """conj(x) N(x)^-1, provided N(x) is a scalar unit."""
        n = self.norm()
        if not n.is_scalar_unit():
            raise NotInvertibleByNormError(f"N({self}) = {n} is not a unit scalar")
        inv = self.conjugate().scale(n.scalar_part().invert())
        one = CliffordElement.one(self.space)
        assert self * inv == one and inv * self == one
        return inv

    def coeff(self, blade: int) -> RingElement:
        R = self.space.ring
        return R.wrap(self.terms.get(blade, R.zero))

    def coefficient_vector(self) -> tuple:
        """Raw coefficients in blade-bitmask order; a canonical key."""
        z = self.space.ring.zero
        return tuple(self.terms.get(b, z) for b in range(self.space.dim))

    # -- text ----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        R = self.space.ring
        parts = []
        for b in sorted(self.terms):
            c = R.format(self.terms[b])
            if b == 0:
                parts.append(c)
                continue
            if " " in c:
                c = f"({c})"
            parts.append(f"{c}*{blade_name(b)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CliffordElement({self})"
