"""Free quadratic modules of finite rank.

A form is stored as its diagonal values ``q(e_i)`` plus the off-diagonal
bilinear values ``(e_i, e_j)``; in characteristic 2 the form cannot be
recovered from its Gram matrix, so both pieces are kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .ring import Ring, RingElement, ring_from_config

__all__ = ["Splitting", "QuadraticSpace", "build_split_space", "space_from_config", "determinant"]


@dataclass(frozen=True)
class Splitting:
    """Orthogonal splitting annotation: ``<e,f> ⊥ [<z> ⊥] complement``."""

    kind: str  # "ordinary" | "paravector"
    hyperbolic_pair: tuple[int, int] = (0, 1)
    z_index: int | None = None
    complement: tuple[int, ...] = ()


@dataclass(frozen=True, eq=True)
class QuadraticSpace:
    ring: Ring
    q_diag: tuple
    bilinear: tuple = ()  # sorted ((i, j), RingElement) with i < j, nonzero only
    splitting: Splitting | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __init__(
        self,
        ring: Ring,
        q_diag: Sequence = (),
        bilinear: Mapping | Iterable = (),
        splitting: Splitting | None = None,
    ):
        set_ = object.__setattr__
        set_(self, "ring", ring)
        set_(self, "q_diag", tuple(ring(v) for v in q_diag))
        n = len(self.q_diag)
        items = bilinear.items() if isinstance(bilinear, Mapping) else bilinear
        table: dict[tuple[int, int], RingElement] = {}
        for key, v in items:
            i, j = key
            if i == j:
                raise DomainError("diagonal bilinear values are fixed to 2q(e_i)")
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError(f"bilinear index ({i}, {j}) out of range for rank {n}")
            i, j = min(i, j), max(i, j)
            v = ring(v)
            if (i, j) in table and table[(i, j)] != v:
                raise DomainError(f"conflicting bilinear values for ({i}, {j})")
            table[(i, j)] = v
        set_(self, "bilinear", tuple(sorted((k, v) for k, v in table.items() if not v.is_zero())))
        set_(self, "splitting", splitting)
        set_(self, "_cache", {})
        if splitting is not None:
            self._check_splitting()

    # the generated __hash__/__eq__ only look at compare=True fields
    def __reduce__(self):
        return (QuadraticSpace, (self.ring, self.q_diag, self.bilinear, self.splitting))

    # -- basic access --------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.q_diag)

    @property
    def dim(self) -> int:
        """Rank of the Clifford algebra as a free module: 2**rank."""
        return 1 << self.rank

    def _bil_map(self) -> dict:
        m = self._cache.get("bil")
        if m is None:
            m = {}
            for (i, j), v in self.bilinear:
                m[(i, j)] = v.value
                m[(j, i)] = v.value
            self._cache["bil"] = m
        return m

    def q_raw(self, i: int):
        return self.q_diag[i].value

    def b_raw(self, i: int, j: int):
        """Raw bilinear value (e_i, e_j); the diagonal is 2 q(e_i)."""
        R = self.ring
        if i == j:
            return R.add(self.q_diag[i].value, self.q_diag[i].value)
        return self._bil_map().get((i, j), R.zero)

    def q(self, i: int) -> RingElement:
        return self.q_diag[i]

    def b(self, i: int, j: int) -> RingElement:
        return self.ring.wrap(self.b_raw(i, j))

    def gram(self) -> list[list[RingElement]]:
        return [[self.b(i, j) for j in range(self.rank)] for i in range(self.rank)]

    def _coeffs(self, coeffs) -> list:
        if len(coeffs) != self.rank:
            raise DomainError(f"expected {self.rank} coefficients, got {len(coeffs)}")
        return [self.ring.raw(c) for c in coeffs]

    # -- form evaluation ---------------------------------------------------

    def eval_q(self, coeffs: Sequence) -> RingElement:
        """q(sum x_i e_i) = sum q(e_i) x_i^2 + sum_{i<j} (e_i, e_j) x_i x_j."""
        R = self.ring
        x = self._coeffs(coeffs)
        total = R.zero
        for i, xi in enumerate(x):
            total = R.add(total, R.mul(self.q_raw(i), R.mul(xi, xi)))
        for (i, j), v in self.bilinear:
            total = R.add(total, R.mul(v.value, R.mul(x[i], x[j])))
        return R.wrap(total)

    def eval_bilinear(self, a: Sequence, b: Sequence) -> RingElement:
        """(a, b) = q(a + b) - q(a) - q(b)."""
        x, y = self._coeffs(a), self._coeffs(b)
        R = self.ring
        s = [R.add(u, v) for u, v in zip(x, y)]
        return self.eval_q([R.wrap(v) for v in s]) - self.eval_q(a) - self.eval_q(b)

    def is_nondegenerate(self) -> bool:
        """True iff the Gram determinant of the bilinear form is a unit."""
        if self.rank == 0:
            return True
        gram = [[self.b_raw(i, j) for j in range(self.rank)] for i in range(self.rank)]
        return self.ring.raw_is_unit(determinant(self.ring, gram))

    # -- construction helpers ---------------------------------------------

    def subspace(self, indices: Sequence[int]) -> QuadraticSpace:
        """Restriction of the form to the span of the listed basis vectors (in order)."""
        idx = list(indices)
        bil = {}
        for a, i in enumerate(idx):
            for c, j in enumerate(idx):
                if a < c:
                    v = self.b_raw(i, j)
                    if not self.ring.is_zero(v):
                        bil[(a, c)] = self.ring.wrap(v)
        return QuadraticSpace(self.ring, [self.q_diag[i] for i in idx], bil)

    def config(self) -> dict:
        d = {
            "ring": self.ring.config(),
            "rank": self.rank,
            "q_diag": [str(v) for v in self.q_diag],
            "bilinear": [[i, j, str(v)] for (i, j), v in self.bilinear],
        }
        if self.splitting is not None:
            d["splitting"] = {"kind": self.splitting.kind}
        return d

    def _check_splitting(self):
        s = self.splitting
        R = self.ring
        n = self.rank
        e, f = s.hyperbolic_pair
        special = [e, f] + ([s.z_index] if s.z_index is not None else [])
        if max(special) >= n or len(set(special)) != len(special):
            raise DomainError("splitting indices out of range")
        if not (R.is_zero(self.q_raw(e)) and R.is_zero(self.q_raw(f))):
            raise DomainError("hyperbolic pair needs q(e) = q(f) = 0")
        if self.b_raw(e, f) != R.one:
            raise DomainError("hyperbolic pair needs (e, f) = 1")
        if s.z_index is not None and self.q_raw(s.z_index) != R.neg(R.one):
            raise DomainError("distinguished vector needs q(z) = -1")
        for a in special:
            for j in range(n):
                if j != a and not (a in (e, f) and j in (e, f)):
                    if not R.is_zero(self.b_raw(a, j)):
                        raise DomainError(f"basis vector {a} of the splitting is not orthogonal to {j}")

    def __str__(self):
        q = ", ".join(str(v) for v in self.q_diag)
        return f"QuadraticSpace({self.ring}, rank {self.rank}, q=({q}))"


def determinant(ring: Ring, matrix: list[list]) -> object:
    """Division-free determinant over a commutative ring (Laplace expansion, memoised on column sets)."""
    n = len(matrix)
    R = ring
    # row k expands against a set of still-unused columns
    memo: dict[int, object] = {0: R.one}
    for k in range(n):
        new: dict[int, object] = {}
        for used, val in memo.items():
            free_cols = [c for c in range(n) if not used >> c & 1]
            for c in free_cols:
                entry = matrix[k][c]
                if R.is_zero(entry):
                    continue
                # sign = (-1)^(number of used columns greater than c)
                sign_neg = bin(used >> (c + 1)).count("1") & 1
                term = R.mul(val, entry)
                if sign_neg:
                    term = R.neg(term)
                key = used | (1 << c)
                new[key] = R.add(new[key], term) if key in new else term
        memo = new
    return memo.get((1 << n) - 1, R.zero)


def build_split_space(kind: str, inner: QuadraticSpace) -> QuadraticSpace:
    """``<e,f> ⊥ inner`` (ordinary) or ``<e,f> ⊥ <z> ⊥ inner`` (paravector).

    Basis order is fixed: e, f, [z,] then the inner basis.
    """
    R = inner.ring
    if kind == "ordinary":
        offset = 2
        q = [R(0), R(0)]
    elif kind == "paravector":
        offset = 3
        q = [R(0), R(0), R(-1)]
    else:
        raise DomainError(f"unknown splitting kind {kind!r}")
    q += list(inner.q_diag)
    bil = {(0, 1): R(1)}
    for (i, j), v in inner.bilinear:
        bil[(i + offset, j + offset)] = v
    splitting = Splitting(
        kind=kind,
        hyperbolic_pair=(0, 1),
        z_index=2 if kind == "paravector" else None,
        complement=tuple(range(offset, offset + inner.rank)),
    )
    return QuadraticSpace(R, q, bil, splitting)


CONFIG_KEYS = frozenset({"ring", "rank", "q_diag", "bilinear", "splitting"})


def space_from_config(cfg: dict) -> QuadraticSpace:
    """Inner space described by a config file (see README for the schema)."""
    unknown = set(cfg) - CONFIG_KEYS
    if unknown:
        raise DomainError(f"unknown config keys: {', '.join(sorted(unknown))}")
    try:
        ring = ring_from_config(cfg["ring"])
    except KeyError:
        raise DomainError("config needs a 'ring' entry") from None
    q_diag = cfg.get("q_diag", [])
    rank = cfg.get("rank", len(q_diag))
    if len(q_diag) != rank:
        raise DomainError(f"rank {rank} does not match {len(q_diag)} q_diag entries")
    bil = {}
    for entry in cfg.get("bilinear", []):
        if len(entry) != 3:
            raise DomainError(f"bilinear entries are [i, j, value], got {entry!r}")
        i, j, v = entry
        bil[(int(i), int(j))] = ring(v)
    return QuadraticSpace(ring, [ring(v) for v in q_diag], bil)
