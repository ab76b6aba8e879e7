"""Explicit isomorphisms for split quadratic spaces.

* :class:`PhiIso` -- ``phi: Cl(<e,f> ⊥ N) -> MAT_2(Cl(N))`` sending
  ``e -> (0,1;0,0)``, ``f -> (0,0;1,0)``, ``n -> (n,0;0,-n)``.
* :class:`ThetaIso` -- for ``M = <e,f> ⊥ <z> ⊥ L`` with ``q(z) = -1``:
  ``psi: Cl(Z) -> Cl_0(M)`` with ``Z = <e,f> ⊥ L`` and ``x -> z x`` on
  generators, and ``theta = phi_Z ∘ psi^-1: Cl_0(M) -> MAT_2(Cl(L))``.

Sub-algebras are embedded by relabelling blade bits; the fixed basis order
(e, f, [z,] inner...) keeps every embedding order-preserving.
"""

from __future__ import annotations

from .clifford import CliffordElement
from .errors import DomainError
from .matrix import CliffordMatrix2
from .qspace import QuadraticSpace, build_split_space

__all__ = ["PhiIso", "ThetaIso", "translate_check"]


def _relabel(terms: dict, mapping: list[int]) -> dict:
    out = {}
    for blade, c in terms.items():
        m = 0
        i = 0
        b = blade
        while b:
            if b & 1:
                m |= 1 << mapping[i]
            b >>= 1
            i += 1
        out[m] = c
    return out


class PhiIso:
    """phi for an ambient space whose basis starts with a hyperbolic pair (e, f)."""

    def __init__(self, ambient: QuadraticSpace, inner: QuadraticSpace | None = None):
        s = ambient.splitting
        if s is None or s.hyperbolic_pair != (0, 1):
            raise DomainError("phi needs a space split as <e,f> ⊥ N with (e, f) first")
        sub = ambient.subspace(range(2, ambient.rank))
        if inner is None:
            inner = sub
        elif inner != sub and (inner.ring, inner.q_diag, inner.bilinear) != (sub.ring, sub.q_diag, sub.bilinear):
            raise DomainError("inner space does not match the complement of <e,f>")
        self.ambient = ambient
        self.inner = inner
        self._blades: list[CliffordMatrix2 | None] = [None] * ambient.dim
        self._gens = self._generator_images()

    @classmethod
    def from_inner(cls, inner: QuadraticSpace) -> PhiIso:
        return cls(build_split_space("ordinary", inner), inner)

    def embed(self, x: CliffordElement) -> CliffordElement:
        """iota: Cl(N) -> Cl(M), relabelling n_i to basis index i + 2."""
        if x.space is not self.inner and x.space != self.inner:
            raise DomainError("element does not live in Cl(N)")
        return CliffordElement._make(self.ambient, {b << 2: c for b, c in x.terms.items()})

    def _generator_images(self) -> list[CliffordMatrix2]:
        N = self.inner
        one, zero = CliffordElement.one(N), CliffordElement.zero(N)
        gens = [CliffordMatrix2(zero, one, zero, zero), CliffordMatrix2(zero, zero, one, zero)]
        for i in range(N.rank):
            n = CliffordElement.basis(N, i)
            gens.append(CliffordMatrix2(n, zero, zero, -n))
        return gens

    def blade_image(self, blade: int) -> CliffordMatrix2:
        img = self._blades[blade]
        if img is None:
            img = CliffordMatrix2.identity(self.inner)
            i = 0
            b = blade
            while b:
                if b & 1:
                    img = img * self._gens[i]
                b >>= 1
                i += 1
            self._blades[blade] = img
        return img

    def phi(self, x: CliffordElement) -> CliffordMatrix2:
        if x.space is not self.ambient and x.space != self.ambient:
            raise DomainError("element does not live in the ambient algebra")
        N = self.inner
        R = N.ring
        acc = [dict(), dict(), dict(), dict()]
        for blade, c in x.terms.items():
            img = self.blade_image(blade)
            for slot, entry in zip(acc, img.entries):
                for b2, v in entry.terms.items():
                    slot[b2] = R.add(slot.get(b2, R.zero), R.mul(c, v))
        make = CliffordElement._make
        ents = [make(N, {b: v for b, v in slot.items() if not R.is_zero(v)}) for slot in acc]
        return CliffordMatrix2(*ents)

    __call__ = phi

    def phi_inverse(self, g: CliffordMatrix2) -> CliffordElement:
        """ef iota(alpha) + e iota(beta') + f iota(gamma) + fe iota(delta')."""
        M = self.ambient
        e = CliffordElement.basis(M, 0)
        f = CliffordElement.basis(M, 1)
        a, b, c, d = g.entries
        return (
            e * f * self.embed(a)
            + e * self.embed(b.grade_involution())
            + f * self.embed(c)
            + f * e * self.embed(d.grade_involution())
        )


def translate_check(iso: PhiIso, x: CliffordElement) -> bool:
    """phi intertwines grade, transpose and conjugation with their matrix versions."""
    g = iso.phi(x)
    return (
        iso.phi(x.grade_involution()) == g.grade()
        and iso.phi(x.transpose()) == g.transpose()
        and iso.phi(x.conjugate()) == g.conjugate()
    )


class ThetaIso:
    """theta: Cl_0(<e,f> ⊥ <z> ⊥ L) -> MAT_2(Cl(L))."""

    def __init__(self, ambient: QuadraticSpace, inner: QuadraticSpace | None = None):
        s = ambient.splitting
        if s is None or s.kind != "paravector" or s.z_index != 2 or s.hyperbolic_pair != (0, 1):
            raise DomainError("theta needs a space split as <e,f> ⊥ <z> ⊥ L in that basis order")
        sub = ambient.subspace(range(3, ambient.rank))
        if inner is None:
            inner = sub
        elif (inner.ring, inner.q_diag, inner.bilinear) != (sub.ring, sub.q_diag, sub.bilinear):
            raise DomainError("inner space does not match L")
        self.ambient = ambient
        self.inner = inner
        self.z_space = build_split_space("ordinary", inner)
        self.phi_z = PhiIso(self.z_space, inner)
        # Z basis (e, f, l_1..) -> ambient (e, f, l_1..) skipping z at index 2
        self._to_m = [0, 1] + [j + 1 for j in range(2, self.z_space.rank)]
        self._to_z = {m: j for j, m in enumerate(self._to_m)}
        self._z = CliffordElement.basis(ambient, 2)

    @classmethod
    def from_inner(cls, inner: QuadraticSpace) -> ThetaIso:
        return cls(build_split_space("paravector", inner), inner)

    def _zmask(self) -> int:
        return 1 << 2

    def embed_z(self, y: CliffordElement) -> CliffordElement:
        """Cl(Z) -> Cl(M) by relabelling (not psi)."""
        return CliffordElement._make(self.ambient, _relabel(y.terms, self._to_m))

    def psi(self, y: CliffordElement) -> CliffordElement:
        """psi(y) = y_0 + z y_1."""
        if y.space is not self.z_space and y.space != self.z_space:
            raise DomainError("psi expects an element of Cl(<e,f> ⊥ L)")
        m = self.embed_z(y)
        return m.even() + self._z * m.odd()

    def psi_inverse(self, u: CliffordElement) -> CliffordElement:
        """Split an even u as p + z r (p, r free of z) and return p + r in Cl(Z)."""
        if not u.is_even():
            raise DomainError(f"psi^-1 needs an even element, got {u}")
        zbit = self._zmask()
        p = {b: c for b, c in u.terms.items() if not b & zbit}
        rest = CliffordElement._make(self.ambient, {b: c for b, c in u.terms.items() if b & zbit})
        # z^-1 = -z because q(z) = -1
        r = -(self._z * rest)
        if any(b & zbit for b in r.terms):
            raise AssertionError("z-extraction left a z-blade behind")
        back = {}
        for b, c in list(p.items()) + list(r.terms.items()):
            back[b] = c
        to_z = self._to_z
        terms = {}
        for b, c in back.items():
            m = 0
            i = 0
            bb = b
            while bb:
                if bb & 1:
                    m |= 1 << to_z[i]
                bb >>= 1
                i += 1
            terms[m] = c
        return CliffordElement._make(self.z_space, terms)

    def theta(self, u: CliffordElement) -> CliffordMatrix2:
        return self.phi_z.phi(self.psi_inverse(u))

    __call__ = theta

    def theta_inverse(self, g: CliffordMatrix2) -> CliffordElement:
        return self.psi(self.phi_z.phi_inverse(g))
