"""Clifford-group style membership: NC, its even part, Pin and Spin.

Only elements invertible through their norm are handled: ``u`` is in NC when
``N(u)`` is a scalar unit and the twisted adjoint action
``pi(u) m = u' m conj(u) N(u)^-1`` keeps every basis vector inside M.
"""

from __future__ import annotations

import enum

from .clifford import CliffordElement
from .errors import DomainError, ImageNotInModuleError, NotInvertibleByNormError
from .ring import RingElement

__all__ = [
    "GroupKind",
    "pi_apply",
    "pi_image",
    "reflection",
    "is_member",
    "preserves_form",
    "acts_trivially",
]


class GroupKind(enum.Enum):
    NC = "nc"
    NC_EVEN = "nc0"
    PIN = "pin"
    SPIN = "spin"


def _as_vector(space, m) -> CliffordElement:
    if isinstance(m, CliffordElement):
        if not m.is_vector():
            raise DomainError(f"{m} is not a vector")
        return m
    return CliffordElement.vector(space, m)


def _norm_inverse(u: CliffordElement):
    n = u.norm()
    if not n.is_scalar_unit():
        raise NotInvertibleByNormError(f"N(u) = {n} is not a unit scalar")
    return n.scalar_part().invert()


def pi_image(u: CliffordElement, m, n_inv: RingElement | None = None) -> CliffordElement:
    """u' m conj(u) N(u)^-1 as a Clifford element (not necessarily a vector)."""
    if n_inv is None:
        n_inv = _norm_inverse(u)
    x = _as_vector(u.space, m)
    return (u.grade_involution() * x * u.conjugate()).scale(n_inv)


def pi_apply(u: CliffordElement, m) -> list[RingElement]:
    """Coefficients of pi(u) m; raises unless the image is again a vector."""
    img = pi_image(u, m)
    if not img.is_vector():
        raise ImageNotInModuleError(f"pi(u) sends {m} to {img}, which is not in M")
    return img.vector_coefficients()


def reflection(n, m) -> list[RingElement]:
    """pi(n) m = m - ((n, m)/q(n)) n for a vector n with q(n) a unit."""
    if not isinstance(n, CliffordElement):
        raise TypeError("reflection expects the mirror vector as a CliffordElement")
    return pi_apply(_as_vector(n.space, n), m)


def _basis_images(u: CliffordElement, n_inv) -> list[CliffordElement] | None:
    space = u.space
    ug = u.grade_involution()
    uc = u.conjugate()
    images = []
    for i in range(space.rank):
        img = (ug * CliffordElement.basis(space, i) * uc).scale(n_inv)
        if not img.is_vector():
            return None
        images.append(img)
    return images


def is_member(u: CliffordElement, kind: GroupKind | str) -> bool:
    kind = GroupKind(kind) if not isinstance(kind, GroupKind) else kind
    if kind in (GroupKind.NC_EVEN, GroupKind.SPIN) and not u.is_even():
        return False
    n = u.norm()
    if not n.is_scalar_unit():
        return False
    if kind in (GroupKind.PIN, GroupKind.SPIN) and n.terms[0] != u.space.ring.one:
        return False
    return _basis_images(u, n.scalar_part().invert()) is not None


def preserves_form(u: CliffordElement) -> bool:
    """q(pi(u) m) = q(m) on basis vectors and all pairwise sums."""
    if not is_member(u, GroupKind.NC):
        raise DomainError("preserves_form needs an NC member")
    space = u.space
    R = space.ring
    n = space.rank
    images = _basis_images(u, u.norm().scalar_part().invert())
    coeffs = [img.vector_coefficients() for img in images]
    for i in range(n):
        m = [R(1) if k == i else R(0) for k in range(n)]
        if space.eval_q(coeffs[i]) != space.eval_q(m):
            return False
        for j in range(i + 1, n):
            msum = [R(1) if k in (i, j) else R(0) for k in range(n)]
            img = [a + b for a, b in zip(coeffs[i], coeffs[j])]
            if space.eval_q(img) != space.eval_q(msum):
                return False
    return True


def acts_trivially(u: CliffordElement) -> bool:
    """pi(u) is the identity on M (u must be norm-invertible)."""
    n_inv = _norm_inverse(u)
    images = _basis_images(u, n_inv)
    if images is None:
        return False
    return all(img == CliffordElement.basis(u.space, i) for i, img in enumerate(images))
