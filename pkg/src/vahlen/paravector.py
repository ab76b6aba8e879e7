"""Paravector Vahlen groups GPV(L,q) / SPV(L,q) and the entry monoid PT(L,q).

Same clause engine as :mod:`vahlen.ordinary`, with ``R ⊕ L`` replacing N and
quantified clauses probed on ``{1} ∪ basis(L)``.

PT is read as ``Cl(L,q) - {0}`` by default; ``strict=True`` additionally
requires the entry to be a norm-invertible Clifford-group element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cgroups import GroupKind, is_member
from .clifford import CliffordElement
from .errors import DomainError
from .matrix import CliffordMatrix2
from .ordinary import ConditionReport, Flavour, evaluate, satisfies_flavour, transpose_closure_witnesses
from .qspace import QuadraticSpace, build_split_space

__all__ = [
    "ParavectorContext",
    "is_in_PT",
    "check_pv_definition",
    "pv_satisfies",
    "pt_closed_under_transpose",
    "paravector_flavour",
]


def _paravector_probes(space: QuadraticSpace) -> list:
    return [CliffordElement.one(space)] + [CliffordElement.basis(space, i) for i in range(space.rank)]


@lru_cache(maxsize=1 << 16)
def _pt_loose(x: CliffordElement) -> bool:
    if x.is_zero() or not x.norm().is_scalar():
        return False
    xt = x.transpose()
    return all((x * p * xt).is_paravector() for p in _paravector_probes(x.space))


@lru_cache(maxsize=1 << 16)
def _pt_strict(x: CliffordElement) -> bool:
    return _pt_loose(x) and is_member(x, GroupKind.NC)


def is_in_PT(x: CliffordElement, strict: bool = False) -> bool:
    """x != 0, N(x) in R and x p x^t in R ⊕ L for p in {1} ∪ basis(L)."""
    return _pt_strict(x) if strict else _pt_loose(x)


_LOOSE = Flavour(
    kind="paravector",
    target="R ⊕ L",
    in_target=CliffordElement.is_paravector,
    probes=_paravector_probes,
    entry_ok=_pt_loose,
)
_STRICT = Flavour(
    kind="paravector",
    target="R ⊕ L",
    in_target=CliffordElement.is_paravector,
    probes=_paravector_probes,
    entry_ok=_pt_strict,
)


def paravector_flavour(strict: bool = False) -> Flavour:
    return _STRICT if strict else _LOOSE


def check_pv_definition(g: CliffordMatrix2, which: int, strict: bool = False) -> ConditionReport:
    return evaluate(g, which, paravector_flavour(strict))


def pv_satisfies(g: CliffordMatrix2, which: int, strict: bool = False) -> bool:
    return satisfies_flavour(g, which, paravector_flavour(strict))


def pt_closed_under_transpose(space: QuadraticSpace, strict: bool = False) -> bool:
    entry = _pt_strict if strict else _pt_loose
    return not transpose_closure_witnesses(space, entry, limit=1)


@dataclass(frozen=True)
class ParavectorContext:
    """L together with the ambient ``M = <e,f> ⊥ <z> ⊥ L``."""

    inner: QuadraticSpace
    ambient: QuadraticSpace

    @classmethod
    def from_inner(cls, inner: QuadraticSpace) -> ParavectorContext:
        return cls(inner, build_split_space("paravector", inner))

    def __post_init__(self):
        s = self.ambient.splitting
        if s is None or s.kind != "paravector" or s.z_index is None:
            raise DomainError("ambient space lacks a paravector splitting")
        R = self.ambient.ring
        if self.ambient.q(s.z_index) != R(-1):
            raise DomainError("q(z) must be -1")
        if self.ambient.subspace(s.complement) != self.inner:
            raise DomainError("ambient complement does not match L")
