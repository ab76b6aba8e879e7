"""Exhaustive enumeration of Clifford elements and 2x2 Clifford matrices over finite rings."""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .clifford import CliffordElement, popcount
from .errors import UnsupportedError
from .matrix import CliffordMatrix2
from .qspace import QuadraticSpace

__all__ = ["enumerate_clifford", "enumerate_matrices", "clifford_count", "blades_for"]


def blades_for(space: QuadraticSpace, parity: str = "all") -> list[int]:
    if parity == "all":
        return list(range(space.dim))
    if parity == "even":
        return [b for b in range(space.dim) if not popcount(b) & 1]
    if parity == "odd":
        return [b for b in range(space.dim) if popcount(b) & 1]
    raise ValueError(f"parity must be all, even or odd, not {parity!r}")


def clifford_count(space: QuadraticSpace, parity: str = "all") -> int:
    return space.ring.size() ** len(blades_for(space, parity))


def enumerate_clifford(
    space: QuadraticSpace, parity: str = "all", prefix: Sequence = ()
) -> Iterator[CliffordElement]:
    """Every element of Cl(space) (or its even/odd part) exactly once.

    Order is lexicographic in the coefficient vector indexed by blade bitmask
    (lowest bitmask most significant).  ``prefix`` fixes the leading raw
    coefficients, which is how work is partitioned between workers.
    """
    R = space.ring
    if not R.is_finite():
        raise UnsupportedError(f"cannot enumerate Cl over the infinite ring {R}")
    blades = blades_for(space, parity)
    values = list(R.raw_elements())
    zero = R.zero
    fixed = list(prefix)
    if len(fixed) > len(blades):
        raise ValueError("prefix longer than the coefficient vector")
    free = blades[len(fixed):]
    head = {b: c for b, c in zip(blades, fixed) if c != zero}
    make = CliffordElement._make
    for combo in itertools.product(values, repeat=len(free)):
        terms = dict(head)
        for b, c in zip(free, combo):
            if c != zero:
                terms[b] = c
        yield make(space, terms)


def enumerate_matrices(
    space: QuadraticSpace,
    parity: str = "all",
    entries: Sequence[CliffordElement] | None = None,
) -> Iterator[CliffordMatrix2]:
    """All 2x2 matrices over Cl(space), row-major lexicographic.

    ``parity="even"`` restricts to the even pattern (even diagonal, odd
    off-diagonal); ``"odd"`` to the opposite pattern.
    """
    if parity == "all":
        pools = [list(entries if entries is not None else enumerate_clifford(space))] * 4
    else:
        ev = list(enumerate_clifford(space, "even"))
        od = list(enumerate_clifford(space, "odd"))
        pools = [ev, od, od, ev] if parity == "even" else [od, ev, ev, od]
    for a, b, c, d in itertools.product(*pools):
        yield CliffordMatrix2(a, b, c, d)
