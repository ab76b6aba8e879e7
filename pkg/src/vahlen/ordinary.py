"""Ordinary Vahlen groups GV(N,q) / SV(N,q) and the entry monoid T(N,q).

Three membership definitions are implemented clause by clause:

* definition 1: entries in T ∪ {0}, unit pseudo-determinant,
  ``alpha beta^t, delta gamma^t`` vectors;
* definition 2: as 1 with ``conj(alpha) beta, conj(delta) gamma``;
* definition 3: the six-clause definition used for the isomorphism with NC.

Clauses quantified over all vectors are checked on a basis; every such
expression is linear in the quantified vector.  The paravector variant in
:mod:`vahlen.paravector` reuses this engine with ``R ⊕ L`` in place of N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .clifford import CliffordElement
from .enumeration import enumerate_clifford
from .errors import DomainError
from .matrix import CliffordMatrix2
from .qspace import QuadraticSpace

__all__ = [
    "Clause",
    "ConditionReport",
    "Flavour",
    "ORDINARY",
    "is_in_T",
    "check_definition",
    "satisfies",
    "t_closed_under_transpose",
    "transpose_closure_witnesses",
    "pseudo_det",
]

MAX_WITNESS = 10


def pseudo_det(g: CliffordMatrix2) -> CliffordElement:
    return g.pseudo_det()


@dataclass
class Clause:
    name: str
    passed: bool
    witness: str | None = None

    def to_dict(self) -> dict:
        return {"clause": self.name, "passed": self.passed, "witness": self.witness}


@dataclass
class ConditionReport:
    kind: str
    definition: int
    pseudo_det: str
    clauses: list[Clause] = field(default_factory=list)
    special: bool = False

    @property
    def member(self) -> bool:
        return all(c.passed for c in self.clauses)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "definition": self.definition,
            "member": self.member,
            "special": self.member and self.special,
            "pseudo_det": self.pseudo_det,
            "clauses": [c.to_dict() for c in self.clauses],
        }


@lru_cache(maxsize=1 << 16)
def is_in_T(x: CliffordElement) -> bool:
    """x != 0, N(x) in R and x n x^t in N for each basis vector n."""
    if x.is_zero() or not x.norm().is_scalar():
        return False
    xt = x.transpose()
    space = x.space
    return all((x * CliffordElement.basis(space, i) * xt).is_vector() for i in range(space.rank))


@dataclass(frozen=True)
class Flavour:
    """Which module plays the role of "vectors" in the Vahlen conditions."""

    kind: str
    target: str
    in_target: Callable[[CliffordElement], bool]
    probes: Callable[[QuadraticSpace], list]
    entry_ok: Callable[[CliffordElement], bool]


def _vector_probes(space: QuadraticSpace) -> list:
    return [CliffordElement.basis(space, i) for i in range(space.rank)]


ORDINARY = Flavour(
    kind="ordinary",
    target="N ∪ {0}",
    in_target=CliffordElement.is_vector,
    probes=_vector_probes,
    entry_ok=is_in_T,
)


def _fmt(label: str, x: CliffordElement) -> str:
    return f"{label} = {x}"


def _clauses(g: CliffordMatrix2, which: int, fl: Flavour) -> Iterator[tuple[str, Callable[[], str | None]]]:
    """Yield ``(name, check)`` pairs; ``check()`` returns None or a witness string."""
    a, b, c, d = g.entries
    tr = {}
    cj = {}

    def t(x):
        k = id(x)
        if k not in tr:
            tr[k] = x.transpose()
        return tr[k]

    def bar(x):
        k = id(x)
        if k not in cj:
            cj[k] = x.conjugate()
        return cj[k]

    tgt = fl.target

    def det_unit():
        pd = a * t(d) - b * t(c)
        return None if pd.is_scalar_unit() else _fmt("alpha delta^t - beta gamma^t", pd)

    def entries_ok():
        for name, x in zip("alpha beta gamma delta".split(), (a, b, c, d)):
            if not (x.is_zero() or fl.entry_ok(x)):
                return f"{name} = {x} is not an admissible entry"
        return None

    def in_tgt(pairs):
        def check():
            for label, fn in pairs:
                x = fn()
                if not fl.in_target(x):
                    return _fmt(label, x) + f" not in {tgt}"
            return None

        return check

    if which == 3:
        yield "i: alpha delta^t - beta gamma^t in R*", det_unit

        def sym():
            lhs, rhs = a * t(b), b * t(a)
            if lhs != rhs:
                return f"alpha beta^t = {lhs} but beta alpha^t = {rhs}"
            lhs, rhs = c * t(d), d * t(c)
            if lhs != rhs:
                return f"gamma delta^t = {lhs} but delta gamma^t = {rhs}"
            return None

        yield "ii: alpha beta^t = beta alpha^t, gamma delta^t = delta gamma^t", sym

        def norms():
            for name, x in zip("alpha beta gamma delta".split(), (a, b, c, d)):
                n = x * bar(x)
                if not n.is_scalar():
                    return _fmt(f"N({name})", n) + " not in R"
            return None

        yield "iii: N(alpha), N(beta), N(gamma), N(delta) in R", norms
        yield (
            f"iv: alpha conj(gamma), beta conj(delta) in {tgt}",
            in_tgt([("alpha conj(gamma)", lambda: a * bar(c)), ("beta conj(delta)", lambda: b * bar(d))]),
        )

        def quad_scalar():
            for x in fl.probes(g.space):
                xb = x.conjugate()
                v = a * x * bar(b) + b * xb * bar(a)
                if not v.is_scalar():
                    return f"x = {x}: alpha x conj(beta) + beta conj(x) conj(alpha) = {v} not in R"
                v = c * x * bar(d) + d * xb * bar(c)
                if not v.is_scalar():
                    return f"x = {x}: gamma x conj(delta) + delta conj(x) conj(gamma) = {v} not in R"
            return None

        yield "v: alpha x conj(beta) + beta conj(x) conj(alpha), gamma x conj(delta) + delta conj(x) conj(gamma) in R", quad_scalar

        def mixed():
            for x in fl.probes(g.space):
                v = a * x * bar(d) + b * x.conjugate() * bar(c)
                if not fl.in_target(v):
                    return f"x = {x}: alpha x conj(delta) + beta conj(x) conj(gamma) = {v} not in {tgt}"
            return None

        yield f"vi: alpha x conj(delta) + beta conj(x) conj(gamma) in {tgt}", mixed
    elif which in (1, 2):
        yield "i: alpha, beta, gamma, delta admissible or 0", entries_ok
        yield "ii: alpha delta^t - beta gamma^t in R*", det_unit
        if which == 1:
            yield (
                f"iii: alpha beta^t, delta gamma^t in {tgt}",
                in_tgt([("alpha beta^t", lambda: a * t(b)), ("delta gamma^t", lambda: d * t(c))]),
            )
        else:
            yield (
                f"iii: conj(alpha) beta, conj(delta) gamma in {tgt}",
                in_tgt([("conj(alpha) beta", lambda: bar(a) * b), ("conj(delta) gamma", lambda: bar(d) * c)]),
            )
    else:
        raise DomainError(f"definition must be 1, 2 or 3, not {which!r}")


def evaluate(g: CliffordMatrix2, which: int, fl: Flavour) -> ConditionReport:
    pd = g.pseudo_det()
    report = ConditionReport(kind=fl.kind, definition=which, pseudo_det=str(pd), special=pd == 1)
    for name, check in _clauses(g, which, fl):
        witness = check()
        report.clauses.append(Clause(name, witness is None, witness))
    return report


def satisfies_flavour(g: CliffordMatrix2, which: int, fl: Flavour) -> bool:
    return all(check() is None for _, check in _clauses(g, which, fl))


def check_definition(g: CliffordMatrix2, which: int) -> ConditionReport:
    """Evaluate every clause of ordinary definition ``which`` (1, 2 or 3)."""
    return evaluate(g, which, ORDINARY)


def satisfies(g: CliffordMatrix2, which: int) -> bool:
    """Short-circuiting membership under ordinary definition ``which``."""
    return satisfies_flavour(g, which, ORDINARY)


def transpose_closure_witnesses(space: QuadraticSpace, entry_ok=is_in_T, limit: int = MAX_WITNESS) -> list[str]:
    """Elements x with x admissible but x^t not (exhaustive; finite rings only)."""
    out = []
    for x in enumerate_clifford(space):
        if entry_ok(x) and not entry_ok(x.transpose()):
            out.append(f"x = {x}, x^t = {x.transpose()}")
            if len(out) >= limit:
                break
    return out


def t_closed_under_transpose(space: QuadraticSpace) -> bool:
    return not transpose_closure_witnesses(space, is_in_T, limit=1)
