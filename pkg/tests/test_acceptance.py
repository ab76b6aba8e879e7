"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) or through pytest, which
repeats the lines in its terminal summary.
"""

import itertools
import random
import time

import pytest

from vahlen import CliffordElement, CliffordMatrix2, PhiIso, QuadraticSpace, enumerate_clifford
from vahlen.verify import (
    smoke_laurent,
    verify_group_structure,
    verify_paravector_equiv,
    verify_paravector_iso,
    verify_vahlen_equiv,
    verify_vahlen_iso,
)

from conftest import ACCEPTANCE_LINES
from support import GF2, GF3, RINGS, random_element, random_space, random_vector

# time budgets in seconds
LIMIT_LAWS = 5.0
LIMIT_PHI = 10.0
LIMIT_ISO = 60.0
LIMIT_EQUIV = 60.0
LIMIT_PARA_ISO = 120.0
LIMIT_PARA_EQUIV = 120.0
LIMIT_GROUP = 60.0
LIMIT_LAURENT = 10.0

TRIPLES = 1000
MAX_RANK = 4
LAURENT_SAMPLES = 100

ORDINARY_CONFIGS = [(GF3, [1]), (GF3, [2]), (GF2, [1])]
PARAVECTOR_CONFIGS = [(GF3, []), (GF3, [1]), (GF2, [1])]


def _label(R, q):
    return f"{R} q={q}"


def report(n: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {n} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    print(line)
    ACCEPTANCE_LINES.append(line)


def _laws_hold(sp, x, y, z, m, n) -> list[str]:
    bad = []
    if (x * y) * z != x * (y * z):
        bad.append("associativity")
    if x * (y + z) != x * y + x * z or (x + y) * z != x * z + y * z:
        bad.append("distributivity")
    if (x * y).transpose() != y.transpose() * x.transpose():
        bad.append("(xy)^t = y^t x^t")
    if not x.conjugate() == x.transpose().grade_involution() == x.grade_involution().transpose():
        bad.append("conj = grade∘transpose = transpose∘grade")
    for name, f in (("grade", CliffordElement.grade_involution), ("transpose", CliffordElement.transpose), ("conj", CliffordElement.conjugate)):
        if f(f(x)) != x:
            bad.append(f"{name} involutive")
    if sp.rank:
        mc = [m.coeff(1 << k) for k in range(sp.rank)]
        nc = [n.coeff(1 << k) for k in range(sp.rank)]
        if m * m != CliffordElement.scalar(sp, sp.eval_q(mc)):
            bad.append("m^2 = q(m)")
        if m * n + n * m != CliffordElement.scalar(sp, sp.eval_bilinear(mc, nc)):
            bad.append("mn + nm = (m,n)")
    return bad


def test_criterion_1_algebra_laws():
    start = time.perf_counter()
    failures = []
    for name, R in RINGS.items():
        rng = random.Random(1)
        pool = [random_space(R, r, rng) for r in range(MAX_RANK + 1) for _ in range(4)]
        density = 0.6 if "t" in name else 1.0
        for i in range(TRIPLES):
            sp = pool[i % len(pool)]
            x, y, z = (random_element(sp, rng, density) for _ in range(3))
            m, n = (random_vector(sp, rng) for _ in range(2))
            for law in _laws_hold(sp, x, y, z, m, n):
                failures.append(f"{name} rank {sp.rank}: {law}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < LIMIT_LAWS
    report(1, "algebra laws", ok, f"{TRIPLES} triples x {len(RINGS)} rings, {len(failures)} failures, {elapsed:.2f}s < {LIMIT_LAWS}s")
    assert not failures, failures[:5]
    assert elapsed < LIMIT_LAWS


def test_criterion_2_phi_exhaustive():
    start = time.perf_counter()
    inner = QuadraticSpace(GF2, [1])
    iso = PhiIso.from_inner(inner)
    M = iso.ambient
    elems = list(enumerate_clifford(M))
    images = [iso.phi(u) for u in elems]
    failures = []
    if len(elems) != 256 or len(set(images)) != 256:
        failures.append("phi not bijective")
    if set(images) != set(CliffordMatrix2(*e) for e in itertools.product(list(enumerate_clifford(inner)), repeat=4)):
        failures.append("phi not onto MAT_2(Cl(N))")
    for i, j in itertools.product(range(len(elems)), repeat=2):
        u, v = elems[i], elems[j]
        if iso.phi(u * v) != images[i] * images[j]:
            failures.append(f"phi({u} * {v}) not multiplicative")
        if iso.phi(u + v) != images[i] + images[j]:
            failures.append(f"phi({u} + {v}) not additive")
    for u, g in zip(elems, images):
        if iso.phi_inverse(g) != u:
            failures.append(f"phi^-1 phi({u}) != {u}")
        if iso.phi(u.grade_involution()) != g.grade() or iso.phi(u.transpose()) != g.transpose() or iso.phi(u.conjugate()) != g.conjugate():
            failures.append(f"translate identities fail at {u}")
        a, b, c, d = g.entries
        t = CliffordElement.transpose
        bar = CliffordElement.conjugate
        u_ubar = CliffordMatrix2(a * t(d) - b * t(c), -(a * t(b)) + b * t(a), c * t(d) - d * t(c), d * t(a) - c * t(b))
        if iso.phi(u * u.conjugate()) != u_ubar:
            failures.append(f"u conj(u) expansion fails at {u}")
        for r, s, k in itertools.product(GF2.elements(), repeat=3):
            n = CliffordElement.vector(inner, [k])
            m = CliffordElement.basis(M, 0).scale(r) + CliffordElement.basis(M, 1).scale(s) + iso.embed(n)
            expected = CliffordMatrix2(
                a * n * bar(d) - b * n * bar(c) + (b * bar(d)).scale(s) + (a * bar(c)).scale(r),
                a * n * bar(b) - b * n * bar(a) + (b * bar(b)).scale(s) + (a * bar(a)).scale(r),
                c * n * bar(d) - d * n * bar(c) + (d * bar(d)).scale(s) + (c * bar(c)).scale(r),
                c * n * bar(b) - d * n * bar(a) + (d * bar(b)).scale(s) + (c * bar(a)).scale(r),
            )
            if iso.phi(u * m * u.transpose()) != expected:
                failures.append(f"u m u^t expansion fails at u = {u}, m = {m}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < LIMIT_PHI
    report(2, "phi exhaustive over GF(2), rank 3", ok, f"{len(elems)} elements, {len(failures)} failures, {elapsed:.2f}s < {LIMIT_PHI}s")
    assert not failures, failures[:5]
    assert elapsed < LIMIT_PHI


def _run_configs(n, title, fn, configs, limit, expected_total=None):
    rows = []
    all_ok = True
    for R, q in configs:
        rep = fn(QuadraticSpace(R, q))
        secs = rep.duration_ms / 1000.0
        ok = rep.passed and not rep.witnesses and secs < limit
        if expected_total is not None:
            for key, want in expected_total(R, q).items():
                ok = ok and rep.counts.get(key) == want
        all_ok &= ok
        rows.append((R, q, rep, secs, ok))
    detail = "; ".join(f"{_label(R, q)}: {'ok' if ok else 'FAIL'} {secs:.2f}s, {len(rep.witnesses)} witnesses" for R, q, rep, secs, ok in rows)
    report(n, title, all_ok, f"{detail}; limit {limit}s each")
    return rows


def test_criterion_3_vahlen_iso():
    sizes = lambda R, q: {"Cl(M)": R.size() ** 8, "MAT_2(Cl(N))": R.size() ** 8}
    rows = _run_configs(3, "phi(NC) = GV, phi(Pin) = SV", verify_vahlen_iso, ORDINARY_CONFIGS, LIMIT_ISO, sizes)
    for R, q, rep, secs, ok in rows:
        assert rep.passed, rep.summary()
        assert rep.counts["Cl(M)"] == rep.counts["MAT_2(Cl(N))"] == R.size() ** 8
        assert secs < LIMIT_ISO


def test_criterion_4_vahlen_equiv():
    rows = _run_configs(4, "ordinary definitions 1, 2, 3 agree", verify_vahlen_equiv, ORDINARY_CONFIGS, LIMIT_EQUIV)
    for R, q, rep, secs, ok in rows:
        assert rep.checks.get("T(N) closed under transpose") is True, rep.summary()
        assert rep.passed, rep.summary()
        assert rep.counts["MAT_2(Cl(N))"] == R.size() ** 8
        assert secs < LIMIT_EQUIV


def test_criterion_5_paravector_iso():
    rows = _run_configs(5, "theta(NC_0) = GPV, theta(Spin) = SPV, GPV = GV_0", verify_paravector_iso, PARAVECTOR_CONFIGS, LIMIT_PARA_ISO)
    for R, q, rep, secs, ok in rows:
        assert rep.passed, rep.summary()
        assert rep.counts["GPV(L)"] == rep.counts["GV(L ⊥ <z>)_0"] == rep.counts["NC_0(M)"]
        assert secs < LIMIT_PARA_ISO


def test_criterion_6_paravector_equiv():
    rows = _run_configs(6, "paravector definitions 1, 2, 3 agree", verify_paravector_equiv, PARAVECTOR_CONFIGS, LIMIT_PARA_EQUIV)
    for R, q, rep, secs, ok in rows:
        assert rep.passed, rep.summary()
        assert secs < LIMIT_PARA_EQUIV


def test_criterion_7_group_structure():
    start = time.perf_counter()
    failures = []
    sizes = []
    for kind, configs in (("ordinary", ORDINARY_CONFIGS), ("paravector", PARAVECTOR_CONFIGS)):
        for R, q in configs:
            rep = verify_group_structure(QuadraticSpace(R, q), kind)
            big = "GV" if kind == "ordinary" else "GPV"
            sizes.append(f"{big} {_label(R, q)} = {rep.counts[big]}")
            if not rep.passed:
                failures.append(rep.summary())
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < LIMIT_GROUP
    report(7, "group structure", ok, f"{', '.join(sizes)}; {elapsed:.2f}s < {LIMIT_GROUP}s")
    assert not failures, failures[0]
    assert elapsed < LIMIT_GROUP


LEMMA_CHECKS = ("N(u) even", "N(conj u) = N(u)", "N(x) = N(conj x) on entries", "alpha^t gamma, beta^t delta in target")


def test_criterion_8_supporting_lemmas():
    seen = {k: 0 for k in LEMMA_CHECKS}
    witnesses = []
    runs = [(verify_vahlen_iso, c) for c in ORDINARY_CONFIGS] + [(verify_vahlen_equiv, c) for c in ORDINARY_CONFIGS]
    runs += [(verify_paravector_iso, c) for c in PARAVECTOR_CONFIGS] + [(verify_paravector_equiv, c) for c in PARAVECTOR_CONFIGS]
    for fn, (R, q) in runs:
        rep = fn(QuadraticSpace(R, q))
        for k in LEMMA_CHECKS:
            if k in rep.checks:
                seen[k] += 1
                if not rep.checks[k]:
                    witnesses += [w for w in rep.witnesses if w["check"] == k]
    ok = not witnesses and all(seen.values())
    report(8, "supporting lemmas on all members", ok, f"{len(witnesses)} witnesses over {len(runs)} runs")
    assert all(seen.values()), seen
    assert not witnesses, witnesses[:3]


def test_criterion_9_laurent_smoke():
    rep = smoke_laurent(samples=LAURENT_SAMPLES, seed=0)
    secs = rep.duration_ms / 1000.0
    fails = len(rep.witnesses)
    ok = rep.passed and secs < LIMIT_LAURENT
    report(9, "Laurent smoke test", ok, f"{LAURENT_SAMPLES} samples, {fails} failures, {secs:.2f}s < {LIMIT_LAURENT}s")
    assert rep.passed, rep.summary()
    assert secs < LIMIT_LAURENT


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
