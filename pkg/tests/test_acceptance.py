"""Acceptance suite: one PASS/FAIL line per criterion 1-9.

Every comparison is exact (tolerance 0).  Runtime budgets are measured with
the cohomology caches cleared so each criterion pays for its own rings.
Run ``python tests/test_acceptance.py`` for the bare summary; under pytest
the lines are repeated in the terminal summary.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
import oracles  # noqa: E402
from symorient import cli, cohomology, decide  # noqa: E402
from symorient.charclass import (  # noqa: E402
    l_polynomials,
    lgenus_signature,
    pontrjagin_classes,
    pontrjagin_number,
    shanahan_signature,
)
from symorient.classification import Classification, Justification, Reason, Verdict  # noqa: E402
from symorient.cohomology import euler_characteristic, hirsch_poincare, integrate, presentation  # noqa: E402
from symorient.polyring import PolyRing, QuotientRing, buchberger, normal_form  # noqa: E402
from symorient.rootsys import build_root_system, classify_type4, simple_types  # noqa: E402
from symorient.spaces import AIII, BDI, CI, CII, DIII, FII, G2SO4, SpaceId  # noqa: E402

RESULTS: dict[int, str] = {}


def _cold():
    cohomology.presentation.cache_clear()
    cohomology._uncalibrated.cache_clear()


def _record(number, title, ok, detail, elapsed, budget):
    within = elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    line = f"[{status}] {number}. {title}: {detail}; tolerance 0; {elapsed:.2f}s (budget {budget:g}s)"
    RESULTS[number] = line
    print(line)
    return ok and within, line


# ----------------------------------------------------------------------------


def criterion_1():
    t = time.perf_counter()
    sweep = decide.default_sweep()
    bad = [s for s in sweep if decide.classify(s).verdict is not decide.golden_verdict(s)[0]]
    el = time.perf_counter() - t
    return _record(1, "Classification table reproduction", not bad, f"{len(sweep) - len(bad)}/{len(sweep)} rows match", el, 1)


def criterion_2():
    t = time.perf_counter()
    bad = []
    types = simple_types(8)
    for label, rank in types:
        rs = build_root_system(label, rank)
        expect_or = rs.dimension % 2 == 1 or (label == "A" and (rank + 1) % 4 in (0, 3)) or (label == "D" and rank >= 4)
        got_or = classify_type4(label, rank).verdict is Verdict.OR
        if got_or != expect_or:
            bad.append(f"{label}{rank}")
    el = time.perf_counter() - t
    return _record(2, "Type IV theorem", not bad, f"{len(types) - len(bad)}/{len(types)} simple types agree", el, 1)


def criterion_3():
    _cold()
    t = time.perf_counter()
    fails = []
    n_a = n_b = 0
    for p in range(1, 7):
        for q in range(1, 7):
            if p + q <= 7 and (p * q) % 2 == 0:
                n_a += 1
                if abs(lgenus_signature(AIII(p, q))) != comb((p + q) // 2, p // 2):
                    fails.append(f"AIII({p},{q})")
    for p in range(2, 8, 2):
        for q in range(2, 8, 2):
            if 4 < p + q <= 8:
                n_b += 1
                got, want = abs(lgenus_signature(BDI(p, q))), shanahan_signature(p, q)
                if got != want:
                    fails.append(f"BDI({p},{q}) |sig|={got} quoted={want}")
    g2 = abs(lgenus_signature(G2SO4))
    if g2 != 1:
        fails.append(f"G2/SO(4) |sig|={g2}")
    el = time.perf_counter() - t
    detail = f"(a) AIII {n_a} cases, (b) BDI {n_b} cases, (c) G2/SO(4)"
    detail += "; mismatches: " + ", ".join(fails) if fails else "; all equal"
    return _record(3, "Signature cross-validation", not fails, detail, el, 120)


def criterion_4():
    _cold()
    t = time.perf_counter()
    bad = []
    for p in range(1, 4):
        for q in range(1, 4):
            zero = lgenus_signature(CII(p, q)) == 0
            if zero != (p % 2 == 1 and q % 2 == 1):
                bad.append(f"CII({p},{q})")
    el = time.perf_counter() - t
    return _record(4, "Quaternionic zero criterion", not bad, f"{9 - len(bad)}/9 spaces agree", el, 120)


def criterion_5():
    _cold()
    t = time.perf_counter()
    bad = []
    numbers = {}
    for p in range(2, 8):
        P = presentation(DIII(p))
        classes = pontrjagin_classes(P)
        p1 = classes[1] if len(classes) > 1 else P.quotient.zero()
        s1, s2 = P.gen("s1"), P.gen("s2")
        if not (p1 == 2 * s2 == s1 * s1):
            bad.append(f"identity p={p}")
        d = p * (p - 1) // 2
        if p <= 6 and d % 2 == 0:
            numbers[p] = pontrjagin_number(P, [1] * (d // 2))
            if numbers[p] == 0:
                bad.append(f"p1^{d // 2} p={p}")
    el = time.perf_counter() - t
    detail = "p1 = 2 s2 = s1^2 for p=2..7; " + ", ".join(f"p1^{p * (p - 1) // 4}[DIII({p})]={v}" for p, v in numbers.items())
    return _record(5, "DIII p1 identity", not bad, detail, el, 60)


def criterion_6():
    _cold()
    t = time.perf_counter()
    vals = {(p, q): pontrjagin_number(CII(p, q), [1] * (p * q)) for p, q in ((1, 2), (1, 3), (2, 3))}
    el = time.perf_counter() - t
    ok = all(v != 0 for v in vals.values())
    detail = ", ".join(f"p1^{p * q}[HG({p + q},{p})]={v}" for (p, q), v in vals.items())
    return _record(6, "Quaternionic non-vanishing", ok, detail, el, 120)


def criterion_7():
    _cold()
    t = time.perf_counter()
    g2_poly = hirsch_poincare(G2SO4)
    f4_poly = hirsch_poincare(FII)
    p2 = pontrjagin_number(G2SO4, [2])
    chi = euler_characteristic(G2SO4)
    p4 = pontrjagin_number(FII, [4])
    el = time.perf_counter() - t
    ok = (
        g2_poly == tuple(1 if k in (0, 4, 8) else 0 for k in range(9))
        and f4_poly == tuple(1 if k in (0, 8, 16) else 0 for k in range(17))
        and p2 != 0
        and chi == 3
        and p4 != 0
    )
    detail = f"Poincare G2/SO(4)=1+t^4+t^8, F4/Spin(9)=1+t^8+t^16; p2={p2}; chi={chi}; p4[F4/Spin(9)]={p4}"
    return _record(7, "Exceptional spaces", ok, detail, el, 120)


def _property_spaces():
    out = [G2SO4, FII]
    for p in range(1, 7):
        for q in range(1, 7):
            out += [AIII(p, q), CII(p, q)]
            if (p % 2 == 0 or q % 2 == 0) and p + q >= 3:
                out.append(BDI(p, q))
        if p >= 2:
            out.append(DIII(p))
        out.append(CI(p))
    return out


def _random_ring_checks(rng, trials=60):
    R = PolyRing(["x", "y", "z"], [1, 1, 1])

    def rand_poly(degree=None):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            if degree is None:
                e = tuple(rng.randint(0, 3) for _ in range(3))
            else:
                a = rng.randint(0, degree)
                b = rng.randint(0, degree - a)
                e = (a, b, degree - a - b)
            terms[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        return R.from_terms(terms)

    for _ in range(trials):
        f, g, h = rand_poly(), rand_poly(), rand_poly()
        if not (f * (g + h) == f * g + f * h and (f * g) * h == f * (g * h) and f + g == g + f and f * g == g * f):
            return False
        gens = [p for p in (rand_poly(rng.randint(1, 3)) for _ in range(rng.randint(1, 3))) if not p.is_zero()]
        if not gens:
            continue
        gb = buchberger(gens)
        r = normal_form(f, gb)
        if normal_form(r, gb) != r or not gb.contains(f - r):
            return False
    x, y, z = R.gens
    Q = QuotientRing(buchberger([x**2, y**2, z**2]))
    for _ in range(trials):
        f, g = rand_poly(), rand_poly()
        if Q(f * g) != Q(f) * Q(g):
            return False
    return True


def criterion_8():
    _cold()
    t = time.perf_counter()
    parts = {}
    spaces = _property_spaces()
    ok_a = True
    for s in spaces:
        b = hirsch_poincare(s)
        ok_a &= b == b[::-1] and sum(b) == oracles.weyl_ratio(s)
    parts["a"] = (ok_a, f"{len(spaces)} spaces palindromic with Betti sum |W_U|/|W_K|")
    cases = [(p, q) for p in range(1, 7) for q in range(1, 7) if p + q <= 7]
    ok_b = True
    for p, q in cases:
        P = presentation(AIII(p, q))
        ok_b &= integrate(P, P.gen("s1") ** (p * q)) == oracles.rectangle_tableaux(p, q)
    parts["b"] = (ok_b, f"{len(cases)} Grassmannians match hook-length counts")
    ok_c = True
    for n, L in enumerate(l_polynomials(3), start=1):
        got = {}
        for exp, c in L.terms.items():
            got[tuple(sorted((k for k, e in enumerate(exp, start=1) for _ in range(e)), reverse=True))] = c
        ok_c &= got == oracles.L_REFERENCE[n]
    parts["c"] = (ok_c, "L1, L2, L3 coefficients")
    parts["d"] = (_random_ring_checks(random.Random(20241018)), "randomized ring axioms and normal-form idempotence")
    el = time.perf_counter() - t
    ok = all(v[0] for v in parts.values())
    detail = "; ".join(f"({k}) {'ok' if v[0] else 'FAILED'}: {v[1]}" for k, v in parts.items())
    return _record(8, "Property suites", ok, detail, el, 300)


def criterion_9():
    t = time.perf_counter()
    OR, OP = Verdict.OR, Verdict.OP
    ds_ok = (
        decide.degree_set(3, OR).resolutions() == [frozenset({0, 3, -3})]
        and decide.degree_set(0, OP).resolutions() == [frozenset({0})]
        and decide.degree_set(2, OP).resolutions() == [frozenset({0, 2}), frozenset({0, -2})]
    )
    idx_ok = (
        decide.minimal_index_candidate(-6, -2) == 3
        and decide.minimal_index_candidate(4, 4) == 1
        and decide.minimal_index_candidate(-3, -2) == 0
    )
    import contextlib
    import io

    caught = []
    for family, rule in list(decide.RULES.items()):

        def inverted(space, rule=rule):
            c = rule(space)
            if c.verdict is OR:
                return Classification(OP, Justification(Reason.NONZERO_SIGNATURE))
            return Classification(OR, Justification(Reason.ODD_DIMENSION))

        decide.RULES[family] = inverted
        try:
            with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
                caught.append(cli.main(["table1", "--golden"]) == 1)
        finally:
            decide.RULES[family] = rule
    with contextlib.redirect_stdout(io.StringIO()):
        clean = cli.main(["table1", "--golden"]) == 0
    el = time.perf_counter() - t
    ok = ds_ok and idx_ok and all(caught) and clean
    detail = (
        f"degree_set examples {'ok' if ds_ok else 'FAILED'}; minimal_index examples {'ok' if idx_ok else 'FAILED'}; "
        f"{sum(caught)}/{len(caught)} inverted rules exit 1; unmodified run exits {'0' if clean else 'nonzero'}"
    )
    return _record(9, "Degree sets, index arithmetic, mutation", ok, detail, el, 60)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_acceptance(criterion):
    ok, line = criterion()
    assert ok, line


if __name__ == "__main__":
    results = [c()[0] for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
