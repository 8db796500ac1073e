"""Acceptance suite: one test per criterion, each printing a PASS line.

The heavy corpus report is computed once per module and shared; the
runtime-bounded criteria measure their own dedicated runs.
"""

import random
import time
from fractions import Fraction
from math import gcd

import pytest

from ringlab import adequacy, engine, lab
from ringlab.concrete import builtin_table_path, make_ring
from ringlab.reduction import (
    RingMatrix,
    comax_triangular_reduce,
    diagonal_reduce,
    verify_certificate,
)

from .oracles import adequacy_clauses_by_trial_division, minors_gcd_diagonal

SEED = lab.DEFAULT_SEED


@pytest.fixture(scope="module")
def full_report():
    return lab.run_corpus(lab.default_config())


def _check(report, cid):
    return next(r for r in report["results"] if r["id"] == cid)


def _exercised_rows(check):
    return [r for r in check["rings"] if not r.get("vacuous")]


def test_criterion_01_theorem25_sweep(monkeypatch):
    monkeypatch.delenv("RINGLAB_WORKERS", raising=False)
    start = time.perf_counter()
    report = lab.run_corpus(lab.default_config(checks=("T2.5",)))
    elapsed = time.perf_counter() - start
    check = _check(report, "T2.5")
    rows = _exercised_rows(check)
    mismatches = [r for r in rows if not r["verdict"]]
    assert rows, "no Bezout ring exercised the sweep"
    assert mismatches == [], mismatches
    for r in rows:
        assert len(set(r["detail"].values())) == 1, r
    assert elapsed < 120.0, f"sweep took {elapsed:.1f}s"
    print(f"[criterion 1] PASS: T2.5 equivalence on {len(rows)} Bezout rings, "
          f"0 mismatches, {elapsed:.1f}s < 120s")


def test_criterion_02_finite_bezout_rings_are_fza(full_report):
    check = _check(full_report, "E2.10")
    rows = _exercised_rows(check)
    failures = [r for r in rows if not r["verdict"]]
    assert rows and failures == []
    print(f"[criterion 2] PASS: every finite Bezout corpus ring "
          f"({len(rows)}) is feckly zero-adequate")


def test_criterion_03_reduction_battery(full_report):
    check = _check(full_report, "C2.6")
    rows = _exercised_rows(check)
    assert rows, "no feckly zero-adequate ring exercised the battery"
    total = 0
    for r in rows:
        assert r["verdict"], r
        card = make_ring(r["ring"]).cardinality
        ex = r["exercised"]
        if card <= 8:
            assert ex["exhaustive_2x2"] == card**4, r["ring"]
        if card <= 60:
            expected = ex["exhaustive_2x2"] + 1000 + 200
            assert ex["matrices"] == expected, r["ring"]
        total += ex["matrices"]
    print(f"[criterion 3] PASS: {total} matrices reduced with verified "
          f"certificates over {len(rows)} rings, 0 failures")


def test_criterion_04_smith_oracle_agreement():
    Z = make_ring("Z")
    rng = random.Random(f"{SEED}:smith-z")
    start = time.perf_counter()
    for _ in range(500):
        rows = [[rng.randint(-50, 50) for _ in range(4)] for _ in range(3)]
        A = RingMatrix.from_raw(Z, rows)
        cert = diagonal_reduce(Z, A)
        assert verify_certificate(Z, A, cert).verdict, rows
        want = minors_gcd_diagonal(rows)
        got = [d.value for d in cert.D.diagonal()]
        assert got == [abs(w) for w in want], (rows, got, want)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"{elapsed:.1f}s"
    print(f"[criterion 4] PASS: 500 random 3x4 integer matrices match the "
          f"minors-gcd oracle exactly, {elapsed:.1f}s < 30s")


def test_criterion_05_triangular_kernel_identity():
    Z = make_ring("Z")
    rng = random.Random(f"{SEED}:l37")
    done = 0
    while done < 10_000:
        a, b, c, r = (rng.randint(-100, 100) for _ in range(4))
        if gcd(b + a * r, c) != 1:
            continue
        done += 1
        cert = comax_triangular_reduce(Z, Z.make(a), Z.make(b), Z.make(c),
                                       Z.make(r))
        assert cert.D.to_strings() == [["1", "0"], ["0", str(-a * c)]]
    Z6 = make_ring("Zn:6")
    cache = engine.build_cache(Z6)
    n = cache.n
    valid = 0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for r in range(n):
                    w = cache.add[b * n + cache.mul[a * n + r]]
                    if not cache.comax[w][c]:
                        continue
                    valid += 1
                    els = [cache.element(v) for v in (a, b, c, r)]
                    cert = comax_triangular_reduce(Z6, *els)
                    want = [["1", "0"], ["0", str((-a * c) % 6)]]
                    assert cert.D.to_strings() == want, (a, b, c, r)
    print(f"[criterion 5] PASS: kernel identity diag(1, -a*c) on 10000 "
          f"integer tuples and {valid} exhaustive Z/6 tuples")


def test_criterion_06_adequate_factor_oracle():
    rng = random.Random(f"{SEED}:factor")
    start = time.perf_counter()
    for _ in range(100_000):
        c = rng.choice([-1, 1]) * rng.randint(1, 2000)
        a = rng.choice([-1, 1]) * rng.randint(0, 2000)
        fac = adequacy.adequate_factor_Z(c, a)
        assert adequacy_clauses_by_trial_division(c, a, fac.r, fac.s), (c, a)
    elapsed = time.perf_counter() - start
    assert elapsed < 20.0, f"{elapsed:.1f}s"
    print(f"[criterion 6] PASS: 100000 adequacy splits verified against "
          f"trial division, {elapsed:.1f}s < 20s")


def test_criterion_07_theorem_corpus_checks(full_report):
    wanted = ("T3.1", "P2.13", "C2.14", "C2.15", "T2.16", "C2.8", "C2.9",
              "C2.17", "L2.3", "L2.4")
    exercised_total = 0
    for cid in wanted:
        check = _check(full_report, cid)
        rows = _exercised_rows(check)
        assert rows, f"{cid}: nothing exercised the hypothesis"
        bad = [r for r in rows if not r["verdict"]]
        assert bad == [], (cid, bad)
        exercised_total += len(rows)
    # every witness payload re-verifies: the lab asserts this internally for
    # each predicate it computes; re-verify one ring's payloads here as well
    ring = make_ring("Zn:60")
    cache = engine.build_cache(ring)
    for pid in ("feckly_zero_adequate", "zero_adequate", "t216_cond2",
                "c217_cond3", "stable_range_1", "idempotents_lift_mod_J"):
        res = engine.ring_predicate(cache, pid)
        assert engine.reverify(cache, res), pid
    print(f"[criterion 7] PASS: {len(wanted)} corpus checks "
          f"({exercised_total} ring instances), all witnesses re-verified")


def test_criterion_08_zalpha_case_study():
    rep = adequacy.zalpha_case_study()
    assert rep["divides_in_ring"] is False
    q = rep["quotients"]
    assert (q["(1-x)"]["s_prime_image"], q["(1-x)"]["s_image"]) == (2, 4)
    assert q["(1-x)"]["divides"] and q["(1-x)"]["divisor_noninvertible"]
    assert (q["(1+x)"]["s_prime_image"], q["(1+x)"]["s_image"]) == (8, 2)
    assert not q["(1+x)"]["divides"]
    assert rep["sign_discrepancy"] is True
    print("[criterion 8] PASS: s' does not divide s in Z[x]/(x^2-1); "
          "evaluation at +1 gives (2, 4) with 2 | 4, at -1 gives (8, 2); "
          "sign discrepancy flagged")


def test_criterion_09_dual_integer_witnesses():
    ring = make_ring("dualint")
    rng = random.Random(f"{SEED}:e310")
    for _ in range(500):
        y = rng.choice([-1, 1]) * rng.randint(1, 500)
        b = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
        z = rng.choice([-1, 1]) * rng.randint(1, 500)
        cc = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
        f, h = ring.make((y, b)), ring.make((z, cc))
        wit = adequacy.adequate_witness_dualint(f, h)
        assert ring.mul(wit.s, wit.t) == f
        assert adequacy.dual_comax_certificate_holds(wit, h)
    print("[criterion 9] PASS: 500 dual-integer witnesses with exact product "
          "and verified comaximality certificates")


def test_criterion_10_negative_control(full_report):
    ring = make_ring(f"table:{builtin_table_path()}")
    cache = engine.build_cache(ring)
    res = engine.ring_predicate(cache, "bezout")
    assert res.verdict is False
    assert len(res.counterexample["ideal"]) == 4
    assert engine.reverify(cache, res)
    for cid in ("E2.10", "T2.5", "C2.8", "T2.16"):
        check = _check(full_report, cid)
        row = next(r for r in check["rings"] if r["ring"].startswith("table:"))
        assert row["vacuous"] is True and row["verdict"] is None
    print("[criterion 10] PASS: 8-element control ring reported non-Bezout "
          "with explicit non-principal ideal; vacuous in Bezout-hypothesis "
          "checks")
