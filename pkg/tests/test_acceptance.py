"""Acceptance gate: one check per criterion, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion
is printed in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import time

import numpy as np
import pytest

from coptensor.bench import BenchSpec, run_bench
from coptensor.detector import DetectorConfig, Status, detect
from coptensor.hypergraph import UniformHypergraph, adjacency_tensor, bound_tensor, brute_force_coclique
from coptensor.instances import SEXTICS, eta_identity_minus_ones
from coptensor.physics import QuarticCouplings, analytic_stationary, vacuum_stability
from coptensor.spectral import DEFAULT_POWER, spectral_radius
from coptensor.tensor import SymTensor, congruence, eval_contraction, eval_form, eval_form_exact, identity, ones
from oracles import simplex_min, sym_random
from reference_tables import TABLE1, TABLE2_SIZES, TABLE3, TABLE4, negative_diagonal, parse_rho

WORD = {Status.COPOSITIVE: "Yes", Status.NOT_COPOSITIVE: "No", Status.UNDECIDED: "Undecided"}
RESULTS = {}


def record(name, ok, detail):
    RESULTS[name] = (ok, detail)
    return ok


def criterion_1():
    t0 = time.perf_counter()
    bad, rows = [], []
    for m, n, eta, want, _ in TABLE1:
        v = detect(eta_identity_minus_ones(eta, m, n))
        got = WORD[v.status]
        rows.append(f"eta={eta:g}:{got}/{v.iterations}")
        if got != want:
            bad.append(f"(m={m},n={n},eta={eta:g}) want {want} got {got} at {v.iterations} it")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        bad.append(f"runtime {elapsed:.2f}s >= 1s")
    detail = "; ".join(bad) if bad else " ".join(rows)
    return record("1 eta*I - E verdicts", not bad, f"{detail} [{elapsed:.2f}s]")


def criterion_2():
    got = []
    for m, n, eta in [(3, 3, 9.01), (4, 4, 74.0)]:
        v = detect(eta_identity_minus_ones(eta, m, n))
        got.append((eta, v.status, v.iterations))
    ok = all(s is Status.COPOSITIVE and it == 1 for _, s, it in got)
    return record("2 root certificates", ok, " ".join(f"eta={e:g}:{WORD[s]}/{it}" for e, s, it in got))


def criterion_3(seed=2017):
    t0 = time.perf_counter()
    bad = []
    for m, n in TABLE2_SIZES:
        for off in (-1.0, 1.0, 10.0):
            r = run_bench(BenchSpec(m, n, off, 10, seed), timing=False)
            if off < 0:
                good = r["n_no"] == 10
            else:
                good = r["n_yes"] == 10 and r["min_it"] == r["max_it"] == 1
            if not good:
                bad.append(f"(m={m},n={n},off={off:+g}) yes={r['n_yes']} no={r['n_no']} it={r['min_it']}..{r['max_it']}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 30:
        bad.append(f"runtime {elapsed:.1f}s >= 30s")
    return record("3 random benchmark protocol", not bad, ("; ".join(bad) or f"15 cells ok, seed {seed}") + f" [{elapsed:.1f}s]")


def criterion_4():
    t0 = time.perf_counter()
    cfg = DetectorConfig(max_iterations=500)
    bad, rows = [], []
    for name, make in SEXTICS.items():
        A = make()
        v = detect(A, cfg)
        rows.append(f"{name}:bare={WORD[v.status]}")
        if v.status is Status.NOT_COPOSITIVE:
            bad.append(f"{name} bare returned No")
        for sigma in TABLE3[name]:
            v = detect(A + sigma * ones(6, 3), cfg)
            rows.append(f"{sigma:g}={WORD[v.status]}/{v.iterations}")
            if v.status is not Status.COPOSITIVE:
                bad.append(f"{name}+{sigma:g}E: {WORD[v.status]}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 60:
        bad.append(f"runtime {elapsed:.1f}s >= 60s")
    return record("4 perturbed sextics", not bad, ("; ".join(bad) or " ".join(rows)) + f" [{elapsed:.1f}s]")


def criterion_5():
    t0 = time.perf_counter()
    bad = []
    for m, k, omega in [(3, 2, 2), (4, 2, 3)]:
        G = UniformHypergraph.hyperstar(m)
        T = bound_tensor(G, k)
        v = detect(T)
        if v.status is not Status.NOT_COPOSITIVE:
            bad.append(f"m={m}: {WORD[v.status]}")
        elif not (np.all(v.witness >= 0) and eval_form_exact(T, v.witness) < 0):
            bad.append(f"m={m}: witness does not certify")
        w = brute_force_coclique(G)
        if w != omega:
            bad.append(f"m={m}: coclique {w} != {omega}")
    G3 = UniformHypergraph.hyperstar(3)
    if eval_form(bound_tensor(G3, 2), [1, 1, 1]) != pytest.approx(-3.0):
        bad.append("f(1,1,1) != -3")
    elapsed = time.perf_counter() - t0
    if elapsed >= 5:
        bad.append(f"runtime {elapsed:.1f}s >= 5s")
    return record("5 hypergraph examples", not bad, ("; ".join(bad) or "both hyper-stars No, omega 2 and 3") + f" [{elapsed:.2f}s]")


def criterion_6():
    bad = []
    for i, (c, h1, h2, s, rho_text, vmin, _, _) in enumerate(TABLE4, 1):
        a = analytic_stationary(QuarticCouplings(*c))
        rho, imag = parse_rho(rho_text)
        diffs = [abs(a.h1_sq - h1), abs(a.h2_sq - h2), abs(a.s_sq - s), abs(a.rho - rho), abs(a.v_min - vmin)]
        if max(diffs) > 0.01 + 1e-12 or a.rho_imaginary != imag:
            bad.append(f"row {i}")
    return record("6 analytic stationary columns", not bad, f"{len(TABLE4) - len(bad)}/{len(TABLE4)} rows" + (f" off: {bad}" if bad else ""))


def criterion_7():
    t0 = time.perf_counter()
    matches, mism, diag_bad = 0, [], []
    for i, (c, *_, want) in enumerate(TABLE4, 1):
        rep = vacuum_stability(QuarticCouplings(*c), mode="paper_listing")
        if rep.result == want:
            matches += 1
        else:
            mism.append(f"row {i}: want {want} got {rep.result}")
        if negative_diagonal(c) and not (rep.result == "No" and rep.max_iterations == 1):
            diag_bad.append(f"row {i}")
    elapsed = time.perf_counter() - t0
    ok = matches >= 21 and not diag_bad and elapsed < 60
    detail = f"{matches}/{len(TABLE4)} match"
    if mism:
        detail += "; mismatches " + ", ".join(mism)
    if diag_bad:
        detail += "; negative-diagonal rows off: " + ", ".join(diag_bad)
    return record("7 vacuum scan results", ok, detail + f" [{elapsed:.1f}s]")


def _suite_a_b(rng, count=200):
    cfg = DetectorConfig(max_iterations=200)
    bad = []
    tally = {s: 0 for s in Status}
    prop_checked = 0
    for k in range(count):
        m = 3 if k % 2 == 0 else 4
        n = 2 + (k // 2) % 2
        A = SymTensor(sym_random(rng, m, n)) + rng.uniform(0, 0.3 * n ** (m - 1)) * identity(m, n)
        v = detect(A, cfg)
        tally[v.status] += 1
        if v.status is Status.NOT_COPOSITIVE:
            w = v.witness
            if not (np.all(w >= 0) and eval_form_exact(A, w) < 0):
                bad.append(f"instance {k}: bad witness")
        elif v.status is Status.COPOSITIVE:
            lo = simplex_min(A.values)
            if lo < -1e-6:
                bad.append(f"instance {k}: Copositive but grid min {lo:.3g}")
            prop_checked += 1
            if 2 * v.stats.simplices != v.iterations + 1:
                bad.append(f"instance {k}: d={v.stats.simplices}, k={v.iterations}")
    return bad, tally, prop_checked


def _suite_c(rng, count=100):
    tol = DEFAULT_POWER.tol
    bad = []
    for k in range(count):
        m, n = [(3, 2), (3, 3), (4, 3), (4, 2), (6, 2)][k % 5]
        B = SymTensor(sym_random(rng, m, n, 0, 1))
        r = spectral_radius(B)
        C = B + SymTensor(sym_random(rng, m, n, 0, 1)) * rng.uniform()
        if spectral_radius(C).rho < r.rho - 2 * tol:
            bad.append(f"{k}: monotonicity")
        s, c = rng.uniform(0.01, 10), rng.uniform(0.1, 10)
        if abs(spectral_radius(B + s * identity(m, n)).rho - r.rho - s) > 2 * tol:
            bad.append(f"{k}: shift")
        if abs(spectral_radius(c * B).rho - c * r.rho) > 2 * tol * c * r.rho:
            bad.append(f"{k}: scale")
        Bp = SymTensor._trusted(B.values + DEFAULT_POWER.perturbation)
        res = np.abs(eval_contraction(Bp, r.vector) - r.rho * r.vector ** (m - 1)).max()
        if not r.converged or res > tol * r.rho:
            bad.append(f"{k}: residual {res:.2g}")
    return bad


def _suite_d(rng, count=100):
    bad = []
    for k in range(count):
        m, n = [(3, 2), (3, 3), (4, 3), (4, 4)][k % 4]
        A = SymTensor(sym_random(rng, m, n))
        V = rng.uniform(size=(n, n))
        xb = rng.uniform(size=n)
        got, want = eval_form(congruence(A, V), xb), eval_form(A, V @ xb)
        if abs(got - want) > 1e-9 * max(1.0, abs(want)):
            bad.append(f"{k}: {got} vs {want}")
    return bad


def criterion_8(seed=8):
    rng = np.random.default_rng(seed)
    t0 = time.perf_counter()
    bad_ab, tally, n_cop = _suite_a_b(rng)
    bad_c = _suite_c(rng)
    bad_d = _suite_d(rng)
    bad = bad_ab + bad_c + bad_d
    detail = (
        f"(a) yes={tally[Status.COPOSITIVE]} no={tally[Status.NOT_COPOSITIVE]} undecided={tally[Status.UNDECIDED]}"
        f" (b) {n_cop} copositive runs (c) 100 spectral (d) 100 pullbacks"
    )
    if bad:
        detail += "; failures: " + ", ".join(bad[:5])
    return record("8 property suites", not bad, detail + f" [{time.perf_counter() - t0:.1f}s]")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_criterion(criterion):
    ok = criterion()
    name = list(RESULTS)[-1]
    assert ok, f"{name}: {RESULTS[name][1]}"


def summary_lines():
    return [f"{'PASS' if ok else 'FAIL'}  {name}: {detail}" for name, (ok, detail) in RESULTS.items()]


if __name__ == "__main__":
    for crit in CRITERIA:
        crit()
    print("\n".join(summary_lines()))
