"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]`` / ``[FAIL]`` line with the measured
quantity next to its pinned tolerance.
"""

import json
import subprocess
import sys
import time

import numpy as np

from linrel import (
    TrialConfig,
    c_constant,
    compress_to_domain,
    gen_relation,
    hermitian_report,
    is_hermitian,
    relation_norm,
    remark24_demo,
    run_suite,
)
from linrel.harness import check_case, make_case, nilpotent_shift
from linrel.norms import classify

SUITE_TOL = 1e-8
MIXED_DIMS = [(2, 2), (4, 4), (6, 3), (5, 7)]


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


def suite(name, trials, dims, tol=SUITE_TOL, seed=2024, field="complex"):
    return run_suite(name, TrialConfig(seed=seed, trials=trials, dims=dims, field=field, tol=tol))


def test_01_arens_reconstruction(capsys):
    t0 = time.perf_counter()
    r = suite("arens", 500, [(2, 2), (4, 4), (6, 3)])
    elapsed = time.perf_counter() - t0
    ok = r["passes"] == r["trials"] == 1500 and r["worst_residual"] <= 1e-8 and elapsed < 10.0
    report(capsys, 1, ok, f"{r['passes']}/{r['trials']} reconstructed, worst residual "
                          f"{r['worst_residual']:.2e} <= 1e-8, {elapsed:.2f}s < 10s")
    assert ok


def test_02_induced_operator_equalities(capsys):
    r = suite("thm2.4", 125, MIXED_DIMS, tol=1e-10)
    ok = r["passes"] == r["trials"] == 500
    report(capsys, 2, ok, f"{r['passes']}/{r['trials']} graph and point-norm equalities, "
                          f"worst {r['worst_residual']:.2e} <= 1e-10")
    assert ok


def test_03_norm_laws(capsys):
    r = suite("lemma2.5/2.6", 125, MIXED_DIMS)
    ok = r["passes"] == r["trials"] == 500
    report(capsys, 3, ok, f"{r['passes']}/{r['trials']} instances, worst slack use "
                          f"{r['worst_residual']:.2e} <= 1e-8 (10 representatives per point)")
    assert ok


def test_04_difference_sum_biconditional(capsys):
    pos_ok = neg_ok = 0
    trials = 500
    for t in range(trials):
        n, m = MIXED_DIMS[t % len(MIXED_DIMS)]
        case = make_case("prop2.1", 2024, t % len(MIXED_DIMS), n, m, "complex", t)
        _, parts = check_case("prop2.1", case)
        pos_ok += parts["positive_gap"] <= SUITE_TOL
        neg_ok += parts["negative_gap"] > SUITE_TOL
    ok = pos_ok == trials and neg_ok == trials
    report(capsys, 4, ok, f"equality holds in {pos_ok}/{trials} hypothesis pairs, "
                          f"fails in {neg_ok}/{trials} broken pairs")
    assert ok


def test_05_difference_inequalities(capsys):
    r = suite("thm2.3", 125, MIXED_DIMS)
    ok = r["passes"] == r["trials"] == 500
    report(capsys, 5, ok, f"{r['passes']}/{r['trials']} trials, worst {r['worst_residual']:.2e} <= 1e-8")
    assert ok


def test_06_norm_vs_c_constant(capsys):
    rng = np.random.default_rng(606)
    worst, compared = -np.inf, 0
    for k in range(500):
        n = 1 + k % 8
        T = compress_to_domain(gen_relation(rng, n, n, "complex"))
        if T.n == 0:
            continue
        compared += 1
        worst = max(worst, relation_norm(T).relation_norm - 2 * c_constant(T))
    r = suite("thm3.1", 500, [(4, 4)], tol=1e-6)
    F = nilpotent_shift()
    nF, cF = relation_norm(F).relation_norm, c_constant(F)
    M = np.array([[0.0, 1.0], [0.0, 0.0]])
    g = np.random.default_rng(6)
    Z = g.standard_normal((100_000, 2)) + 1j * g.standard_normal((100_000, 2))
    Z /= np.linalg.norm(Z, axis=1, keepdims=True)
    sampled = float(np.max(np.abs(np.einsum("ij,ij->i", Z.conj(), Z @ M.T))))
    ok = (worst <= 1e-6 and r["failures"] == 0 and abs(nF - 1) <= 1e-10
          and abs(cF - 0.5) <= 1e-8 and abs(cF - sampled) <= 1e-4 and abs(nF - 2 * cF) <= 1e-8)
    report(capsys, 6, ok, f"max(||T|| - 2C) = {worst:.2e} <= 1e-6 over {compared} nonempty compressed relations, "
                          f"suite {r['passes']}/{r['trials']}; shift ||T|| = {nF:.12f}, C = {cF:.12f}, "
                          f"sampled C = {sampled:.6f}")
    assert ok


def test_07_hermitian_suite(capsys):
    rng = np.random.default_rng(707)
    herm = perp = norm_ok = class_ok = 0
    worst_norm = 0.0
    trials = 500
    for k in range(trials):
        n = 1 + k % 8
        field = "complex" if k % 2 else "real"
        # the operator part keeps D(T) invariant: the finite-dimensional dense-domain case
        T = gen_relation(rng, n, n, field, hermitian=True, range_in_domain=True)
        herm += is_hermitian(T)
        D, M = T.domain.basis, T.mulpart.basis
        perp += (not (D.size and M.size)) or float(np.max(np.abs(M.conj().T @ D))) <= 1e-10
        rep = hermitian_report(T)
        diff = abs(relation_norm(T).relation_norm - max(abs(rep.lower_bound), abs(rep.upper_bound)))
        worst_norm = max(worst_norm, diff)
        norm_ok += diff <= 1e-8
        eigs = np.asarray(rep.compression_eigs)
        band = T.tol * max(1.0, float(np.max(np.abs(eigs)))) if eigs.size else 0.0
        class_ok += rep.klass == classify(eigs, band) and (
            rep.klass != "positive" or eigs.min() > 0) and (rep.klass != "negative" or eigs.max() < 0)
    r = suite("prop3.1-3.4", 125, MIXED_DIMS)
    r2 = suite("thm3.2-3.4", 125, MIXED_DIMS)
    ok = herm == perp == norm_ok == class_ok == trials and r["failures"] == 0 and r2["failures"] == 0
    report(capsys, 7, ok, f"hermitian {herm}/{trials}, D(T) perp T(0) {perp}/{trials}, "
                          f"norm = max|eig| {norm_ok}/{trials} (worst {worst_norm:.2e} <= 1e-8), "
                          f"class {class_ok}/{trials}; structure suites {r['passes']}+{r2['passes']}/1000")
    assert ok


def test_08_relative_bounds(capsys):
    r61 = suite("thm6.1", 200, [(4, 4)])
    r36 = suite("thm3.6", 200, [(4, 4)])
    ok = r61["passes"] == r61["trials"] == 200 and r36["passes"] == r36["trials"] == 200
    report(capsys, 8, ok, f"T-bound 0 and (||S||, 0) feasible in {r61['passes']}/200; "
                          f"relation vs induced verdicts identical in {r36['passes']}/200")
    assert ok


def test_09_sum_inequalities(capsys):
    r = suite("thm6.3-ineq", 50, MIXED_DIMS)
    ok = r["passes"] == r["trials"] == 200
    report(capsys, 9, ok, f"{r['passes']}/{r['trials']} trials, worst {r['worst_residual']:.2e} <= 1e-8")
    assert ok


def test_10_truncation_demo(capsys):
    t0 = time.perf_counter()
    rows = {N: remark24_demo(N) for N in (4, 16, 64)}
    elapsed = time.perf_counter() - t0
    err = max(abs(v - e) for N, row in rows.items() for v, e in zip(row, (N, 0, 1, 0, N - 1)))
    ok = err <= 1e-9 and elapsed < 5.0
    report(capsys, 10, ok, f"max deviation from (N, 0, 1, 0, N-1) = {err:.1e} <= 1e-9, {elapsed:.2f}s < 5s")
    assert ok


def _verify_bytes(tmp_path, tag):
    out = tmp_path / f"{tag}.json"
    subprocess.run([sys.executable, "-m", "linrel.cli", "verify", "--suite", "all", "--seed", "42",
                    "--out", str(out)], check=True, capture_output=True)
    data = out.read_bytes()
    # timing is the last key of the report
    return data[: data.index(b'"timing"')], json.loads(data)


def test_11_determinism(tmp_path, capsys):
    a, rep = _verify_bytes(tmp_path, "a")
    b, _ = _verify_bytes(tmp_path, "b")
    ok = a == b and rep["all_passed"]
    report(capsys, 11, ok, f"two runs byte-identical outside timing ({len(a)} bytes), all suites passed")
    assert ok
