import copy
import json

import numpy as np
import pytest

from linrel import GeneratorError, TrialConfig, gen_relation, is_hermitian, remark24_demo, replay, run_all, run_suite
from linrel.harness import SUITES, make_case, resolve_suite


def test_generator_hermitian_with_mulpart(rng):
    for _ in range(20):
        T = gen_relation(rng, 3, 3, hermitian=True, dim_mulpart=1)
        assert is_hermitian(T) and T.mulpart.dim == 1
        M, D = T.mulpart.basis, T.domain.basis
        if D.size:
            assert np.max(np.abs(M.conj().T @ D)) < 1e-10


def test_generator_constraints(rng):
    assert gen_relation(rng, 3, 2, dim_graph=0).graph.dim == 0
    T = gen_relation(rng, 4, 4)
    S = gen_relation(rng, 4, 4, domain_contains=T.domain, mulpart_within=T.mulpart)
    assert S.domain.contains_subspace(T.domain)
    assert T.mulpart.contains_subspace(S.mulpart)


@pytest.mark.parametrize("kw", [
    dict(n=2, m=2, dim_mulpart=3),
    dict(n=2, m=3, hermitian=True),
    dict(n=2, m=2, dim_domain=3),
    dict(n=2, m=2, dim_graph=5),
    dict(n=3, m=3, hermitian=True, dim_domain=2, dim_mulpart=2),
])
def test_generator_infeasible(rng, kw):
    n, m = kw.pop("n"), kw.pop("m")
    with pytest.raises(GeneratorError):
        gen_relation(rng, n, m, **kw)


def test_arens_suite_example():
    r = run_suite("arens", TrialConfig(seed=1, trials=500, dims=[(4, 4)]))
    assert r["passes"] == 500 and r["counterexample"] is None


def test_shift_fixture_attains_radius_bound():
    r = run_suite("thm3.1", TrialConfig(seed=0, trials=1, dims=[(2, 2)]))
    assert r["passes"] == 1 and r["worst_residual"] <= 1e-15


def test_difference_sum_suite_counts_negative_direction_as_pass():
    r = run_suite("prop2.1", TrialConfig(seed=5, trials=40, dims=[(3, 3)]))
    assert r["failures"] == 0


def test_every_suite_small_run():
    cfg = TrialConfig(seed=11, trials=3, dims=[(3, 3), (2, 4)], field="real")
    rep = run_all(cfg)
    assert rep["all_passed"]
    for sid, r in rep["suites"].items():
        assert r["passes"] + r["failures"] == r["trials"] == 6


def test_determinism():
    cfg = TrialConfig(seed=3, trials=4, dims=[(3, 3)])
    a, b = run_all(cfg), run_all(copy.deepcopy(cfg))
    a.pop("timing"), b.pop("timing")
    assert json.dumps(a) == json.dumps(b)


def test_counterexample_round_trip_and_replay():
    # a negative tolerance makes every trial fail, so a counterexample is embedded
    r = run_suite("thm2.3", TrialConfig(seed=2, trials=2, dims=[(3, 3)], tol=-1.0))
    assert r["failures"] == 2
    cx = json.loads(json.dumps(r["counterexample"]))
    residual, passed = replay(cx, tol=-1.0)
    assert not passed
    # decoding re-orthonormalizes the graph basis, so agreement is up to round-off
    assert residual == pytest.approx(cx["residual"], abs=1e-12)


def test_config_validation():
    with pytest.raises(ValueError):
        TrialConfig(trials=0)
    with pytest.raises(ValueError):
        TrialConfig(dims=[(9, 2)])
    with pytest.raises(KeyError):
        TrialConfig(suites=["nope"])
    assert resolve_suite("prop3.1–3.4") == "prop3.1-3.4"


def test_make_case_is_reproducible():
    a = make_case("thm2.4", 9, 0, 3, 3, "complex", 4)
    b = make_case("thm2.4", 9, 0, 3, 3, "complex", 4)
    assert np.array_equal(a["relations"]["T"].graph.basis, b["relations"]["T"].graph.basis)


@pytest.mark.parametrize("N", [2, 4, 16, 64])
def test_truncation_demo_rows(N):
    assert np.allclose(remark24_demo(N), (N, 0, 1, 0, N - 1), atol=1e-9)


def test_truncation_demo_rejects_small_order():
    with pytest.raises(ValueError):
        remark24_demo(1)


def test_suite_registry():
    assert len(SUITES) == 13
