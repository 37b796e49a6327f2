"""Acceptance gate: one test per criterion, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v`` (or execute this file); the
terminal summary lists one pass/fail line per criterion.
"""

import sys
import time

import numpy as np
import pytest

from qudit_polar.clifford import (
    build_coset_table,
    clifford_group_order,
    clifford_to_matrix,
    count_anticommuting_pairs,
    enumerate_symplectic,
    verify_swap_fixed_example,
)
from qudit_polar.codec import CodeInstance, code_for_rate, encode, frame_error_rate, sc_decode
from qudit_polar.ditmath import group_tables
from qudit_polar.polar import (
    dephasing_probs,
    depolarizing_for_coherent_info,
    depolarizing_probs,
    good_R_coset_average_check,
    make_tree,
    monte_carlo_metrics,
    polarization_statistics,
    sample_errors,
    synthesize_exact,
)
from qudit_polar.qchannel import (
    check_reliability_bounds,
    coherent_info,
    combine_and_split,
    pauli_channel,
    pauli_coherent_info,
    pauli_renyi_bhattacharyya,
    renyi_bhattacharyya,
)
from qudit_polar.twirl import (
    analytic_on_inputs,
    apply_pauli_channel,
    clifford_twirl_analytic,
    numeric_twirl,
    pauli_basis_inputs,
    pauli_twirl_bruteforce,
    pauli_twirl_gamma,
    projective_clifford_unitaries,
    random_bilinear,
    symplectic_twirl_gamma,
    two_design_audit,
    unitary_2design_lower_bound,
)

from oracles import sequential_ml


def random_state(D, rng):
    G = rng.normal(size=(D, D)) + 1j * rng.normal(size=(D, D))
    rho = G @ G.conj().T
    return rho / np.trace(rho)


def point_mass(d):
    a = np.zeros((d, d))
    a[0, 0] = 1
    return a


@pytest.mark.criterion(1)
def test_group_counts(criterion):
    t0 = time.perf_counter()
    got = {}
    for d in (2, 3):
        for n in (1, 2):
            sp = sum(1 for _ in enumerate_symplectic(n, d))
            got[(d, n)] = sp * d ** (2 * n)
    elapsed = time.perf_counter() - t0
    expected = {(2, 1): 24, (2, 2): 11520, (3, 1): 216, (3, 2): 4_199_040}
    formula_ok = all(clifford_group_order(n, d) == v for (d, n), v in expected.items())
    ok = got == expected and formula_ok and got[(3, 2)] // 81 == 51_840 and elapsed < 60
    criterion(ok, f"totals {sorted(got.values())}, {elapsed:.1f} s")
    assert ok


@pytest.mark.criterion(2)
def test_anticommuting_pairs(criterion):
    t0 = time.perf_counter()
    counts = {d: count_anticommuting_pairs(d) for d in (2, 3, 5, 7)}
    elapsed = time.perf_counter() - t0
    ok = all(c == d * (d * d - 1) for d, c in counts.items()) and elapsed < 1
    criterion(ok, f"{counts}, {elapsed:.3f} s")
    assert ok


@pytest.mark.criterion(3)
def test_coset_structure(criterion):
    t0 = time.perf_counter()
    t2, t3 = build_coset_table(2), build_coset_table(3)
    elapsed = time.perf_counter() - t0
    sizes = (len(t2), len(t2.reduced_ids()), len(t3), len(t3.reduced_ids()))
    fixed = t2.swap_fixed_points()
    ok = sizes == (20, 18, 90, 88) and fixed == [] and elapsed < 300
    criterion(ok, f"cosets/reduced {sizes}, d=2 swap fixed points {len(fixed)}, {elapsed:.1f} s")
    assert ok


@pytest.mark.criterion(4)
def test_d5_swap_fixed_instance(criterion):
    t0 = time.perf_counter()
    holds = verify_swap_fixed_example()
    elapsed = time.perf_counter() - t0
    ok = holds and elapsed < 1
    criterion(ok, f"label permutations agree: {holds}, {elapsed:.3f} s")
    assert ok


@pytest.mark.criterion(5)
def test_two_design_audit(criterion):
    t0 = time.perf_counter()
    full = two_design_audit(projective_clifford_unitaries(2), 2, n_maps=20, seed=5, set_name="full")
    t2 = build_coset_table(2)
    U = np.stack([clifford_to_matrix(c) for c in t2.reduced()])
    red = two_design_audit(U, 2, n_maps=20, seed=5, set_name="reduced")
    elapsed = time.perf_counter() - t0
    bound = unitary_2design_lower_bound(4)
    ok = (full["max_residual"] < 1e-9 and full["pass"] and not red["residual_pass"]
          and red["set_size"] < bound == 226 and red["bound_d8"] == "fail" and elapsed < 600)
    criterion(ok, f"full residual {full['max_residual']:.1e}, reduced residual {red['max_residual']:.2f} "
                  f"with {red['set_size']} < {bound} elements")
    assert ok


@pytest.mark.criterion(6)
def test_twirling_formulas(criterion):
    t0 = time.perf_counter()
    worst = {"pauli": 0.0, "clifford": 0.0, "identities": 0.0}
    full2 = projective_clifford_unitaries(2)
    for d, count in ((2, 50), (3, 10)):
        rng = np.random.default_rng(600 + d)
        P = pauli_basis_inputs(d)
        for _ in range(count):
            m = random_bilinear(d, rng)
            g = pauli_twirl_gamma(m)
            for rho in P:
                worst["pauli"] = max(worst["pauli"], np.abs(apply_pauli_channel(g, rho, d)
                                                            - pauli_twirl_bruteforce(m, rho)).max())
            if d == 2:
                twirled = numeric_twirl(m, full2)
            else:
                # the Pauli average is exact above; the symplectic average runs on labels
                gs = symplectic_twirl_gamma(g, d)
                twirled = np.stack([apply_pauli_channel(gs, rho, d) for rho in P])
            worst["clifford"] = max(worst["clifford"], np.abs(twirled - analytic_on_inputs(m)).max())
            _, res = clifford_twirl_analytic(m, random_state(d * d, rng))
            worst["identities"] = max(worst["identities"], max(res.values()))
    elapsed = time.perf_counter() - t0
    ok = max(worst.values()) < 1e-10 and elapsed < 300
    criterion(ok, ", ".join(f"{k} {v:.1e}" for k, v in worst.items()) + f", {elapsed:.1f} s")
    assert ok


@pytest.mark.criterion(7)
def test_good_channel_coset_average(criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for d, count in ((2, 5), (3, 3)):
        table = build_coset_table(d)
        rng = np.random.default_rng(700 + d)
        for _ in range(count):
            worst = max(worst, good_R_coset_average_check(rng.dirichlet(np.ones(d * d)).reshape(d, d),
                                                          table)["residual"])
        for a, R in ((point_mass(d), 1 / d), (np.full((d, d), 1 / d**2), d)):
            r = good_R_coset_average_check(a, table)
            worst = max(worst, r["residual"], abs(r["R"] - R))
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-9 and elapsed < 900
    criterion(ok, f"max residual {worst:.1e}, {elapsed:.1f} s")
    assert ok


@pytest.mark.criterion(8)
def test_chain_rule(criterion):
    t0 = time.perf_counter()
    table = build_coset_table(2)
    rng = np.random.default_rng(8)
    worst = 0.0
    for _ in range(5):
        w = pauli_channel(rng.dirichlet(np.full(4, 0.5)).reshape(2, 2))
        I = coherent_info(w)
        for c in table.reps:
            bad, good = combine_and_split(w, clifford_to_matrix(c))
            worst = max(worst, abs(coherent_info(bad) + coherent_info(good) - 2 * I))
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-9 and elapsed < 300
    criterion(ok, f"max residual {worst:.1e} over {5 * len(table)} kernel/channel pairs, {elapsed:.1f} s")
    assert ok


@pytest.mark.criterion(9)
def test_reliability_bounds(criterion):
    t0 = time.perf_counter()
    checks = violations = 0
    for d in (2, 3):
        rng = np.random.default_rng(900 + d)
        for _ in range(100):
            w = pauli_channel(rng.dirichlet(np.full(d * d, 0.3)).reshape(d, d))
            for delta in (0.01, 0.1):
                checks += 1
                violations += bool(check_reliability_bounds(w, delta)["violated"])
    elapsed = time.perf_counter() - t0
    ok = violations == 0 and elapsed < 60
    criterion(ok, f"{violations} violations in {checks} checks, {elapsed:.1f} s")
    assert ok


@pytest.mark.criterion(10)
def test_closed_forms(criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for d in (2, 3):
        rng = np.random.default_rng(1000 + d)
        for _ in range(100):
            a = rng.dirichlet(np.full(d * d, 0.5)).reshape(d, d)
            w = pauli_channel(a)
            worst = max(worst, abs(coherent_info(w) - pauli_coherent_info(a)),
                        abs(renyi_bhattacharyya(w) - pauli_renyi_bhattacharyya(a)))
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-9 and elapsed < 60
    criterion(ok, f"max deviation {worst:.1e}, {elapsed:.1f} s")
    assert ok


@pytest.mark.slow
@pytest.mark.criterion(11)
def test_polarization_statistics(criterion):
    t0 = time.perf_counter()
    p = depolarizing_for_coherent_info(3, 0.4)
    a = depolarizing_probs(3, p)
    target = (0.4 + 1) / 2
    stats = {}
    for n in (6, 8, 10, 12):
        tree = make_tree(3, n, a, seed=7)
        stats[n] = polarization_statistics(monte_carlo_metrics(tree, 100_000, seed=7), 0.1)
    elapsed = time.perf_counter() - t0
    mids = [stats[n]["frac_mid"] for n in (6, 8, 10, 12)]
    good = stats[12]["frac_good"]
    mid_ok = all(x > y for x, y in zip(mids, mids[1:]))
    good_ok = abs(good - target) <= 0.05
    ok = mid_ok and good_ok and elapsed < 1800
    criterion(ok, f"frac_good {good:.3f} vs {target:.2f} +/- 0.05, frac_mid "
                  f"{', '.join(f'{m:.3f}' for m in mids)} (decreasing: {mid_ok}), {elapsed:.0f} s")
    assert mid_ok, mids
    assert good_ok, f"frac_good {good:.3f} at n=12"


@pytest.mark.criterion(12)
def test_exact_vs_monte_carlo(criterion):
    t0 = time.perf_counter()
    cases = [
        (2, 3, depolarizing_probs(2, 0.1)),
        (3, 2, dephasing_probs(3, 0.25)),
        (2, 3, np.random.default_rng(12).dirichlet(np.ones(4)).reshape(2, 2)),
    ]
    worst = 0.0
    for k, (d, n, a) in enumerate(cases):
        tree = make_tree(d, n, a, seed=k)
        ex = synthesize_exact(tree)
        mc = monte_carlo_metrics(tree, 200_000, seed=k)
        for got, want, se in ((mc.I_cl, ex.I_cl, mc.I_se), (mc.Z, ex.Z, mc.Z_se)):
            z = np.abs(got - want) / np.maximum(se, 1e-12)
            worst = max(worst, float(np.where(np.abs(got - want) <= 1e-12, 0, z).max()))
    elapsed = time.perf_counter() - t0
    ok = worst <= 3 and elapsed < 600
    criterion(ok, f"largest deviation {worst:.2f} standard errors, {elapsed:.1f} s")
    assert ok


@pytest.mark.slow
@pytest.mark.criterion(13)
def test_decoder_soundness(criterion):
    t0 = time.perf_counter()
    noiseless = []
    for d in (2, 3):
        tree = make_tree(d, 5, point_mass(d), seed=1)
        noiseless.append(frame_error_rate(CodeInstance(tree, range(0, 32, 2)), 10_000)["fer"])
        tree = make_tree(d, 5, depolarizing_probs(d, 0.3), seed=1)
        noiseless.append(frame_error_rate(CodeInstance(tree, range(32)), 10_000)["fer"])

    a = depolarizing_probs(2, 0.3)
    tree = make_tree(2, 2, a, seed=3)
    code = CodeInstance(tree, [0, 2])
    add, sub = group_tables(2)
    rng = np.random.default_rng(13)
    mismatches = 0
    for _ in range(500):
        u = rng.integers(0, 4, 4)
        y = add[encode(u, tree), sample_errors(a, 4, rng)]
        lik = a.reshape(-1)[sub[y]]
        mismatches += not np.array_equal(sc_decode(lik, u, code)[0], sequential_ml(lik, code.frozen_mask, u, tree))

    fers = []
    for n in (6, 8, 10):
        tree = make_tree(2, n, depolarizing_probs(2, 0.05), seed=1)
        code = code_for_rate(tree, monte_carlo_metrics(tree, 20_000, seed=1), 0.4)
        fers.append(frame_error_rate(code, 10_000, seed=13)["fer"])
    elapsed = time.perf_counter() - t0
    decreasing = all(x > y for x, y in zip(fers, fers[1:]))
    ok = max(noiseless) == 0 and mismatches == 0 and decreasing and elapsed < 1800
    criterion(ok, f"noiseless/all-frozen FER {max(noiseless)}, SC vs ML mismatches {mismatches}/500, "
                  f"FER n=6,8,10 {', '.join(f'{f:.4f}' for f in fers)}, {elapsed:.0f} s")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
