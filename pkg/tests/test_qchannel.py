import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qudit_polar.clifford import build_coset_table, clifford_to_matrix
from qudit_polar.qchannel import (
    QuditChannel,
    apply_to_epr,
    check_reliability_bounds,
    coherent_info,
    combine_and_split,
    depolarizing_channel,
    entropy,
    epr_state,
    identity_channel,
    reliability_bounds,
    partial_trace,
    pauli_channel,
    pauli_coherent_info,
    pauli_renyi_bhattacharyya,
    renyi_bhattacharyya,
    renyi_bhattacharyya_petz,
)


def random_kraus_channel(d, k, rng, out=None):
    out = d if out is None else out
    G = rng.normal(size=(out * k, d)) + 1j * rng.normal(size=(out * k, d))
    V, _ = np.linalg.qr(G)
    return QuditChannel(tuple(V.reshape(k, out, d)))


def random_probs(d, rng, conc=0.5):
    return rng.dirichlet(np.full(d * d, conc)).reshape(d, d)


def test_kraus_validation():
    with pytest.raises(ValueError, match="trace preserving"):
        QuditChannel((0.5 * np.eye(2),))
    with pytest.raises(ValueError):
        QuditChannel(())


@pytest.mark.parametrize("d", [2, 3, 5])
def test_extremes(d):
    assert coherent_info(identity_channel(d)) == pytest.approx(1, abs=1e-12)
    assert renyi_bhattacharyya(identity_channel(d)) == pytest.approx(1 / d, abs=1e-12)
    assert coherent_info(depolarizing_channel(d)) == pytest.approx(-1, abs=1e-12)
    assert renyi_bhattacharyya(depolarizing_channel(d)) == pytest.approx(d, abs=1e-10)


def test_partial_trace_and_epr():
    d = 3
    rho = apply_to_epr(identity_channel(d))
    assert np.allclose(rho, epr_state(d))
    assert np.allclose(partial_trace(rho, (d, d), (0,)), np.eye(d) / d)
    assert entropy(rho, d) == pytest.approx(0, abs=1e-12)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(0, 2**32 - 1))
def test_pauli_closed_forms(d, seed):
    a = random_probs(d, np.random.default_rng(seed))
    w = pauli_channel(a)
    assert coherent_info(w) == pytest.approx(pauli_coherent_info(a), abs=1e-9)
    assert renyi_bhattacharyya(w) == pytest.approx(pauli_renyi_bhattacharyya(a), abs=1e-9)


@pytest.mark.parametrize("d,k", [(2, 2), (2, 3), (3, 2), (3, 4)])
def test_two_routes_to_R(d, k):
    rng = np.random.default_rng(7 * d + k)
    for _ in range(5):
        w = random_kraus_channel(d, k, rng)
        assert renyi_bhattacharyya(w) == pytest.approx(renyi_bhattacharyya_petz(w), abs=1e-9)


def test_output_unitary_invariance():
    rng = np.random.default_rng(1)
    w = random_kraus_channel(3, 2, rng)
    V, _ = np.linalg.qr(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
    assert coherent_info(w.then_unitary(V)) == pytest.approx(coherent_info(w), abs=1e-10)
    assert renyi_bhattacharyya(w.then_unitary(V)) == pytest.approx(renyi_bhattacharyya(w), abs=1e-10)


def test_chain_rule_all_cosets_d2():
    rng = np.random.default_rng(2)
    table = build_coset_table(2)
    w = pauli_channel(random_probs(2, rng))
    I = coherent_info(w)
    for c in table.reps:
        bad, good = combine_and_split(w, clifford_to_matrix(c))
        assert coherent_info(bad) + coherent_info(good) == pytest.approx(2 * I, abs=1e-9)


def test_chain_rule_general_channel():
    rng = np.random.default_rng(3)
    table = build_coset_table(2)
    w = random_kraus_channel(2, 2, rng)
    I = coherent_info(w)
    for c in table.reps[:5]:
        bad, good = combine_and_split(w, clifford_to_matrix(c))
        assert coherent_info(bad) + coherent_info(good) == pytest.approx(2 * I, abs=1e-9)


def test_identity_coset_good_channel_keeps_R():
    table = build_coset_table(2)
    a = random_probs(2, np.random.default_rng(4))
    w = pauli_channel(a)
    for cid in (table.identity_id, table.swap_id):
        _, good = combine_and_split(w, clifford_to_matrix(table.reps[cid]))
        assert renyi_bhattacharyya(good) == pytest.approx(renyi_bhattacharyya(w), abs=1e-10)


def test_combine_rejects_wrong_size():
    with pytest.raises(ValueError):
        combine_and_split(identity_channel(2), np.eye(8))


@pytest.mark.parametrize("d", [2, 3])
def test_reliability_bounds_hold(d):
    rng = np.random.default_rng(d)
    for _ in range(20):
        w = pauli_channel(random_probs(d, rng, 0.3))
        for delta in (0.01, 0.1):
            assert not check_reliability_bounds(w, delta)["violated"]


def test_reliability_bounds_shape():
    r = reliability_bounds(0.5, 1.0, 2, 0.01)
    assert r["low_applies"] and not r["high_applies"]
    with pytest.raises(ValueError):
        reliability_bounds(1.0, 0.0, 2, 0.0)
