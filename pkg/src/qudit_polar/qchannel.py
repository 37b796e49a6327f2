"""Finite-dimensional channel calculus: Kraus channels, entropies, I(W), R(W).

All logarithms are taken in base d (the input dimension), so the symmetric
coherent information lies in [-1, 1] and R(W) in [1/d, d].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ditmath import DENSE_CAP, pauli_to_matrix, PhasedPauli

EIG_FLOOR = 1e-14
KRAUS_ATOL = 1e-10


@dataclass(frozen=True, eq=False)
class QuditChannel:
    """A CPTP map given by Kraus operators of shape ``(out_dim, in_dim)``."""

    kraus: tuple

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.kraus)
        if not ops:
            raise ValueError("channel needs at least one Kraus operator")
        shape = ops[0].shape
        if any(k.shape != shape for k in ops):
            raise ValueError("Kraus operators must share one shape")
        object.__setattr__(self, "kraus", ops)
        total = sum(k.conj().T @ k for k in ops)
        if not np.allclose(total, np.eye(shape[1]), atol=KRAUS_ATOL):
            raise ValueError("Kraus operators are not trace preserving")

    @property
    def in_dim(self) -> int:
        return self.kraus[0].shape[1]

    @property
    def out_dim(self) -> int:
        return self.kraus[0].shape[0]

    def __call__(self, rho: np.ndarray) -> np.ndarray:
        return sum(k @ rho @ k.conj().T for k in self.kraus)

    def then_unitary(self, V: np.ndarray) -> "QuditChannel":
        return QuditChannel(tuple(V @ k for k in self.kraus))


def identity_channel(d: int) -> QuditChannel:
    return QuditChannel((np.eye(d),))


def pauli_channel(a) -> QuditChannel:
    """``rho -> sum a[r, s] P_rs rho P_rs^dag`` from a ``(d, d)`` probability table."""
    a = np.asarray(a, dtype=float)
    d = a.shape[0]
    ops = [
        np.sqrt(a[r, s]) * pauli_to_matrix(PhasedPauli(d, (r,), (s,)))
        for r in range(d)
        for s in range(d)
        if a[r, s] > 0
    ]
    return QuditChannel(tuple(ops))


def depolarizing_channel(d: int) -> QuditChannel:
    """The completely depolarizing channel ``rho -> tr(rho) 1/d``."""
    return pauli_channel(np.full((d, d), 1.0 / d**2))


def epr_state(d: int) -> np.ndarray:
    v = np.eye(d).reshape(-1) / np.sqrt(d)
    return np.outer(v, v.conj())


def _check_density(rho: np.ndarray) -> None:
    if abs(np.trace(rho) - 1) > 1e-10:
        raise ValueError("state does not have unit trace")
    if np.linalg.eigvalsh((rho + rho.conj().T) / 2).min() < -1e-10:
        raise ValueError("state is not positive semidefinite")


def apply_to_epr(w: QuditChannel, cap: int = DENSE_CAP) -> np.ndarray:
    """``(I_A (x) W)(Phi_AA')`` as a matrix on ``A (x) B``."""
    d = w.in_dim
    if d * w.out_dim > cap:
        raise ValueError("output exceeds dense cap")
    ket = np.eye(d) / np.sqrt(d)  # |Phi> as a (A, A') array
    rho = np.zeros((d * w.out_dim, d * w.out_dim), dtype=complex)
    for k in w.kraus:
        v = (ket @ k.T).reshape(-1)  # (A, B) vector of (I (x) K)|Phi>
        rho += np.outer(v, v.conj())
    return rho


def partial_trace(rho: np.ndarray, dims: tuple, keep: tuple) -> np.ndarray:
    n = len(dims)
    t = rho.reshape(dims + dims)
    letters = "abcdefghijklmnopqrstuvwxyz"
    row = [letters[i] for i in range(n)]
    col = [letters[n + i] if i in keep else letters[i] for i in range(n)]
    out = "".join(letters[i] for i in keep) + "".join(letters[n + i] for i in keep)
    res = np.einsum("".join(row) + "".join(col) + "->" + out, t)
    size = int(np.prod([dims[i] for i in keep]))
    return res.reshape(size, size)


def entropy(rho: np.ndarray, base: float) -> float:
    ev = np.linalg.eigvalsh((rho + rho.conj().T) / 2)
    ev = ev[ev > EIG_FLOOR]
    return float(-(ev * np.log(ev)).sum() / np.log(base))


def shannon_entropy(p, base: float) -> float:
    p = np.asarray(p, dtype=float).reshape(-1)
    p = p[p > 0]
    return float(-(p * np.log(p)).sum() / np.log(base))


def conditional_entropy(rho_ab: np.ndarray, dim_a: int, dim_b: int, base: float) -> float:
    rho_b = partial_trace(rho_ab, (dim_a, dim_b), (1,))
    return entropy(rho_ab, base) - entropy(rho_b, base)


def coherent_info(w: QuditChannel) -> float:
    rho = apply_to_epr(w)
    val = -conditional_entropy(rho, w.in_dim, w.out_dim, w.in_dim)
    if not -1 - 1e-9 <= val <= 1 + 1e-9:
        raise ArithmeticError(f"coherent information {val} outside [-1, 1]")
    return float(np.clip(val, -1.0, 1.0))


def complementary_channel(w: QuditChannel) -> QuditChannel:
    """Channel to the environment of the Stinespring isometry ``sum_k K_k (x) |k>``."""
    K = np.stack(w.kraus)  # (env, out, in)
    return QuditChannel(tuple(K[:, j, :] for j in range(w.out_dim)))


def stinespring(w: QuditChannel) -> np.ndarray:
    """Isometry ``in -> out (x) env``."""
    K = np.stack(w.kraus)  # (env, out, in)
    return np.transpose(K, (1, 0, 2)).reshape(w.out_dim * len(w.kraus), w.in_dim)


def _psd_power(rho: np.ndarray, power: float) -> np.ndarray:
    """``rho**power`` on the support (pseudo-inverse convention for negative powers)."""
    ev, vec = np.linalg.eigh((rho + rho.conj().T) / 2)
    keep = ev > EIG_FLOOR * max(1.0, ev.max())
    vals = np.zeros_like(ev)
    vals[keep] = ev[keep] ** power
    return (vec * vals) @ vec.conj().T


def sandwiched_renyi2_exp(rho_ae: np.ndarray, dim_a: int, dim_e: int) -> float:
    """``tr[rho_E^-1/2 rho_AE rho_E^-1/2 rho_AE]`` = ``d^{-H~_2(A|E)}``."""
    rho_e = partial_trace(rho_ae, (dim_a, dim_e), (1,))
    inv_sqrt = np.kron(np.eye(dim_a), _psd_power(rho_e, -0.5))
    m = inv_sqrt @ rho_ae @ inv_sqrt
    return float(np.real(np.trace(m @ rho_ae)))


def renyi_bhattacharyya(w: QuditChannel) -> float:
    """``R(W)`` from the sandwiched Renyi-2 entropy of the complementary channel."""
    wc = complementary_channel(w)
    rho = apply_to_epr(wc)
    val = sandwiched_renyi2_exp(rho, w.in_dim, wc.out_dim)
    d = w.in_dim
    if not 1 / d - 1e-9 <= val <= d + 1e-9:
        raise ArithmeticError(f"R(W)={val} outside [1/d, d]")
    return val


def renyi_bhattacharyya_petz(w: QuditChannel) -> float:
    """``R(W)`` through the Petz-1/2 form ``tr[(tr_A sqrt(rho_AB))^2]``.

    Closed form of the supremum over sigma_B; independent of the
    complementary-channel route.
    """
    rho = apply_to_epr(w)
    root = _psd_power(rho, 0.5)
    red = partial_trace(root, (w.in_dim, w.out_dim), (1,))
    return float(np.real(np.trace(red @ red)))


# Pauli-channel closed forms


def pauli_coherent_info(a) -> float:
    a = np.asarray(a, dtype=float)
    return 1.0 - shannon_entropy(a, a.shape[0])


def pauli_renyi_bhattacharyya(a) -> float:
    a = np.asarray(a, dtype=float)
    return float(np.sqrt(np.clip(a, 0, None)).sum() ** 2 / a.shape[0])


# combining and splitting


def combine_and_split(w: QuditChannel, C: np.ndarray, cap: int = DENSE_CAP):
    """Bad and good channels synthesized from two copies of ``w`` and unitary ``C``.

    bad : ``rho -> W(x)W (C (rho (x) 1/d) C^dag)``, outputs ``B1 B2``.
    good: ``rho -> W(x)W (C (Phi_{A1A1'} (x) rho) C^dag)``, outputs ``A1 B1 B2``.
    """
    d, out = w.in_dim, w.out_dim
    C = np.asarray(C, dtype=complex)
    if C.shape != (d * d, d * d):
        raise ValueError("combining unitary must act on two qudits of the channel input")
    if d * out * out > cap:
        raise ValueError("good channel output exceeds dense cap")
    pair = [np.kron(ka, kb) @ C for ka in w.kraus for kb in w.kraus]  # (out^2, d^2)

    bad = []
    for j in range(d):
        embed = np.kron(np.eye(d), np.eye(d)[:, [j]]) / np.sqrt(d)  # rho -> rho (x) |j>
        bad.extend(k @ embed for k in pair)

    # |Phi>_{A1 A1'} (x) |psi>_{A2'}: isometry d -> d^3
    phi = np.eye(d).reshape(-1, 1) / np.sqrt(d)
    iso = np.kron(phi, np.eye(d))
    good = [np.kron(np.eye(d), k) @ iso for k in pair]
    return QuditChannel(tuple(bad)), QuditChannel(tuple(good))


# bound checks


def binary_entropy(x: float, base: float = 2) -> float:
    if x <= 0 or x >= 1:
        return 0.0
    return float(-(x * np.log(x) + (1 - x) * np.log(1 - x)) / np.log(base))


def reliability_bounds(R: float, I: float, d: int, delta: float) -> dict:
    """Evaluate both implications linking R(W) near its extremes to I(W)."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    low_pre = R <= 1 / d + delta
    low_bound = 1 - np.log(1 + d * delta) / np.log(d)
    rd, sd = np.sqrt(delta), np.sqrt(d)
    high_pre = R >= d - delta
    high_bound = -1 + 2 * np.sqrt(delta / d) + (sd + rd) / sd * binary_entropy(rd / (sd + rd), d)
    return {
        "R": R,
        "I": I,
        "delta": delta,
        "low_applies": bool(low_pre),
        "low_bound": float(low_bound),
        "low_margin": float(I - low_bound) if low_pre else None,
        "high_applies": bool(high_pre),
        "high_bound": float(high_bound),
        "high_margin": float(high_bound - I) if high_pre else None,
        "violated": bool((low_pre and I < low_bound - 1e-12) or (high_pre and I > high_bound + 1e-12)),
    }


def check_reliability_bounds(w: QuditChannel, delta: float) -> dict:
    return reliability_bounds(renyi_bhattacharyya(w), coherent_info(w), w.in_dim, delta)
