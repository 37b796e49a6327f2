"""Polar encoding of Pauli labels, Bell-assisted frozen symbols, and SC decoding.

Decoding works in the error domain.  A physical error ``E`` becomes
``E' = P#^{-1}(E)`` after the inverse encoder; Bell measurements disclose
``E'`` on the frozen positions, and the decoder estimates the rest.  This is
the classical polar code on the counterpart channel observed at ``y = 0``
with frozen inputs ``-E'``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ditmath import group_tables
from .polar import IndexMetrics, PolarTree, batch_rng, sample_errors


def _level_nodes(lev: int) -> np.ndarray:
    return (2**lev - 1 + np.arange(2**lev))[:, None]


def _check_length(x: np.ndarray, tree: PolarTree) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    if x.shape[-1] != tree.N:
        raise ValueError(f"expected length {tree.N}, got {x.shape[-1]}")
    if x.size and (x.min() < 0 or x.max() >= tree.q):
        raise ValueError(f"labels must lie in [0, {tree.q})")
    return x


def encode(u, tree: PolarTree) -> np.ndarray:
    """Apply the kernel network ``P#`` to flat labels (any leading batch shape)."""
    x = _check_length(u, tree).copy()
    G1, G2 = tree.kernel_tables
    lead = x.shape[:-1]
    for lev in range(tree.n - 1, -1, -1):
        blocks = x.reshape(lead + (2**lev, 2, -1))
        v, w = blocks[..., 0, :], blocks[..., 1, :]
        nodes = _level_nodes(lev)
        x = np.stack([G1[nodes, v, w], G2[nodes, v, w]], axis=-2).reshape(lead + (tree.N,))
    return x


def decode_network(x, tree: PolarTree) -> np.ndarray:
    """Inverse of :func:`encode`."""
    u = _check_length(x, tree).copy()
    q = tree.q
    inv = np.stack([k.inverse_tables() for k in tree.kernels]) if tree.kernels else None
    lead = u.shape[:-1]
    for lev in range(tree.n):
        blocks = u.reshape(lead + (2**lev, 2, -1))
        flat = inv[_level_nodes(lev), blocks[..., 0, :], blocks[..., 1, :]]
        u = np.stack(np.divmod(flat, q), axis=-2).reshape(lead + (tree.N,))
    return u


@dataclass(frozen=True, eq=False)
class CodeInstance:
    tree: PolarTree
    frozen: tuple

    def __post_init__(self):
        f = tuple(sorted(int(i) for i in self.frozen))
        if len(set(f)) != len(f) or (f and (f[0] < 0 or f[-1] >= self.tree.N)):
            raise ValueError("frozen indices must be distinct and in range")
        object.__setattr__(self, "frozen", f)

    @property
    def N(self) -> int:
        return self.tree.N

    @property
    def rate(self) -> float:
        return 1 - len(self.frozen) / self.N

    @property
    def frozen_mask(self) -> np.ndarray:
        m = np.zeros(self.N, dtype=bool)
        m[list(self.frozen)] = True
        return m

    @property
    def info(self) -> np.ndarray:
        return np.flatnonzero(~self.frozen_mask)


def select_frozen(metrics: IndexMetrics, n_frozen: int) -> tuple:
    """The ``n_frozen`` indices with largest Z; ties go to the smaller index."""
    N = len(metrics.Z)
    if not 0 <= n_frozen <= N:
        raise ValueError(f"n_frozen must lie in [0, {N}]")
    order = np.lexsort((np.arange(N), -metrics.Z))
    return tuple(sorted(int(i) for i in order[:n_frozen]))


def code_for_rate(tree: PolarTree, metrics: IndexMetrics, rate: float) -> CodeInstance:
    if not 0 <= rate <= 1:
        raise ValueError("rate must lie in [0, 1]")
    n_info = int(round(rate * tree.N))
    return CodeInstance(tree, select_frozen(metrics, tree.N - n_info))


def simulate_bell_frozen(e_transformed, frozen) -> dict:
    """Symbols of ``E'`` that Bell measurements on the frozen EPR halves reveal."""
    e = np.asarray(e_transformed)
    return {int(i): int(e[i]) for i in sorted(frozen)}


TIE_RTOL = 1e-10


def argmax_smallest(p: np.ndarray) -> np.ndarray:
    """Row-wise argmax; values within ``TIE_RTOL`` of the maximum count as ties, won by the smallest label."""
    top = p.max(axis=-1, keepdims=True)
    return np.argmax(p >= top * (1 - TIE_RTOL), axis=-1)


def _normalize(L: np.ndarray) -> np.ndarray:
    s = L.sum(axis=-1, keepdims=True)
    dead = s == 0
    if dead.any():
        # only reachable after a wrong decision on a channel with zero entries
        L = np.where(dead, 1.0, L)
        s = L.sum(axis=-1, keepdims=True)
    return L / s


def sc_decode(lik, frozen_values, instance: CodeInstance, return_posteriors: bool = False):
    """Successive cancellation over ``q = d**2`` symbols.

    ``lik``: ``(B, N, q)`` channel likelihoods per position.  ``frozen_values``:
    ``(B, N)``; only frozen positions are read.  Returns the input estimate
    ``(B, N)`` and, if asked, the leaf posteriors ``(B, N, q)``.
    """
    tree = instance.tree
    lik = np.asarray(lik, dtype=float)
    if lik.ndim == 2:
        lik = lik[None]
    B, N, q = lik.shape
    if N != tree.N or q != tree.q:
        raise ValueError("likelihood array does not match the code")
    fv = np.broadcast_to(np.asarray(frozen_values, dtype=np.int64), (B, N))
    mask = instance.frozen_mask
    G1, G2 = tree.kernel_tables
    posts = np.empty((B, N, q)) if return_posteriors else None

    def rec(L, lev, b):
        if L.shape[1] == 1:
            i = b
            p = _normalize(L[:, 0, :])
            if posts is not None:
                posts[:, i] = p
            u = fv[:, i] if mask[i] else argmax_smallest(p)
            u = u[:, None]
            return u, u
        node = 2**lev - 1 + b
        g1, g2 = G1[node], G2[node]
        h = L.shape[1] // 2
        L1, L2 = L[:, :h], L[:, h:]
        Lv = _normalize((L1[:, :, g1] * L2[:, :, g2]).sum(axis=-1))
        ua, v = rec(Lv, lev + 1, 2 * b)
        Lw = np.take_along_axis(L1, g1[v], axis=2) * np.take_along_axis(L2, g2[v], axis=2)
        ub, w = rec(_normalize(Lw), lev + 1, 2 * b + 1)
        return np.concatenate([ua, ub], axis=1), np.concatenate([g1[v, w], g2[v, w]], axis=1)

    u, _ = rec(_normalize(lik), 0, 0)
    return (u, posts) if return_posteriors else u


def decode_errors(instance: CodeInstance, E, return_posteriors: bool = False):
    """Estimate ``E'`` from the frozen disclosures for a batch of physical errors ``E``."""
    tree = instance.tree
    E = np.atleast_2d(_check_length(E, tree))
    _, sub = group_tables(tree.d)
    neg = sub[0]
    e_t = decode_network(E, tree)
    a = tree.a.reshape(-1)
    # observation y = 0 at every position: likelihood a[0 - x]
    lik = np.broadcast_to(a[neg], (E.shape[0], tree.N, tree.q))
    out = sc_decode(lik, neg[e_t], instance, return_posteriors)
    u, posts = out if return_posteriors else (out, None)
    est = neg[u]
    return (e_t, est, posts) if return_posteriors else (e_t, est)


def frame_error_rate(instance: CodeInstance, trials: int, seed: int = 0,
                     batch_size: int = 1000, min_trials: int = 100) -> dict:
    """Frame error rate with exact recovery of ``E'`` on information positions.

    Trial ``t`` draws its error from ``SeedSequence([seed, t])``.
    """
    if trials < min_trials:
        raise ValueError(f"need at least {min_trials} trials")
    tree = instance.tree
    info = instance.info
    success = np.empty(trials, dtype=bool)
    sym_err = np.empty(trials, dtype=np.int64)
    for start in range(0, trials, batch_size):
        idx = range(start, min(trials, start + batch_size))
        E = np.stack([sample_errors(tree.a, tree.N, batch_rng(seed, t)) for t in idx])
        e_t, est = decode_errors(instance, E)
        wrong = (est[:, info] != e_t[:, info]).sum(axis=1)
        sym_err[start:start + len(idx)] = wrong
        success[start:start + len(idx)] = wrong == 0
    fer = float(1 - success.mean())
    return {
        "fer": fer,
        "stderr": float(np.sqrt(fer * (1 - fer) / trials)),
        "trials": trials,
        "success": success,
        "info_symbol_errors": sym_err,
    }
