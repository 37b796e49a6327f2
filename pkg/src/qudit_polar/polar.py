"""Polarization of Pauli qudit channels through their classical counterpart.

Single-qudit Pauli labels ``(r, s)`` are flattened to ``r*d + s`` so every
classical alphabet here is ``Z_d x Z_d`` with ``q = d**2`` symbols.  All
information quantities are in dits (log base d).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from numba import njit
from scipy.optimize import brentq

from .clifford import (
    CliffordOp,
    CosetTable,
    build_coset_table,
    clifford_to_matrix,
    symplectic_inverse,
)
from .ditmath import group_tables, require_prime
from .qchannel import (
    coherent_info,
    combine_and_split,
    pauli_channel,
    pauli_coherent_info,
    pauli_renyi_bhattacharyya,
    renyi_bhattacharyya,
)

MERGE_DECIMALS = 12
ROW_ATOL = 1e-12


# base channels


def validate_pauli_probs(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim == 1:
        d = int(round(np.sqrt(a.size)))
        if d * d != a.size:
            raise ValueError("flat Pauli probabilities must have d**2 entries")
        a = a.reshape(d, d)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 2:
        raise ValueError("Pauli probabilities must form a (d, d) table")
    if (a < -1e-15).any() or abs(a.sum() - 1) > 1e-12:
        raise ValueError("Pauli probabilities must be nonnegative and sum to 1")
    return np.clip(a, 0, None)


def depolarizing_probs(d: int, p: float) -> np.ndarray:
    """``a_00 = 1 - p``; the other ``d**2 - 1`` Paulis share ``p`` equally."""
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    a = np.full((d, d), p / (d * d - 1))
    a[0, 0] = 1 - p
    return a


def dephasing_probs(d: int, p: float) -> np.ndarray:
    """``a_00 = 1 - p``; the clock powers ``Z**s`` (s != 0) share ``p`` equally."""
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    a = np.zeros((d, d))
    a[0, 0] = 1 - p
    a[0, 1:] = p / (d - 1)
    return a


def depolarizing_for_coherent_info(d: int, target: float) -> float:
    """Depolarizing strength ``p`` whose channel has coherent information ``target``."""
    if not -1 < target < 1:
        raise ValueError("target must lie in (-1, 1)")
    p_max = 1 - 1 / d**2  # fully depolarizing point, I = -1
    return brentq(lambda p: pauli_coherent_info(depolarizing_probs(d, p)) - target, 0.0, p_max, xtol=1e-15)


# explicit classical channels


def _merge_columns(T: np.ndarray) -> np.ndarray:
    """Sum columns whose likelihood vectors are proportional; drop null columns."""
    mass = T.sum(axis=0)
    keep = mass > 0
    T, mass = T[:, keep], mass[keep]
    shape = np.round(T / mass, MERGE_DECIMALS)
    _, inv = np.unique(shape.T, axis=0, return_inverse=True)
    out = np.zeros((T.shape[0], inv.max() + 1))
    np.add.at(out.T, inv.reshape(-1), T.T)
    return out


@dataclass(frozen=True, eq=False)
class ClassicalDMC:
    """Discrete memoryless channel on ``q = d**2`` inputs; ``T[x, y] = P(y | x)``."""

    d: int
    T: np.ndarray

    def __post_init__(self):
        T = np.asarray(self.T, dtype=float)
        if T.ndim != 2 or T.shape[0] != self.d**2:
            raise ValueError(f"transition matrix needs {self.d**2} rows")
        if not np.allclose(T.sum(axis=1), 1, atol=ROW_ATOL, rtol=0):
            raise ValueError("transition rows must sum to 1")
        object.__setattr__(self, "T", T)

    @property
    def q(self) -> int:
        return self.d**2

    def merged(self) -> "ClassicalDMC":
        return ClassicalDMC(self.d, _merge_columns(self.T))

    def mutual_information(self) -> float:
        """Uniform-input mutual information in dits."""
        T = self.T
        py = T.mean(axis=0)
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(T > 0, T * np.log(T / py), 0.0)
        return float(terms.sum() / self.q / np.log(self.d))

    def bhattacharyya(self) -> float:
        """Average pairwise ``sum_y sqrt(T[x,y] T[x',y])`` over ``x != x'``."""
        root = np.sqrt(self.T)
        gram = root @ root.T
        q = self.q
        return float((gram.sum() - np.trace(gram)) / (q * (q - 1)))


def classical_counterpart(a) -> ClassicalDMC:
    """Additive-noise channel ``y = x + e`` with ``e ~ a``: ``T[x, y] = a[y - x]``."""
    a = validate_pauli_probs(a)
    d = a.shape[0]
    _, sub = group_tables(d)
    return ClassicalDMC(d, a.reshape(-1)[sub])


# kernels


@dataclass(frozen=True, eq=False)
class KernelMap:
    """Label permutation ``(u1, u2) -> (x1, x2)`` given by a 4x4 matrix over Z_d.

    ``matrix`` acts on vectors ordered ``(r1, r2, s1, s2)``.
    """

    d: int
    matrix: np.ndarray
    coset_id: int = -1

    def __post_init__(self):
        M = np.asarray(self.matrix, dtype=np.int64) % self.d
        if M.shape != (4, 4):
            raise ValueError("kernel matrix must be 4x4")
        M.setflags(write=False)
        object.__setattr__(self, "matrix", M)
        if len(np.unique(self.g1 * self.q + self.g2)) != self.q**2:
            raise ValueError("kernel matrix is not invertible mod d")

    @classmethod
    def from_clifford(cls, c: CliffordOp, coset_id: int = -1) -> "KernelMap":
        """Kernel of the combining unitary ``c``: the label action of ``P -> c P c^dag``."""
        if c.n != 2:
            raise ValueError("kernels come from two-qudit Cliffords")
        return cls(c.d, symplectic_inverse(c.sympl, c.d), coset_id)

    @property
    def q(self) -> int:
        return self.d**2

    @cached_property
    def _tables(self):
        d, q = self.d, self.q
        u1, u2 = np.divmod(np.arange(q * q), q)
        r1, s1 = np.divmod(u1, d)
        r2, s2 = np.divmod(u2, d)
        img = (self.matrix @ np.stack([r1, r2, s1, s2])) % d
        g1 = (img[0] * d + img[2]).reshape(q, q)
        g2 = (img[1] * d + img[3]).reshape(q, q)
        g1.setflags(write=False)
        g2.setflags(write=False)
        return g1, g2

    @property
    def g1(self) -> np.ndarray:
        return self._tables[0]

    @property
    def g2(self) -> np.ndarray:
        return self._tables[1]

    def __call__(self, u1, u2):
        return self.g1[u1, u2], self.g2[u1, u2]

    def inverse_tables(self) -> np.ndarray:
        """``inv[x1, x2] = u1 * q + u2``."""
        inv = np.empty((self.q, self.q), dtype=np.int64)
        inv[self.g1, self.g2] = np.arange(self.q**2).reshape(self.q, self.q)
        return inv

    def is_linear(self, pairs=None, rng=None) -> bool:
        """Check ``G(x + g) - G(x)`` depends only on ``g`` (all pairs, or a random sample)."""
        add, sub = group_tables(self.d)
        q = self.q
        flat = self.g1 * q + self.g2
        if pairs is None:
            xs = np.arange(q * q)
            gs = np.arange(q * q)
            xs, gs = np.repeat(xs, q * q), np.tile(gs, q * q)
        else:
            rng = np.random.default_rng(0) if rng is None else rng
            xs, gs = rng.integers(0, q * q, size=(2, pairs))
        x1, x2 = np.divmod(xs, q)
        h1, h2 = np.divmod(gs, q)
        y = flat[add[x1, h1], add[x2, h2]]
        base = flat[x1, x2]
        zero_shift = flat[h1, h2]  # image of g itself
        d1 = sub[y // q, base // q]
        d2 = sub[y % q, base % q]
        return bool(np.array_equal(d1, zero_shift // q) and np.array_equal(d2, zero_shift % q))


def polar_transform(w: ClassicalDMC, k: KernelMap) -> tuple[ClassicalDMC, ClassicalDMC]:
    """Bad channel ``u1 -> (y1, y2)`` and good channel ``u2 -> (y1, y2, u1)``, merged."""
    if w.d != k.d:
        raise ValueError(f"alphabet mismatch: channel d={w.d}, kernel d={k.d}")
    q, m = w.q, w.T.shape[1]
    # joint[u1, u2, y1, y2]
    joint = w.T[k.g1][:, :, :, None] * w.T[k.g2][:, :, None, :]
    bad = joint.sum(axis=1).reshape(q, m * m) / q
    good = np.transpose(joint, (1, 2, 3, 0)).reshape(q, m * m * q) / q
    return ClassicalDMC(w.d, _merge_columns(bad)), ClassicalDMC(w.d, _merge_columns(good))


# symmetric-channel ensembles


@dataclass(frozen=True, eq=False)
class PosteriorEnsemble:
    """Law of the input posterior when the true input is 0.

    For additive-noise channels and linear kernels this law determines every
    metric used here, and it transforms exactly under a kernel.
    """

    d: int
    weights: np.ndarray
    posts: np.ndarray

    @property
    def q(self) -> int:
        return self.d**2

    def __len__(self):
        return len(self.weights)

    def mutual_information(self) -> float:
        p = self.posts
        with np.errstate(divide="ignore", invalid="ignore"):
            h = -np.where(p > 0, p * np.log(p), 0.0).sum(axis=1) / np.log(self.d)
        return float(2.0 - self.weights @ h)

    def bhattacharyya(self) -> float:
        z = (np.sqrt(self.posts).sum(axis=1) ** 2 - 1) / (self.q - 1)
        return float(self.weights @ z)


def _merge_ensemble(d: int, weights: np.ndarray, posts: np.ndarray) -> PosteriorEnsemble:
    keep = weights > 0
    weights, posts = weights[keep], posts[keep]
    posts = posts / posts.sum(axis=1, keepdims=True)
    key = np.round(posts, MERGE_DECIMALS)
    uniq, inv = np.unique(key, axis=0, return_inverse=True)
    w = np.bincount(inv.reshape(-1), weights=weights, minlength=len(uniq))
    # representative posterior: the first exact member of each class
    first = np.full(len(uniq), -1)
    first[inv.reshape(-1)[::-1]] = np.arange(len(inv))[::-1]
    return PosteriorEnsemble(d, w, posts[first])


def counterpart_ensemble(a) -> PosteriorEnsemble:
    a = validate_pauli_probs(a)
    d = a.shape[0]
    _, sub = group_tables(d)
    flat = a.reshape(-1)
    # observing y = e under input 0 gives likelihood a[e - x] over x
    return _merge_ensemble(d, flat.copy(), flat[sub])


class BudgetExceeded(RuntimeError):
    pass


def transform_ensemble(ens: PosteriorEnsemble, k: KernelMap, max_pairs: int = 4_000_000):
    """Exact bad/good ensembles from two independent copies of ``ens``."""
    n_pairs = len(ens) ** 2
    if n_pairs > max_pairs:
        raise BudgetExceeded(
            f"{n_pairs} posterior pairs exceed the exact-synthesis budget ({max_pairs}); "
            "use monte_carlo_metrics for this depth"
        )
    K, q = len(ens), ens.q
    g1, g2 = k.g1, k.g2
    bad_w, bad_p, good_w, good_p = [], [], [], []
    chunk = max(1, 2_000_000 // (K * q * q))
    for start in range(0, K, chunk):
        p1 = ens.posts[start:start + chunk]
        f = p1[:, None, g1] * ens.posts[None, :, g2]  # (c, K, u1, u2)
        w = (ens.weights[start:start + chunk, None] * ens.weights[None, :]).reshape(-1)
        f = f.reshape(-1, q, q)
        bad_w.append(w)
        bad_p.append(f.sum(axis=2))
        good_w.append(w)
        good_p.append(f[:, 0, :])
    bad = _merge_ensemble(ens.d, np.concatenate(bad_w), np.concatenate(bad_p))
    good = _merge_ensemble(ens.d, np.concatenate(good_w), np.concatenate(good_p))
    return bad, good


# trees


KERNEL_SETS = ("full", "reduced", "explicit")


@dataclass(frozen=True, eq=False)
class PolarTree:
    """Recursion tree with one kernel per internal node.

    Node ``(level, prefix)`` has heap id ``2**level - 1 + int(prefix, 2)``; the
    leaf index of a bit path is ``int(path, 2)`` (first bit most significant).
    """

    d: int
    n: int
    a: np.ndarray
    kernel_ids: tuple
    kernel_set: str
    seed: int
    table: CosetTable = field(repr=False)

    def __post_init__(self):
        if len(self.kernel_ids) != 2**self.n - 1:
            raise ValueError("need one kernel id per internal node")

    @property
    def N(self) -> int:
        return 2**self.n

    @property
    def q(self) -> int:
        return self.d**2

    @cached_property
    def kernels(self) -> list[KernelMap]:
        cache = {}
        for i in set(self.kernel_ids):
            cache[i] = KernelMap.from_clifford(self.table.reps[i], i)
        return [cache[i] for i in self.kernel_ids]

    @cached_property
    def kernel_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Stacked ``(nodes, q, q)`` tables for the compiled kernels."""
        if not self.kernels:
            empty = np.zeros((0, self.q, self.q), dtype=np.int64)
            return empty, empty
        g1 = np.ascontiguousarray(np.stack([k.g1 for k in self.kernels]), dtype=np.int64)
        g2 = np.ascontiguousarray(np.stack([k.g2 for k in self.kernels]), dtype=np.int64)
        return g1, g2

    def node(self, level: int, block: int) -> KernelMap:
        return self.kernels[2**level - 1 + block]

    def bit_path(self, index: int) -> str:
        return format(index, f"0{self.n}b") if self.n else ""


def kernel_candidates(table: CosetTable, kernel_set: str, explicit=None) -> list[int]:
    if kernel_set == "full":
        return list(range(len(table)))
    if kernel_set == "reduced":
        return table.reduced_ids()
    if kernel_set == "explicit":
        if not explicit:
            raise ValueError("explicit kernel set needs a non-empty list of coset ids")
        ids = [int(i) for i in explicit]
        bad = [i for i in ids if not 0 <= i < len(table)]
        if bad:
            raise ValueError(f"coset ids out of range: {bad}")
        return ids
    raise ValueError(f"unknown kernel set {kernel_set!r}; choose from {KERNEL_SETS}")


def make_tree(d: int, n: int, a, seed: int = 0, kernel_set: str = "reduced",
              explicit=None, table: CosetTable | None = None) -> PolarTree:
    """Draw one kernel per node uniformly from the configured set with a seeded generator."""
    require_prime(d, "polar trees")
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = validate_pauli_probs(a)
    if a.shape[0] != d:
        raise ValueError(f"channel table is for d={a.shape[0]}, tree for d={d}")
    table = build_coset_table(d) if table is None else table
    cands = kernel_candidates(table, kernel_set, explicit)
    rng = np.random.default_rng(seed)
    ids = tuple(int(cands[i]) for i in rng.integers(0, len(cands), size=2**n - 1))
    return PolarTree(d, n, a, ids, kernel_set, int(seed), table)


def fixed_tree(d: int, n: int, a, coset_id: int, table: CosetTable | None = None) -> PolarTree:
    """Every node uses the same coset (e.g. a SUM-type kernel)."""
    table = build_coset_table(d) if table is None else table
    return PolarTree(d, n, validate_pauli_probs(a), (int(coset_id),) * (2**n - 1), "explicit", 0, table)


# metrics


@dataclass(frozen=True, eq=False)
class IndexMetrics:
    """Per-leaf estimates in leaf-index order; ``I_cl`` in dits, ``Z`` in [0, 1]."""

    d: int
    n: int
    I_cl: np.ndarray
    Z: np.ndarray
    I_se: np.ndarray
    Z_se: np.ndarray
    method: str
    samples: int

    @property
    def I_quantum(self) -> np.ndarray:
        return self.I_cl - 1.0

    @property
    def R_surrogate(self) -> np.ndarray:
        """Classical surrogate ``(1 + (q-1) Z)/d``; equals R(W) for a Pauli channel."""
        return (1 + (self.d**2 - 1) * self.Z) / self.d

    def rows(self):
        for i in range(len(self.Z)):
            yield {
                "index": i,
                "bit_path": format(i, f"0{self.n}b") if self.n else "",
                "I_quantum": float(self.I_quantum[i]),
                "Z_estimate": float(self.Z[i]),
                "stderr": float(self.Z_se[i]),
                "I_stderr": float(self.I_se[i]),
                "method": self.method,
            }


def synthesize_exact(tree: PolarTree, max_n: int = 4, max_pairs: int = 4_000_000) -> IndexMetrics:
    """Exact per-leaf metrics by transforming posterior ensembles down the tree."""
    if tree.n > max_n:
        raise BudgetExceeded(f"n={tree.n} exceeds max_n={max_n}; use monte_carlo_metrics")
    level = [counterpart_ensemble(tree.a)]
    for lev in range(tree.n):
        nxt = []
        for b, ens in enumerate(level):
            bad, good = transform_ensemble(ens, tree.node(lev, b), max_pairs)
            nxt.extend((bad, good))
        level = nxt
    I = np.array([e.mutual_information() for e in level])
    Z = np.array([e.bhattacharyya() for e in level])
    zeros = np.zeros_like(I)
    return IndexMetrics(tree.d, tree.n, I, Z, zeros, zeros.copy(), "exact", 0)


@njit(cache=True)
def _genie_accumulate(E, lik, G1, G2, n, log_d, acc, ref, have_ref):
    """Run the genie-aided recursion (true inputs all zero) for each error row.

    ``lik[e, x]`` is the likelihood of observing ``e`` under input ``x``.
    ``acc`` rows hold shifted sums per leaf: I-c, (I-c)^2, Z-c', (Z-c')^2, with
    the shifts ``ref`` taken from the first trial to avoid cancellation.
    """
    T, N = E.shape
    q = lik.shape[1]
    L = np.empty((N, q))
    bad = np.empty(q)
    good = np.empty(q)
    for t in range(T):
        for j in range(N):
            for x in range(q):
                L[j, x] = lik[E[t, j], x]
        for lev in range(n):
            M = N >> lev
            h = M >> 1
            for b in range(1 << lev):
                node = (1 << lev) - 1 + b
                base = b * M
                for j in range(h):
                    i1 = base + j
                    i2 = base + h + j
                    sb = 0.0
                    for v in range(q):
                        s = 0.0
                        for w in range(q):
                            s += L[i1, G1[node, v, w]] * L[i2, G2[node, v, w]]
                        bad[v] = s
                        sb += s
                    sg = 0.0
                    for w in range(q):
                        good[w] = L[i1, G1[node, 0, w]] * L[i2, G2[node, 0, w]]
                        sg += good[w]
                    for x in range(q):
                        L[i1, x] = bad[x] / sb
                        L[i2, x] = good[x] / sg
        for i in range(N):
            tot = 0.0
            for x in range(q):
                tot += L[i, x]
            h_ent = 0.0
            root = 0.0
            for x in range(q):
                p = L[i, x] / tot
                if p > 0.0:
                    h_ent -= p * np.log(p)
                    root += np.sqrt(p)
            info = 2.0 - h_ent / log_d
            z = (root * root - 1.0) / (q - 1)
            if not have_ref[0]:
                ref[0, i] = info
                ref[1, i] = z
            info -= ref[0, i]
            z -= ref[1, i]
            acc[0, i] += info
            acc[1, i] += info * info
            acc[2, i] += z
            acc[3, i] += z * z
        have_ref[0] = True


def sample_errors(a: np.ndarray, shape, rng: np.random.Generator) -> np.ndarray:
    """I.i.d. flat error labels drawn from ``a``."""
    cdf = np.cumsum(a.reshape(-1))
    cdf[-1] = 1.0
    return np.searchsorted(cdf, rng.random(shape), side="right").astype(np.int64)


def batch_rng(seed: int, batch: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(batch)]))


def monte_carlo_metrics(tree: PolarTree, samples: int, seed: int | None = None,
                        batch_size: int | None = None, min_samples: int = 10_000) -> IndexMetrics:
    """Genie-aided Monte Carlo estimate of per-leaf ``I_cl`` and ``Z`` with standard errors.

    Batch ``b`` draws from ``SeedSequence([seed, b])`` so results do not depend on
    how batches are scheduled.
    """
    if samples < min_samples:
        raise ValueError(f"need at least {min_samples} samples, got {samples}")
    seed = tree.seed if seed is None else seed
    N = tree.N
    if batch_size is None:
        batch_size = max(1, min(samples, 2_000_000 // N))
    _, sub = group_tables(tree.d)
    lik = np.ascontiguousarray(tree.a.reshape(-1)[sub])
    G1, G2 = tree.kernel_tables
    acc = np.zeros((4, N))
    ref = np.zeros((2, N))
    have_ref = np.zeros(1, dtype=np.bool_)
    done, b = 0, 0
    while done < samples:
        m = min(batch_size, samples - done)
        E = sample_errors(tree.a, (m, N), batch_rng(seed, b))
        _genie_accumulate(E, lik, G1, G2, tree.n, np.log(tree.d), acc, ref, have_ref)
        done += m
        b += 1
    shift_i, shift_z = acc[0] / samples, acc[2] / samples
    var_i = np.clip(acc[1] / samples - shift_i**2, 0, None)
    var_z = np.clip(acc[3] / samples - shift_z**2, 0, None)
    mean_i, mean_z = ref[0] + shift_i, ref[1] + shift_z
    se_i = np.sqrt(var_i / max(samples - 1, 1))
    se_z = np.sqrt(var_z / max(samples - 1, 1))
    return IndexMetrics(tree.d, tree.n, mean_i, mean_z, se_i, se_z, "monte-carlo", samples)


def polarization_statistics(metrics: IndexMetrics, delta: float) -> dict:
    """Fractions of leaves with quantum ``I`` above ``1-delta``, below ``-1+delta``, or between."""
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    iq = metrics.I_quantum
    good = float(np.mean(iq > 1 - delta))
    bad = float(np.mean(iq < -1 + delta))
    return {"frac_good": good, "frac_bad": bad, "frac_mid": 1.0 - good - bad}


# quantum cross-checks


def good_R_coset_average_formula(R: float, d: int) -> float:
    return d / (d * d + 1) * (1 + R * R)


def good_R_coset_average_check(a, table: CosetTable | None = None) -> dict:
    """Average ``R`` of the good channel over every coset representative vs the closed form."""
    a = validate_pauli_probs(a)
    d = a.shape[0]
    if d not in (2, 3):
        raise ValueError("the dense coset average is limited to d in {2, 3}")
    table = build_coset_table(d) if table is None else table
    w = pauli_channel(a)
    vals = [renyi_bhattacharyya(combine_and_split(w, clifford_to_matrix(c))[1]) for c in table.reps]
    R = renyi_bhattacharyya(w)
    avg = float(np.mean(vals))
    target = good_R_coset_average_formula(R, d)
    return {"d": d, "R": R, "average": avg, "closed_form": target, "residual": abs(avg - target),
            "cosets": len(vals)}


def one_level_crosscheck(a, c: CliffordOp) -> dict:
    """Classical ``I_cl - 1`` of bad/good vs quantum coherent information of the split channels."""
    a = validate_pauli_probs(a)
    w = pauli_channel(a)
    qbad, qgood = combine_and_split(w, clifford_to_matrix(c))
    cbad, cgood = polar_transform(classical_counterpart(a), KernelMap.from_clifford(c))
    res = {
        "bad_quantum": coherent_info(qbad),
        "bad_classical": cbad.mutual_information() - 1,
        "good_quantum": coherent_info(qgood),
        "good_classical": cgood.mutual_information() - 1,
        "R_good_quantum": renyi_bhattacharyya(qgood),
        "R_good_classical": (1 + (cgood.q - 1) * cgood.bhattacharyya()) / a.shape[0],
    }
    res["residual"] = max(abs(res["bad_quantum"] - res["bad_classical"]),
                          abs(res["good_quantum"] - res["good_classical"]))
    return res


def base_metrics(a) -> dict:
    a = validate_pauli_probs(a)
    return {"I_quantum": pauli_coherent_info(a), "R": pauli_renyi_bhattacharyya(a)}
