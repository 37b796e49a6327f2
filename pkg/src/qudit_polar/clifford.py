"""Clifford operations as symplectic matrices over Z_d plus generator phases.

A :class:`CliffordOp` ``C`` is stored through its conjugation action
``P -> C^dag P C``.  Column ``i`` of ``sympl`` is the label vector of the image
of generator ``i``, generators ordered ``X_1..X_n, Z_1..Z_n``; ``gen_phases[i]``
is the phase exponent (units of ``exp(i*pi/d)``) of that image.  Under this
convention ``sympl(A @ B) = sympl(B) @ sympl(A)``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .ditmath import (
    DENSE_CAP,
    PhasedPauli,
    inv_mod,
    pauli_mul,
    pauli_to_matrix,
    require_prime,
    symplectic_form,
)


def symplectic_j(n: int) -> np.ndarray:
    eye = np.eye(n, dtype=np.int64)
    zero = np.zeros((n, n), dtype=np.int64)
    return np.block([[zero, eye], [-eye, zero]])


def is_symplectic(S: np.ndarray, d: int) -> bool:
    S = np.asarray(S, dtype=np.int64)
    J = symplectic_j(S.shape[0] // 2)
    return bool(np.all((S.T @ J @ S - J) % d == 0))


def symplectic_inverse(S: np.ndarray, d: int) -> np.ndarray:
    J = symplectic_j(S.shape[0] // 2)
    return (-J @ S.T @ J) % d


def canonical_phase(vec, d: int) -> int:
    """Phase exponent making ``exp(i*pi*lam/d) P_vec`` an order-d operator.

    Odd d needs an even exponent; even d needs ``lam = sum(r*s) (mod 2)``.
    """
    if d % 2:
        return 0
    vec = np.asarray(vec, dtype=np.int64)
    n = len(vec) // 2
    return int(vec[:n] @ vec[n:]) % 2


def _has_order_d(p: PhasedPauli) -> bool:
    return (p.phase_exp - canonical_phase(p.vector(), p.d)) % 2 == 0


def _generators(d: int, n: int) -> list[PhasedPauli]:
    eye = np.eye(2 * n, dtype=np.int64)
    return [PhasedPauli.from_vector(d, eye[:, i]) for i in range(2 * n)]


@dataclass(frozen=True, eq=False)
class CliffordOp:
    d: int
    n: int
    sympl: np.ndarray
    gen_phases: tuple = field(default=())

    def __post_init__(self):
        S = np.array(self.sympl, dtype=np.int64) % self.d
        if S.shape != (2 * self.n, 2 * self.n):
            raise ValueError(f"symplectic matrix must be {2 * self.n}x{2 * self.n}")
        S.setflags(write=False)
        object.__setattr__(self, "sympl", S)
        phases = self.gen_phases
        if not phases:
            phases = tuple(canonical_phase(S[:, i], self.d) for i in range(2 * self.n))
        phases = tuple(int(p) % (2 * self.d) for p in phases)
        if len(phases) != 2 * self.n:
            raise ValueError("need one phase per generator")
        object.__setattr__(self, "gen_phases", phases)

    @classmethod
    def identity(cls, d: int, n: int) -> "CliffordOp":
        return cls(d, n, np.eye(2 * n, dtype=np.int64))

    @classmethod
    def from_symplectic(cls, S, d: int) -> "CliffordOp":
        S = np.asarray(S, dtype=np.int64) % d
        if not is_symplectic(S, d):
            raise ValueError("matrix is not symplectic mod d")
        return cls(d, S.shape[0] // 2, S)

    def images(self) -> list[PhasedPauli]:
        return [
            PhasedPauli.from_vector(self.d, self.sympl[:, i], self.gen_phases[i])
            for i in range(2 * self.n)
        ]

    def key(self) -> tuple:
        return (self.d, self.n, self.sympl.tobytes(), self.gen_phases)

    def __eq__(self, other):
        return isinstance(other, CliffordOp) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __matmul__(self, other: "CliffordOp") -> "CliffordOp":
        return compose(self, other)

    def __repr__(self):
        return f"CliffordOp(d={self.d}, n={self.n}, sympl={self.sympl.tolist()}, phases={self.gen_phases})"


def clifford_from_images(images: Sequence[PhasedPauli]) -> CliffordOp:
    """Build the Clifford whose conjugation sends generator ``i`` to ``images[i]``."""
    images = list(images)
    if not images or len(images) % 2:
        raise ValueError("need 2n generator images")
    d, n = images[0].d, images[0].n
    if len(images) != 2 * n:
        raise ValueError(f"{len(images)} images given for {n} qudits")
    gens = _generators(d, n)
    for i, j in itertools.combinations(range(2 * n), 2):
        want = symplectic_form(gens[i].vector(), gens[j].vector(), d)
        got = symplectic_form(images[i].vector(), images[j].vector(), d)
        if want != got:
            raise ValueError(
                f"images {i} and {j} have commutation phase {got}, generators require {want}"
            )
    for i, img in enumerate(images):
        if not _has_order_d(img):
            raise ValueError(f"image {i} does not have order d; phase {img.phase_exp} invalid")
    S = np.stack([img.vector() for img in images], axis=1)
    return CliffordOp(d, n, S, tuple(img.phase_exp for img in images))


def conjugate(c: CliffordOp, p: PhasedPauli) -> PhasedPauli:
    """``C^dag p C``; labels map linearly through ``c.sympl``."""
    if p.d != c.d or p.n != c.n:
        raise ValueError(f"dimension mismatch: Clifford (d={c.d}, n={c.n}) vs Pauli (d={p.d}, n={p.n})")
    imgs = c.images()
    out = PhasedPauli(c.d, (0,) * c.n, (0,) * c.n, p.phase_exp)
    exps = p.r + p.s
    for img, k in zip(imgs, exps):
        for _ in range(k):
            out = pauli_mul(out, img)
    return out


def conjugate_label(c: CliffordOp, vec) -> np.ndarray:
    return (c.sympl @ np.asarray(vec, dtype=np.int64)) % c.d


def compose(a: CliffordOp, b: CliffordOp) -> CliffordOp:
    """The Clifford of the unitary product ``a @ b``."""
    if (a.d, a.n) != (b.d, b.n):
        raise ValueError("dimension mismatch in compose")
    imgs = [conjugate(b, img) for img in a.images()]
    return CliffordOp(a.d, a.n, np.stack([p.vector() for p in imgs], axis=1),
                      tuple(p.phase_exp for p in imgs))


def _solve_form(S: np.ndarray, t: np.ndarray, d: int) -> np.ndarray:
    # q with form(S e_i, q) = t_i, i.e. S^T J q = t
    J = symplectic_j(S.shape[0] // 2)
    return (-J @ symplectic_inverse(S, d).T @ t) % d


def inverse(c: CliffordOp) -> CliffordOp:
    v0 = CliffordOp(c.d, c.n, symplectic_inverse(c.sympl, c.d))
    residual = [conjugate(v0, img).phase_exp for img in c.images()]
    # Pauli Q inserted before v0 shifts residual phase i by 2*form(img_i, q)
    t = np.array([(-(r // 2)) % c.d for r in residual], dtype=np.int64)
    q = _solve_form(c.sympl, t, c.d)
    phases = [
        (ph + 2 * symplectic_form(g.vector(), q, c.d)) % (2 * c.d)
        for ph, g in zip(v0.gen_phases, _generators(c.d, c.n))
    ]
    return CliffordOp(c.d, c.n, v0.sympl, tuple(phases))


# --------------------------------------------------------------------------
# dense synthesis


def matrix_to_pauli(M: np.ndarray, d: int, n: int, atol: float = 1e-9) -> PhasedPauli:
    """Read a (phased) Pauli off a dense matrix; raise if it is not one."""
    dim = d**n
    row0 = M[0]
    col = int(np.argmax(np.abs(row0)))
    if abs(row0[col]) < 0.5:
        raise ValueError("matrix is not a Pauli operator")
    r = np.array(np.unravel_index(col, (d,) * n))
    s = np.zeros(n, dtype=np.int64)
    for k in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[k] = 1
        row = int(np.ravel_multi_index(tuple(e), (d,) * n))
        colk = int(np.ravel_multi_index(tuple((e + r) % d), (d,) * n))
        ratio = M[row, colk] / row0[col]
        s[k] = int(round(np.angle(ratio) / (2 * np.pi / d))) % d
    # M[0, r] = phase * omega^{s.r}
    phase = row0[col] / np.exp(2j * np.pi * int(s @ r) / d)
    lam = int(round(np.angle(phase) / (np.pi / d))) % (2 * d)
    p = PhasedPauli(d, r, s, lam)
    if M.shape != (dim, dim) or not np.allclose(pauli_to_matrix(p), M, atol=atol):
        raise ValueError("matrix is not a Pauli operator")
    return p


def clifford_of_unitary(U: np.ndarray, d: int, n: int) -> CliffordOp:
    """Read the conjugation action ``P -> U^dag P U`` off a dense Clifford unitary."""
    imgs = [
        matrix_to_pauli(U.conj().T @ pauli_to_matrix(g) @ U, d, n)
        for g in _generators(d, n)
    ]
    return CliffordOp(d, n, np.stack([p.vector() for p in imgs], axis=1),
                      tuple(p.phase_exp for p in imgs))


@lru_cache(maxsize=None)
def _gate_matrix(name: str, d: int, param: int = 0) -> np.ndarray:
    j = np.arange(d)
    if name == "F":
        m = np.exp(2j * np.pi * np.outer(j, j) / d) / np.sqrt(d)
    elif name == "P":
        m = np.diag(np.exp(1j * np.pi * (j * (j + d)) / d))
    elif name == "M":
        m = np.zeros((d, d), dtype=complex)
        m[(param * j) % d, j] = 1.0
    elif name == "SUM":
        m = np.zeros((d * d, d * d), dtype=complex)
        for a in range(d):
            for b in range(d):
                m[a * d + (a + b) % d, a * d + b] = 1.0
    elif name == "SWAP":
        m = np.zeros((d * d, d * d), dtype=complex)
        for a in range(d):
            for b in range(d):
                m[b * d + a, a * d + b] = 1.0
    else:
        raise KeyError(name)
    m.setflags(write=False)
    return m


def _embed(gate: np.ndarray, d: int, n: int, sites: tuple) -> np.ndarray:
    """Dense n-qudit matrix of a 1- or 2-qudit gate acting on ``sites``."""
    k = len(sites)
    letters = "abcdefghijklmnopqrstuvwxyz"
    outs = list(letters[:n])
    ins = list(letters[n:2 * n])
    g_out = [letters[2 * n + i] for i in range(k)]
    g_in = [ins[s] for s in sites]
    for i, s in enumerate(sites):
        outs[s] = g_out[i]
    eye_terms = ",".join(f"{ins[a]}{outs[a]}" for a in range(n) if a not in sites)
    subs = "".join(g_out) + "".join(g_in)
    if eye_terms:
        subs += "," + eye_terms
    subs += "->" + "".join(outs) + "".join(ins)
    ops = [gate.reshape((d,) * (2 * k))] + [np.eye(d)] * (n - k)
    return np.einsum(subs, *ops).reshape(d**n, d**n)


@lru_cache(maxsize=None)
def _gate_sympl(name: str, d: int, param: int = 0) -> np.ndarray:
    m = _gate_matrix(name, d, param)
    k = 1 if m.shape[0] == d else 2
    S = clifford_of_unitary(m, d, k).sympl.copy()
    S.setflags(write=False)
    return S


def _embed_sympl(Sg: np.ndarray, n: int, sites: tuple) -> np.ndarray:
    k = len(sites)
    idx = list(sites) + [n + s for s in sites]
    out = np.eye(2 * n, dtype=np.int64)
    for a in range(2 * k):
        for b in range(2 * k):
            out[idx[a], idx[b]] = Sg[a, b]
    return out


@lru_cache(maxsize=None)
def _single_qudit_words(d: int) -> dict:
    """Map each 2x2 symplectic (as bytes) to a shortest gate word realizing it."""
    alphabet = [("F", 0), ("P", 0)] + [("M", a) for a in range(2, d)]
    start = np.eye(2, dtype=np.int64)
    words = {start.tobytes(): (start, ())}
    queue = deque([start])
    while queue:
        S = queue.popleft()
        word = words[S.tobytes()][1]
        for g in alphabet:
            T = (_gate_sympl(g[0], d, g[1]) @ S) % d
            if T.tobytes() not in words:
                words[T.tobytes()] = (T, word + (g,))
                queue.append(T)
    return words


def _synthesis_word(S: np.ndarray, d: int) -> list:
    """Gates ``g_1..g_k`` (with sites) such that ``S_gk ... S_g1 S = I``."""
    n = S.shape[0] // 2
    T = np.array(S, dtype=np.int64) % d
    gates = []
    words = _single_qudit_words(d)

    def apply(name, param, sites):
        nonlocal T
        Sg = _embed_sympl(_gate_sympl(name, d, param), n, sites)
        T = (Sg @ T) % d
        gates.append((name, param, sites))

    def apply_word(M_target_pred, k):
        for M, word in words.values():
            if M_target_pred(M):
                for name, param in word:
                    apply(name, param, (k,))
                return
        raise RuntimeError("no single-qudit Clifford found")

    def comp(col, k):
        return np.array([T[k, col], T[n + k, col]])

    for j in range(n):
        xc, zc = j, n + j
        # image of X_j -> X_j
        for k in range(j, n):
            v = comp(xc, k)
            if v.any():
                apply_word(lambda M, v=v: np.array_equal((M @ v) % d, [1, 0]), k)
        if T[j, xc] == 0:
            k = next(k for k in range(j + 1, n) if T[k, xc])
            apply("SWAP", 0, (j, k))
        for k in range(j + 1, n):
            if not T[k, xc]:
                continue
            for sites, m in itertools.product([(j, k), (k, j)], range(1, d)):
                Sg = np.linalg.matrix_power(_embed_sympl(_gate_sympl("SUM", d), n, sites), m) % d
                x_new = (Sg @ T[:, xc]) % d
                if x_new[k] == 0 and x_new[n + k] == 0 and x_new[j] == 1:
                    for _ in range(m):
                        apply("SUM", 0, sites)
                    break
            else:
                raise RuntimeError("SUM elimination failed")
        # image of Z_j -> Z_j while fixing X_j
        for k in range(j + 1, n):
            v = comp(zc, k)
            if not v.any():
                continue
            apply_word(lambda M, v=v: np.array_equal((M @ v) % d, [0, 1]), k)
            for sites, m in itertools.product([(k, j), (j, k)], range(1, d)):
                Sg = np.linalg.matrix_power(_embed_sympl(_gate_sympl("SUM", d), n, sites), m) % d
                x_new = (Sg @ T[:, xc]) % d
                z_new = (Sg @ T[:, zc]) % d
                if np.array_equal(x_new, T[:, xc]) and z_new[k] == 0 and z_new[n + k] == 0:
                    for _ in range(m):
                        apply("SUM", 0, sites)
                    break
            else:
                raise RuntimeError("SUM elimination failed")
        t = comp(zc, j)
        apply_word(
            lambda M, t=t: np.array_equal(M[:, 0], [1, 0]) and np.array_equal((M @ t) % d, [0, 1]),
            j,
        )
    if not np.array_equal(T, np.eye(2 * n, dtype=np.int64)):
        raise RuntimeError("symplectic reduction did not reach the identity")
    return gates


def clifford_to_matrix(c: CliffordOp, cap: int = DENSE_CAP) -> np.ndarray:
    """Dense unitary ``U`` with ``U^dag P U`` equal to ``conjugate(c, P)``.

    Built from Fourier, phase, multiplication, SUM and SWAP gates, then a
    Pauli correction fixes the generator phases.
    """
    require_prime(c.d, "Clifford synthesis")
    d, n = c.d, c.n
    if d**n > cap:
        raise ValueError(f"dimension {d**n} exceeds dense cap {cap}")
    U = np.eye(d**n, dtype=complex)
    for name, param, sites in _synthesis_word(c.sympl, d):
        # U = G_k^dag ... G_1^dag
        U = _embed(_gate_matrix(name, d, param), d, n, sites).conj().T @ U
    actual = clifford_of_unitary(U, d, n)
    if not np.array_equal(actual.sympl, c.sympl):
        raise RuntimeError("synthesized unitary has the wrong symplectic action")
    # left Pauli Q shifts generator phase i by 2*form(g_i, q)
    diff = [((want - got) % (2 * d)) // 2 for want, got in zip(c.gen_phases, actual.gen_phases)]
    q = np.zeros(2 * n, dtype=np.int64)
    for j in range(n):
        q[n + j] = diff[j] % d  # form(X_j, q) = u_j
        q[j] = (-diff[n + j]) % d  # form(Z_j, q) = -t_j
    return pauli_to_matrix(PhasedPauli.from_vector(d, q), cap) @ U


# --------------------------------------------------------------------------
# enumeration and counting


def enumerate_symplectic(n: int, d: int) -> Iterator[np.ndarray]:
    """Each element of Sp(2n, Z_d) exactly once (n <= 2, d prime)."""
    require_prime(d, "Clifford enumeration")
    if n not in (1, 2):
        raise ValueError("enumeration is limited to n in {1, 2}")
    vecs = np.array(list(itertools.product(range(d), repeat=2 * n)), dtype=np.int64)
    J = symplectic_j(n)
    F = (vecs @ J @ vecs.T) % d
    nonzero = np.flatnonzero(vecs.any(axis=1))

    def pairs(allowed):
        for xi in allowed:
            if xi == 0:
                continue
            for zi in allowed[F[xi, allowed] == 1]:
                yield xi, zi

    everything = np.arange(len(vecs))
    for x1, z1 in pairs(nonzero):
        if n == 1:
            yield np.stack([vecs[x1], vecs[z1]], axis=1)
            continue
        rest = everything[(F[x1] == 0) & (F[z1] == 0)]
        for x2, z2 in pairs(rest):
            yield np.stack([vecs[x1], vecs[x2], vecs[z1], vecs[z2]], axis=1)


def enumerate_cliffords(n: int, d: int) -> Iterator[CliffordOp]:
    """Projective (Pauli- and phase-free) Cliffords, one per symplectic matrix."""
    for S in enumerate_symplectic(n, d):
        yield CliffordOp(d, n, S)


@lru_cache(maxsize=None)
def symplectic_group_array(n: int, d: int) -> np.ndarray:
    arr = np.array(list(enumerate_symplectic(n, d)), dtype=np.int64)
    arr.setflags(write=False)
    return arr


def clifford_group_order(n: int, d: int) -> int:
    """Group order counted with Pauli translations, as in the qudit literature."""
    sp = d ** (n * n)
    for j in range(1, n + 1):
        sp *= d ** (2 * j) - 1
    return sp * d ** (2 * n)


def count_anticommuting_pairs(d: int) -> int:
    """Ordered pairs ``(P_rs, P_tu)`` with ``ru - st = 1 (mod d)``, by brute force."""
    r, s, t, u = np.meshgrid(*([np.arange(d)] * 4), indexing="ij")
    return int(np.count_nonzero((r * u - s * t) % d == 1))


# --------------------------------------------------------------------------
# cosets of C_d^1 (x) C_d^1 in C_d^2


@lru_cache(maxsize=None)
def _sl2(d: int) -> np.ndarray:
    mats = [
        np.array([[a, b], [c, e]])
        for a, b, c, e in itertools.product(range(d), repeat=4)
        if (a * e - b * c) % d == 1
    ]
    arr = np.array(mats, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def local_symplectic(M1, M2) -> np.ndarray:
    """Symplectic of ``C_1 (x) C_2`` from the single-qudit 2x2 blocks."""
    S = np.zeros((4, 4), dtype=np.int64)
    S[np.ix_([0, 2], [0, 2])] = M1
    S[np.ix_([1, 3], [1, 3])] = M2
    return S


def canonical_coset_rep(S: np.ndarray, d: int) -> np.ndarray:
    """Lexicographically smallest (row-major) ``L S`` over local symplectic ``L``.

    Row order is ``(r1, r2, s1, s2)``: the qudit-1 block owns rows 0 and 2 and
    the qudit-2 block rows 1 and 3, so the two minimizations decouple.
    """
    S = np.asarray(S, dtype=np.int64) % d
    sl = _sl2(d)
    weights = d ** np.arange(7, -1, -1, dtype=np.int64)
    out = np.empty_like(S)
    for rows in ([0, 2], [1, 3]):
        cand = np.einsum("mab,bc->mac", sl, S[rows]) % d
        best = cand[int(np.argmin(cand.reshape(len(sl), 8) @ weights))]
        out[rows] = best
    return out


@dataclass(frozen=True, eq=False)
class CosetTable:
    d: int
    reps: list
    identity_id: int
    swap_id: int
    swap_orbit: np.ndarray
    index: dict = field(repr=False, default_factory=dict)

    def __len__(self):
        return len(self.reps)

    def coset_id(self, c) -> int:
        S = c.sympl if isinstance(c, CliffordOp) else np.asarray(c)
        return self.index[canonical_coset_rep(S, self.d).tobytes()]

    def reduced_ids(self) -> list[int]:
        """Coset ids of L' (everything except the identity and swap cosets)."""
        return [i for i in range(len(self.reps)) if i not in (self.identity_id, self.swap_id)]

    def reduced(self) -> list[CliffordOp]:
        return [self.reps[i] for i in self.reduced_ids()]

    def swap_fixed_points(self, ids=None) -> list[int]:
        ids = self.reduced_ids() if ids is None else ids
        return [i for i in ids if self.swap_orbit[i] == i]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "reps": [c.sympl.reshape(-1).tolist() for c in self.reps],
            "identity_id": self.identity_id,
            "swap_id": self.swap_id,
            "swap_orbit": [int(x) for x in self.swap_orbit],
        }


def build_coset_table(d: int, max_d: int = 7) -> CosetTable:
    require_prime(d, "coset construction")
    if d > max_d:
        raise ValueError(f"d={d} exceeds the enumeration budget (max_d={max_d})")
    gens = [
        _embed_sympl(_gate_sympl(name, d), 2, sites)
        for name, sites in [("F", (0,)), ("F", (1,)), ("P", (0,)), ("P", (1,)), ("SUM", (0, 1))]
    ]
    start = canonical_coset_rep(np.eye(4, dtype=np.int64), d)
    seen = {start.tobytes(): 0}
    reps = [start]
    queue = deque([start])
    while queue:
        S = queue.popleft()
        for G in gens:
            # left multiplication of the unitary by a gate: S -> S @ S_G
            T = canonical_coset_rep(S @ G, d)
            key = T.tobytes()
            if key not in seen:
                seen[key] = len(reps)
                reps.append(T)
                queue.append(T)
    order = sorted(range(len(reps)), key=lambda i: tuple(reps[i].reshape(-1)))
    reps = [reps[i] for i in order]
    index = {S.tobytes(): i for i, S in enumerate(reps)}
    swap = _gate_sympl("SWAP", d)
    orbit = np.array(
        [index[canonical_coset_rep(S @ swap, d).tobytes()] for S in reps], dtype=np.int64
    )
    return CosetTable(
        d=d,
        reps=[CliffordOp(d, 2, S) for S in reps],
        identity_id=index[canonical_coset_rep(np.eye(4, dtype=np.int64), d).tobytes()],
        swap_id=index[canonical_coset_rep(swap, d).tobytes()],
        swap_orbit=orbit,
        index=index,
    )


def swap_symplectic(d: int) -> np.ndarray:
    return _gate_sympl("SWAP", d).copy()


def sum_gate(d: int) -> CliffordOp:
    return clifford_of_unitary(_gate_matrix("SUM", d), d, 2)


def swap_gate(d: int) -> CliffordOp:
    return clifford_of_unitary(_gate_matrix("SWAP", d), d, 2)


def fourier_gate(d: int) -> CliffordOp:
    return clifford_of_unitary(_gate_matrix("F", d), d, 1)


def _swap_relation_holds(S_C: np.ndarray, L: np.ndarray, d: int) -> bool:
    # S C = C L as unitaries  <=>  S_C S_swap = S_L S_C
    return np.array_equal((S_C @ swap_symplectic(d)) % d, (L @ S_C) % d)


def d5_swap_fixed_clifford() -> CliffordOp:
    """The d=5 two-qudit Clifford whose coset is fixed by the swap."""
    d = 5

    def two(r1, s1, r2, s2):
        return PhasedPauli(d, (r1, r2), (s1, s2))

    return clifford_from_images([
        two(4, 1, 4, 1),  # X (x) I
        two(4, 1, 1, 4),  # I (x) X
        two(1, 1, 1, 1),  # Z (x) I
        two(1, 1, 4, 4),  # I (x) Z
    ])


def verify_swap_fixed_example(c2=None) -> bool:
    """Check ``S C = C (C_1 (x) C_2)`` at label level for the d=5 example.

    ``C_1 = I`` and by default ``C_2 = C_2' X^2 Z^2`` with ``C_2'`` mapping
    ``X -> X^4, Z -> Z^4``; the Pauli factor does not change labels.
    """
    d = 5
    C = d5_swap_fixed_clifford()
    if c2 is None:
        minus = CliffordOp(d, 1, -np.eye(2, dtype=np.int64))
        c2 = minus
    L = local_symplectic(np.eye(2, dtype=np.int64), c2.sympl)
    # C (C1 (x) C2): sympl = S_local @ S_C ;  S C: sympl = S_C @ S_swap
    return _swap_relation_holds(C.sympl, L, d)


def search_swap_fixed(d: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """All ``(S_C, L)`` with ``S C = C L`` for local ``L``; exhaustive over Sp(4, d)."""
    group = symplectic_group_array(2, d)
    swap = swap_symplectic(d)
    found = []
    for S in group:
        M = (S @ swap @ symplectic_inverse(S, d)) % d
        if not M[np.ix_([0, 2], [1, 3])].any() and not M[np.ix_([1, 3], [0, 2])].any():
            found.append((S, M))
    return found
