"""Arithmetic over Z_d and the generalized (Weyl-Heisenberg) Pauli group.

Conventions
-----------
* ``X = sum_j |j><j+1|``, i.e. ``X|k> = |k-1>``; ``Z = diag(omega**j)`` with
  ``omega = exp(2*pi*i/d)``.  With this choice ``XZ = omega ZX``.
* ``P_{r,s} = X**r Z**s``; an n-qudit label is the vector
  ``(r_1, ..., r_n, s_1, ..., s_n)`` and qudit 1 is the leftmost tensor factor.
* Phases are stored as an exponent of ``exp(i*pi/d)`` (a square root of
  omega), modulo ``2d``.  Even ``d`` needs the half steps, e.g. ``Y = iXZ``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

#: Largest matrix dimension materialized densely unless a caller overrides it.
DENSE_CAP = 4096


def is_prime(d: int) -> bool:
    if d < 2:
        return False
    return all(d % k for k in range(2, int(d**0.5) + 1))


def require_prime(d: int, what: str = "this operation") -> None:
    if not is_prime(d):
        raise ValueError(f"{what} requires a prime qudit dimension, got d={d}")


def inv_mod(a: int, d: int) -> int:
    """Multiplicative inverse of ``a`` modulo ``d``."""
    return pow(int(a) % d, -1, d)


@dataclass(frozen=True)
class Dit:
    """An element of Z_d, always stored reduced."""

    value: int
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("modulus must be >= 2")
        object.__setattr__(self, "value", int(self.value) % self.d)

    def _other(self, other) -> int:
        if isinstance(other, Dit):
            if other.d != self.d:
                raise ValueError(f"modulus mismatch: {self.d} vs {other.d}")
            return other.value
        return int(other)

    def __add__(self, other):
        return Dit(self.value + self._other(other), self.d)

    __radd__ = __add__

    def __sub__(self, other):
        return Dit(self.value - self._other(other), self.d)

    def __neg__(self):
        return Dit(-self.value, self.d)

    def __mul__(self, other):
        return Dit(self.value * self._other(other), self.d)

    __rmul__ = __mul__

    def inverse(self) -> "Dit":
        require_prime(self.d, "Dit.inverse")
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return Dit(inv_mod(self.value, self.d), self.d)

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class PhasedPauli:
    """``exp(i*pi*phase_exp/d) * (X^r1 Z^s1 (x) ... (x) X^rn Z^sn)``."""

    d: int
    r: tuple
    s: tuple
    phase_exp: int = 0

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("qudit dimension must be >= 2")
        r = tuple(int(x) % self.d for x in self.r)
        s = tuple(int(x) % self.d for x in self.s)
        if len(r) != len(s):
            raise ValueError("r and s label vectors differ in length")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "phase_exp", int(self.phase_exp) % (2 * self.d))

    @property
    def n(self) -> int:
        return len(self.r)

    @classmethod
    def identity(cls, d: int, n: int = 1) -> "PhasedPauli":
        return cls(d, (0,) * n, (0,) * n)

    @classmethod
    def from_vector(cls, d: int, vec, phase_exp: int = 0) -> "PhasedPauli":
        vec = [int(v) for v in vec]
        n = len(vec) // 2
        return cls(d, vec[:n], vec[n:], phase_exp)

    @classmethod
    def single(cls, d: int, r: int, s: int, n: int = 1, site: int = 0, phase_exp: int = 0):
        rr = [0] * n
        ss = [0] * n
        rr[site], ss[site] = r, s
        return cls(d, rr, ss, phase_exp)

    def vector(self) -> np.ndarray:
        return np.array(self.r + self.s, dtype=np.int64)

    def is_identity_label(self) -> bool:
        return not any(self.r) and not any(self.s)

    def _check(self, other: "PhasedPauli") -> None:
        if self.d != other.d or self.n != other.n:
            raise ValueError(
                f"Pauli dimension mismatch: (d={self.d}, n={self.n}) vs (d={other.d}, n={other.n})"
            )

    def __matmul__(self, other: "PhasedPauli") -> "PhasedPauli":
        return pauli_mul(self, other)

    def dagger(self) -> "PhasedPauli":
        # (X^r Z^s)^dag = Z^-s X^-r = omega^{-rs} X^-r Z^-s
        rs = sum(a * b for a, b in zip(self.r, self.s))
        return PhasedPauli(
            self.d,
            [-x for x in self.r],
            [-x for x in self.s],
            -self.phase_exp - 2 * rs,
        )

    def power(self, k: int) -> "PhasedPauli":
        out = PhasedPauli.identity(self.d, self.n)
        base = self if k >= 0 else self.dagger()
        for _ in range(abs(k)):
            out = pauli_mul(out, base)
        return out

    def without_phase(self) -> "PhasedPauli":
        return PhasedPauli(self.d, self.r, self.s, 0)

    def __repr__(self):
        return f"PhasedPauli(d={self.d}, r={self.r}, s={self.s}, phase={self.phase_exp}/2d)"


def symplectic_form(p, q, d: int) -> int:
    """``sum_i (r_i u_i - s_i t_i) mod d`` for label vectors ``p=(r,s)``, ``q=(t,u)``."""
    p = np.asarray(p, dtype=np.int64)
    q = np.asarray(q, dtype=np.int64)
    n = len(p) // 2
    return int((p[:n] @ q[n:] - p[n:] @ q[:n]) % d)


def pauli_mul(p: PhasedPauli, q: PhasedPauli) -> PhasedPauli:
    """Product ``p*q``; the phase comes from ``Z^s X^t = omega^{-st} X^t Z^s``."""
    p._check(q)
    st = sum(a * b for a, b in zip(p.s, q.r))
    return PhasedPauli(
        p.d,
        [a + b for a, b in zip(p.r, q.r)],
        [a + b for a, b in zip(p.s, q.s)],
        p.phase_exp + q.phase_exp - 2 * st,
    )


def commutation_phase(p: PhasedPauli, q: PhasedPauli) -> int:
    """``e`` such that ``p q = omega^e q p``."""
    p._check(q)
    return symplectic_form(p.vector(), q.vector(), p.d)


@lru_cache(maxsize=None)
def shift_clock(d: int) -> tuple[np.ndarray, np.ndarray]:
    X = np.zeros((d, d), dtype=complex)
    for j in range(d):
        X[j, (j + 1) % d] = 1.0
    Z = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    X.setflags(write=False)
    Z.setflags(write=False)
    return X, Z


@lru_cache(maxsize=None)
def single_pauli_matrix(d: int, r: int, s: int) -> np.ndarray:
    X, Z = shift_clock(d)
    m = np.linalg.matrix_power(X, r % d) @ np.linalg.matrix_power(Z, s % d)
    m.setflags(write=False)
    return m


def pauli_to_matrix(p: PhasedPauli, cap: int = DENSE_CAP) -> np.ndarray:
    dim = p.d**p.n
    if dim > cap:
        raise ValueError(f"dense Pauli of dimension {dim} exceeds cap {cap}")
    out = np.ones((1, 1), dtype=complex)
    for r, s in zip(p.r, p.s):
        out = np.kron(out, single_pauli_matrix(p.d, r, s))
    return np.exp(1j * np.pi * p.phase_exp / p.d) * out


def all_paulis(d: int, n: int = 1) -> Iterator[PhasedPauli]:
    """Phaseless labels in lexicographic vector order ``(r_1..r_n, s_1..s_n)``."""
    for idx in np.ndindex(*([d] * (2 * n))):
        yield PhasedPauli.from_vector(d, idx)


def label_index(r: int, s: int, d: int) -> int:
    """Flat index of the single-qudit label ``(r, s)``; lexicographic."""
    return (r % d) * d + (s % d)


def index_label(i: int, d: int) -> tuple[int, int]:
    return divmod(int(i), d)


def group_tables(d: int) -> tuple[np.ndarray, np.ndarray]:
    """Addition and subtraction tables on flat single-qudit labels (Z_d x Z_d)."""
    q = d * d
    r, s = np.divmod(np.arange(q), d)
    add = ((r[:, None] + r[None, :]) % d) * d + (s[:, None] + s[None, :]) % d
    sub = ((r[:, None] - r[None, :]) % d) * d + (s[:, None] - s[None, :]) % d
    return add.astype(np.int64), sub.astype(np.int64)
