"""Pauli and Clifford twirls of two-qudit bilinear maps ``rho -> A rho B``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .clifford import CliffordOp, clifford_to_matrix, symplectic_group_array
from .ditmath import PhasedPauli, pauli_to_matrix


@dataclass(frozen=True, eq=False)
class BilinearMap:
    d: int
    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        D = self.d**2
        for m in (self.A, self.B):
            if np.shape(m) != (D, D):
                raise ValueError(f"bilinear map operands must be {D}x{D}")

    def __call__(self, rho):
        return self.A @ rho @ self.B


def random_bilinear(d: int, rng: np.random.Generator) -> BilinearMap:
    D = d * d
    A = rng.normal(size=(D, D)) + 1j * rng.normal(size=(D, D))
    B = rng.normal(size=(D, D)) + 1j * rng.normal(size=(D, D))
    return BilinearMap(d, A, B)


@lru_cache(maxsize=None)
def two_qudit_paulis(d: int) -> np.ndarray:
    """``P_rs (x) P_r's'`` indexed ``[r, s, r', s']``."""
    out = np.empty((d, d, d, d, d * d, d * d), dtype=complex)
    for r, s, r2, s2 in np.ndindex(d, d, d, d):
        out[r, s, r2, s2] = pauli_to_matrix(PhasedPauli(d, (r, r2), (s, s2)))
    out.setflags(write=False)
    return out


def pauli_expand(M: np.ndarray, d: int) -> np.ndarray:
    """Coefficients ``c[r,s,r',s'] = tr((P_rs (x) P_r's')^dag M) / d^2``."""
    M = np.asarray(M)
    if M.shape != (d * d, d * d):
        raise ValueError(f"expected a {d * d}x{d * d} matrix")
    P = two_qudit_paulis(d)
    return np.einsum("abcdji,ji->abcd", P.conj(), M) / d**2


def pauli_resum(coef: np.ndarray, d: int) -> np.ndarray:
    return np.einsum("abcd,abcdij->ij", coef, two_qudit_paulis(d))


def pauli_basis_inputs(d: int) -> np.ndarray:
    return two_qudit_paulis(d).reshape(-1, d * d, d * d)


def pauli_twirl_gamma(m: BilinearMap) -> np.ndarray:
    """Pauli-channel weights ``gamma[t,u,t',u'] = w^{tu+t'u'} alpha(t,u,t',u') beta(-t,-u,-t',-u')``."""
    d = m.d
    alpha = pauli_expand(m.A, d)
    beta = pauli_expand(m.B, d)
    neg = (-np.arange(d)) % d
    beta_neg = beta[np.ix_(neg, neg, neg, neg)]
    t = np.arange(d)
    phase = np.exp(2j * np.pi / d * (np.outer(t, t)[:, :, None, None] + np.outer(t, t)[None, None, :, :]))
    return phase * alpha * beta_neg


def apply_pauli_channel(gamma: np.ndarray, rho: np.ndarray, d: int) -> np.ndarray:
    P = two_qudit_paulis(d)
    return np.einsum("abcd,abcdij,jk,abcdlk->il", gamma, P, rho, P.conj())


def pauli_twirl_bruteforce(m: BilinearMap, rho: np.ndarray) -> np.ndarray:
    """Average of ``P^dag A P rho P^dag B P`` over the d^4 phaseless Paulis."""
    P = two_qudit_paulis(m.d).reshape(-1, m.d**2, m.d**2)
    Pd = np.conj(np.transpose(P, (0, 2, 1)))
    AP = Pd @ m.A @ P
    BP = Pd @ m.B @ P
    return (AP @ rho @ BP).mean(axis=0)


def clifford_twirl_coefficients(m: BilinearMap) -> tuple[float, float]:
    """``(tr(AB)/d^4, (d^2 trA trB - tr(AB)) / (d^2 (d^4 - 1)))``."""
    d = m.d
    trAB = np.trace(m.A @ m.B)
    trA, trB = np.trace(m.A), np.trace(m.B)
    c0 = trAB / d**4
    c1 = (d**2 * trA * trB - trAB) / (d**2 * (d**4 - 1))
    return c0, c1


def apply_clifford_twirl(coeffs, rho: np.ndarray, d: int) -> np.ndarray:
    """Linear extension ``tr(rho) c0 1 + c1 (rho - tr(rho) 1/d^2)``."""
    c0, c1 = coeffs
    eye = np.eye(d * d)
    tr = np.trace(rho)
    return tr * c0 * eye + c1 * (rho - tr * eye / d**2)


def twirl_identities(m: BilinearMap, rho: np.ndarray | None = None) -> dict:
    """Residuals of the three trace identities behind the Clifford-twirl formula."""
    d = m.d
    gamma = pauli_twirl_gamma(m)
    res = {
        "gamma0": abs(gamma[0, 0, 0, 0] - np.trace(m.A) * np.trace(m.B) / d**4),
        "gamma_sum": abs(gamma.sum() - np.trace(m.A @ m.B) / d**2),
    }
    if rho is not None:
        P = pauli_basis_inputs(d)
        total = np.einsum("kij,jl,kml->im", P, rho, P.conj())
        res["pauli_sum"] = float(np.abs(total - d**2 * np.trace(rho) * np.eye(d * d)).max())
    return res


def clifford_twirl_analytic(m: BilinearMap, rho: np.ndarray | None = None):
    """Return the two twirl coefficients and the identity residuals for ``m``."""
    return clifford_twirl_coefficients(m), twirl_identities(m, rho)


def symplectic_twirl_gamma(gamma: np.ndarray, d: int, group: np.ndarray | None = None) -> np.ndarray:
    """Average a two-qudit Pauli channel over conjugation by every symplectic matrix.

    Works on labels only: ``C^dag P C`` carries label ``S p`` and phases cancel in
    ``P rho P^dag``.
    """
    group = symplectic_group_array(2, d) if group is None else group
    vecs = np.array(list(np.ndindex(d, d, d, d)))  # (r, s, r', s') ordering
    # label layout of a vector is (r1, r2, s1, s2)
    lab = vecs[:, [0, 2, 1, 3]]
    g = gamma.reshape(-1)
    out = np.zeros(d**4, dtype=complex)
    weights = d ** np.array([3, 1, 2, 0])  # back to (r, s, r', s') flat index
    for S in group:
        img = (lab @ S.T) % d
        np.add.at(out, img @ weights, g)
    return (out / len(group)).reshape(d, d, d, d)


def numeric_twirl(m: BilinearMap, unitaries: np.ndarray, inputs: np.ndarray | None = None) -> np.ndarray:
    """``(1/|U|) sum_U U^dag m(U rho U^dag) U`` on each input (default: Pauli basis)."""
    U = np.asarray(unitaries)
    if U.ndim != 3 or len(U) == 0:
        raise ValueError("need a non-empty stack of unitaries")
    inputs = pauli_basis_inputs(m.d) if inputs is None else inputs
    Ud = np.conj(np.transpose(U, (0, 2, 1)))
    AU = Ud @ m.A @ U
    BU = Ud @ m.B @ U
    # pairwise-stable: sum in float via einsum over the group axis
    return np.einsum("kij,bjl,klm->bim", AU, inputs, BU, optimize=True) / len(U)


def analytic_on_inputs(m: BilinearMap, inputs: np.ndarray | None = None) -> np.ndarray:
    inputs = pauli_basis_inputs(m.d) if inputs is None else inputs
    coeffs = clifford_twirl_coefficients(m)
    return np.stack([apply_clifford_twirl(coeffs, rho, m.d) for rho in inputs])


@lru_cache(maxsize=None)
def projective_clifford_unitaries(d: int, with_paulis: bool = True) -> np.ndarray:
    """Dense unitaries for every symplectic matrix, optionally times every Pauli.

    With Paulis this is the two-qudit Clifford group modulo global phase
    (d^4 |Sp(4, d)| elements).
    """
    base = np.stack([clifford_to_matrix(CliffordOp(d, 2, S)) for S in symplectic_group_array(2, d)])
    if not with_paulis:
        return base
    P = pauli_basis_inputs(d)
    out = np.einsum("kij,pjl->kpil", base, P).reshape(-1, d * d, d * d)
    out.setflags(write=False)
    return out


def unitary_2design_lower_bound(dim: int) -> int:
    return dim**4 - 2 * dim**2 + 2


def two_design_audit(unitaries: np.ndarray, d: int, n_maps: int = 20, seed: int = 0,
                     tol: float = 1e-9, set_name: str = "custom") -> dict:
    """Max residual of the numeric twirl against the Clifford-twirl formula."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_maps):
        m = random_bilinear(d, rng)
        diff = numeric_twirl(m, unitaries) - analytic_on_inputs(m)
        worst = max(worst, float(np.abs(diff).max()))
    bound = unitary_2design_lower_bound(d * d)
    size = len(unitaries)
    return {
        "d": d,
        "set_name": set_name,
        "set_size": size,
        "max_residual": worst,
        "residual_pass": worst < tol,
        "size_lower_bound": bound,
        "bound_d8": "pass" if size >= bound else "fail",
        "pass": bool(worst < tol and size >= bound),
    }
