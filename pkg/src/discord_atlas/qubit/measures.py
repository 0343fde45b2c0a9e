"""Entanglement measures for two- and three-qubit states."""

from __future__ import annotations

import numpy as np

from ..core import (
    DensityMatrix,
    PureState,
    as_density,
    binary_entropy,
    partial_trace,
    partial_transpose,
    von_neumann_entropy,
)

CONVENTIONS = ("oufan", "half")

_SIGMA_Y2 = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])


def _two_qubit(rho) -> DensityMatrix:
    rho = as_density(rho)
    if rho.dims != (2, 2):
        raise ValueError(f"expected a two-qubit state, got dims {rho.dims}")
    return rho


def _three_qubit(psi) -> PureState:
    if not isinstance(psi, PureState):
        psi = PureState(np.asarray(psi))
    if psi.dims != (2, 2, 2):
        raise ValueError(f"expected a three-qubit pure state, got dims {psi.dims}")
    return psi


def pt_spectrum(rho, subsystems=(0,)) -> np.ndarray:
    """Ascending spectrum of the partial transpose over ``subsystems``."""
    return np.linalg.eigvalsh(partial_transpose(rho, subsystems).data)


def negativity(rho, subsystems=(0,), convention: str = "oufan") -> float:
    """Negativity of the bipartition ``subsystems`` | rest.

    ``oufan`` is ||rho^T||_1 - 1; ``half`` is that divided by two.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown negativity convention {convention!r}")
    rho = as_density(rho)
    if np.isscalar(subsystems):
        subsystems = (subsystems,)
    if not subsystems or len(set(subsystems)) >= len(rho.dims):
        raise ValueError(f"{tuple(subsystems)} is not a proper bipartition of {len(rho.dims)} subsystems")
    ev = pt_spectrum(rho, subsystems)
    n = float(np.sum(np.abs(ev)) - 1.0)
    n = max(n, 0.0)
    return n / 2 if convention == "half" else n


def concurrence(rho) -> float:
    """Wootters concurrence.

    The lambdas are the singular values of sqrt(rho) (Y x Y) sqrt(rho)^*, which
    avoids square-rooting tiny eigenvalues of rho * rho_tilde.
    """
    rho = _two_qubit(rho).data
    w, v = np.linalg.eigh(rho)
    sq = (v * np.sqrt(np.clip(w, 0, None))) @ v.conj().T
    lam = np.linalg.svd(sq @ _SIGMA_Y2 @ sq.conj(), compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def eof_from_concurrence(c: float) -> float:
    c = min(max(c, 0.0), 1.0)
    return binary_entropy((1 + np.sqrt(1 - c * c)) / 2)


def eof_two_qubit(rho) -> float:
    """Entanglement of formation in bits."""
    return eof_from_concurrence(concurrence(rho))


def mutual_information(rho) -> float:
    """S(A) + S(B) - S(AB) for a bipartite state."""
    rho = as_density(rho)
    if len(rho.dims) != 2:
        raise ValueError("mutual information needs a bipartite state")
    return (
        von_neumann_entropy(partial_trace(rho, [0]))
        + von_neumann_entropy(partial_trace(rho, [1]))
        - von_neumann_entropy(rho)
    )


def pi_tangle_terms(psi) -> tuple[float, float, float]:
    """Residual tangles (pi_A, pi_B, pi_C) with oufan negativities."""
    psi = _three_qubit(psi)
    rho = psi.to_density()
    pair = {
        (0, 1): negativity(partial_trace(psi, [0, 1])),
        (0, 2): negativity(partial_trace(psi, [0, 2])),
        (1, 2): negativity(partial_trace(psi, [1, 2])),
    }
    terms = []
    for i in range(3):
        j, k = (x for x in range(3) if x != i)
        one_vs_rest = negativity(rho, (i,))
        terms.append(one_vs_rest**2 - pair[tuple(sorted((i, j)))] ** 2 - pair[tuple(sorted((i, k)))] ** 2)
    return tuple(terms)


def pi_tangle(psi) -> float:
    """Average of the three residual tangles."""
    return float(np.mean(pi_tangle_terms(psi)))
