"""The separable rank-2 two-qubit family and its three-qubit purification.

    rho_AB = q |00><00| + (1-q) |alpha beta><alpha beta|
    |psi>_ABC = sqrt(q) |000> + sqrt(1-q) e^{i phase_mix} |alpha>|beta>|1>

with |alpha> = cos(alpha)|0> + e^{i phase_alpha} sin(alpha)|1> (same for beta).
The phases default to zero, which is the real family.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import DensityMatrix, PureState

ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class Rank2Params:
    q: float
    alpha: float
    beta: float
    phase_alpha: float = 0.0
    phase_beta: float = 0.0
    phase_mix: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.q < 1.0:
            raise ValueError(f"q must lie in the open interval (0, 1), got {self.q}")

    @property
    def has_phases(self) -> bool:
        return any((self.phase_alpha, self.phase_beta, self.phase_mix))

    def swapped(self) -> "Rank2Params":
        """Relabel A <-> B."""
        return Rank2Params(self.q, self.beta, self.alpha, self.phase_beta, self.phase_alpha, self.phase_mix)


def qubit_ket(angle: float, phase: float = 0.0) -> np.ndarray:
    return np.array([np.cos(angle), np.exp(1j * phase) * np.sin(angle)])


def make_rank2_state(p: Rank2Params) -> DensityMatrix:
    a = qubit_ket(p.alpha, p.phase_alpha)
    b = qubit_ket(p.beta, p.phase_beta)
    ab = np.kron(a, b)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = p.q
    rho += (1 - p.q) * np.outer(ab, ab.conj())
    return DensityMatrix(rho, (2, 2))


def purify_rank2(p: Rank2Params) -> PureState:
    a = qubit_ket(p.alpha, p.phase_alpha)
    b = qubit_ket(p.beta, p.phase_beta)
    psi = np.zeros(8, dtype=complex)
    psi[0] = np.sqrt(p.q)
    psi += np.sqrt(1 - p.q) * np.exp(1j * p.phase_mix) * np.kron(np.kron(a, b), [0, 1])
    return PureState(psi, (2, 2, 2))


def reduced_ac(p: Rank2Params) -> DensityMatrix:
    """rho_AC written out entrywise (basis |AC> = 00, 01, 10, 11)."""
    q = p.q
    ca, sa = np.cos(p.alpha), np.sin(p.alpha)
    cb = np.cos(p.beta)
    x = np.sqrt(q * (1 - q)) * cb * np.exp(-1j * p.phase_mix)
    ea = np.exp(1j * p.phase_alpha)
    rho = np.array(
        [
            [q, x * ca, 0, x * sa * ea.conjugate()],
            [0, (1 - q) * ca**2, 0, (1 - q) * ca * sa * ea.conjugate()],
            [0, 0, 0, 0],
            [0, 0, 0, (1 - q) * sa**2],
        ],
        dtype=complex,
    )
    rho = np.triu(rho) + np.triu(rho, 1).conj().T
    return DensityMatrix(rho, (2, 2))


# -- analytic predicates ------------------------------------------------------

def _at(angle: float, target: float, tol: float = ANGLE_TOL) -> bool:
    """angle == target (mod pi); a ket is fixed up to sign by its angle mod pi."""
    d = (angle - target) % np.pi
    return min(d, np.pi - d) <= tol


def is_zero(angle: float) -> bool:
    """|angle> = +-|0>."""
    return _at(angle, 0.0)


def is_one(angle: float) -> bool:
    """|angle> = +-|1>."""
    return _at(angle, np.pi / 2)


def zero_discord_predicate(p: Rank2Params, direction: str = "AB") -> bool:
    """Closed-form nullity of D(A,B) ("AB", B measured) or D(B,A) ("BA")."""
    product = is_zero(p.alpha) or is_zero(p.beta)
    if direction == "AB":
        return product or is_one(p.beta)
    if direction == "BA":
        return product or is_one(p.alpha)
    raise ValueError(f"direction must be 'AB' or 'BA', not {direction!r}")


def separability_predicate(p: Rank2Params, pair: str = "AC") -> bool:
    """Closed-form separability of rho_AC or rho_BC."""
    if pair == "AC":
        return is_zero(p.alpha) or is_one(p.beta)
    if pair == "BC":
        return is_zero(p.beta) or is_one(p.alpha)
    raise ValueError(f"pair must be 'AC' or 'BC', not {pair!r}")


def tripartite_predicate(p: Rank2Params) -> bool:
    """Genuine tripartite entanglement: neither A nor B factors out of the purification."""
    return not (is_zero(p.alpha) or is_zero(p.beta))


# -- vectorized evaluation over the (alpha, beta) plane ----------------------

def family_kets(q, alpha, beta) -> np.ndarray:
    """Purifications for broadcast arrays of angles, shape (..., 8); real family."""
    alpha, beta = np.broadcast_arrays(np.asarray(alpha, float), np.asarray(beta, float))
    ca, sa, cb, sb = np.cos(alpha), np.sin(alpha), np.cos(beta), np.sin(beta)
    r = np.sqrt(1 - q)
    psi = np.zeros(alpha.shape + (2, 2, 2))
    psi[..., 0, 0, 0] = np.sqrt(q)
    psi[..., 0, 0, 1] = r * ca * cb
    psi[..., 0, 1, 1] = r * ca * sb
    psi[..., 1, 0, 1] = r * sa * cb
    psi[..., 1, 1, 1] = r * sa * sb
    return psi.reshape(alpha.shape + (8,))


def _pair_negativity(psi: np.ndarray, keep: str) -> np.ndarray:
    """Oufan negativity of a two-qubit reduction of stacked 3-qubit kets."""
    t = psi.reshape(psi.shape[:-1] + (2, 2, 2))
    subscripts = {"AB": "...abk,...cdk->...abcd", "AC": "...akb,...ckd->...abcd", "BC": "...kab,...kcd->...abcd"}[keep]
    rho = np.einsum(subscripts, t, t.conj())
    # transpose the first qubit: swap a <-> c
    pt = rho.transpose(tuple(range(rho.ndim - 4)) + (-2, -3, -4, -1)).reshape(rho.shape[:-4] + (4, 4))
    ev = np.linalg.eigvalsh(pt)
    return np.clip(np.sum(np.abs(ev), axis=-1) - 1.0, 0.0, None)


def _one_vs_rest_negativity(psi: np.ndarray, party: int) -> np.ndarray:
    t = np.moveaxis(psi.reshape(psi.shape[:-1] + (2, 2, 2)), -3 + party, -3)
    m = t.reshape(t.shape[:-3] + (2, 4))
    rho = m @ np.conj(np.swapaxes(m, -1, -2))
    det = (rho[..., 0, 0] * rho[..., 1, 1] - np.abs(rho[..., 0, 1]) ** 2).real
    # pure state: ||rho^T||_1 - 1 = (sum sqrt schmidt)^2 - 1 = 2 sqrt(det rho_party)
    return 2 * np.sqrt(np.clip(det, 0.0, None))


def family_entanglement(q, alpha, beta) -> dict[str, np.ndarray]:
    """neg_ab, neg_ac, neg_bc (oufan) and pi_tangle on a broadcast grid of angles."""
    psi = family_kets(q, alpha, beta)
    pair = {k: _pair_negativity(psi, k) for k in ("AB", "AC", "BC")}
    one = [_one_vs_rest_negativity(psi, i) for i in range(3)]
    pi_a = one[0] ** 2 - pair["AB"] ** 2 - pair["AC"] ** 2
    pi_b = one[1] ** 2 - pair["AB"] ** 2 - pair["BC"] ** 2
    pi_c = one[2] ** 2 - pair["AC"] ** 2 - pair["BC"] ** 2
    return {
        "neg_ab": pair["AB"],
        "neg_ac": pair["AC"],
        "neg_bc": pair["BC"],
        "pi_tangle": (pi_a + pi_b + pi_c) / 3,
    }
