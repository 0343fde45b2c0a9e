"""Quantum discord of two-qubit states over projective measurements.

D(A,B) = S(B) - S(AB) + min_n sum_k p_k S(rho_{A|k}), the measurement being
the projector pair (I +- n.sigma)/2 on B.  The minimum is found with a
(theta, phi) grid followed by a Nelder-Mead polish in a tangent chart
around the best grid direction, so the poles are not singular.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from ..core import as_density, partial_trace, permute, von_neumann_entropy
from ..errors import ConvergenceError

_PAULI = np.array(
    [[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]],
    dtype=complex,
)


@dataclass(frozen=True)
class MeasurementBasis:
    """Projective qubit measurement with projectors (I +- n.sigma)/2."""

    bloch: tuple[float, float, float]

    def __post_init__(self):
        n = np.asarray(self.bloch, dtype=float)
        if n.shape != (3,) or abs(np.linalg.norm(n) - 1) > 1e-12:
            raise ValueError(f"Bloch vector {self.bloch} is not a unit 3-vector")
        object.__setattr__(self, "bloch", tuple(float(x) for x in n))

    @classmethod
    def from_vector(cls, v) -> "MeasurementBasis":
        v = np.asarray(v, dtype=float)
        return cls(tuple(v / np.linalg.norm(v)))

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        ns = np.einsum("i,ijk->jk", self.bloch, _PAULI)
        return (np.eye(2) + ns) / 2, (np.eye(2) - ns) / 2


@dataclass(frozen=True)
class OptimizerConfig:
    grid: int = 64
    max_iter: int = 500
    ftol: float = 1e-10
    strict: bool = True

    def __post_init__(self):
        if self.grid < 2 or self.max_iter < 1 or self.ftol <= 0:
            raise ValueError(f"invalid optimizer config {self}")


DEFAULT_CONFIG = OptimizerConfig()


@dataclass(frozen=True)
class DiscordResult:
    discord: float
    classical: float
    mutual_info: float
    basis: MeasurementBasis
    conditional_entropy: float
    converged: bool
    iterations: int


def conditional_blocks(rho) -> tuple[np.ndarray, np.ndarray]:
    """rho_A and the three operators Tr_B[(I x sigma_j) rho]."""
    r = rho.reshape(2, 2, 2, 2)
    rho_a = np.einsum("ajbj->ab", r)
    m = np.einsum("ajbk,skj->sab", r, _PAULI)
    return rho_a, m


def _entropy_2x2_weighted(blocks: np.ndarray) -> np.ndarray:
    """p * S(block / p) for a stack of unnormalized 2x2 Hermitian blocks, p = trace."""
    a = blocks[..., 0, 0].real
    d = blocks[..., 1, 1].real
    b = blocks[..., 0, 1]
    t = a + d
    gap = np.sqrt((a - d) ** 2 + 4 * np.abs(b) ** 2)
    out = np.zeros_like(t)
    for lam in ((t + gap) / 2, (t - gap) / 2):
        ok = (lam > 1e-300) & (t > 1e-300)
        safe_lam = np.where(ok, lam, 1.0)
        safe_t = np.where(ok, t, 1.0)
        out -= np.where(ok, lam * np.log2(safe_lam / safe_t), 0.0)
    return out


def conditional_entropy(rho_a: np.ndarray, m: np.ndarray, n: np.ndarray) -> np.ndarray:
    """sum_k p_k S(rho_{A|k}) for Bloch directions ``n`` of shape (..., 3)."""
    nm = np.einsum("...s,sab->...ab", n, m)
    plus = (rho_a + nm) / 2
    minus = (rho_a - nm) / 2
    return _entropy_2x2_weighted(plus) + _entropy_2x2_weighted(minus)


def sphere_grid(size: int) -> np.ndarray:
    """(size*size, 3) unit vectors on a uniform (theta, phi) grid, poles included."""
    theta = np.linspace(0.0, np.pi, size)
    phi = np.arange(size) * (2 * np.pi / size)
    th, ph = np.meshgrid(theta, phi, indexing="ij")
    return np.stack([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=-1).reshape(-1, 3)


def _tangent_frame(n0: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    helper = np.eye(3)[np.argmin(np.abs(n0))]
    e1 = np.cross(n0, helper)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(n0, e1)


def minimize_conditional_entropy(rho_ab: np.ndarray, config: OptimizerConfig = DEFAULT_CONFIG):
    """Return (min value, argmin Bloch vector, converged, iterations) for measuring B."""
    rho_a, m = conditional_blocks(rho_ab)
    grid = sphere_grid(config.grid)
    vals = conditional_entropy(rho_a, m, grid)
    k = int(np.argmin(vals))
    n0 = grid[k]
    e1, e2 = _tangent_frame(n0)

    def chart(x):
        v = n0 + x[0] * e1 + x[1] * e2
        return v / np.linalg.norm(v)

    def f(x):
        return float(conditional_entropy(rho_a, m, chart(x)))

    step = np.pi / max(config.grid - 1, 1)
    simplex = np.array([[0.0, 0.0], [step, 0.0], [0.0, step]])
    res = minimize(
        f,
        np.zeros(2),
        method="Nelder-Mead",
        options=dict(initial_simplex=simplex, xatol=np.inf, fatol=config.ftol, maxiter=config.max_iter),
    )
    best_val, best_n = float(res.fun), chart(res.x)
    if vals[k] < best_val:
        best_val, best_n = float(vals[k]), n0
    return best_val, best_n, bool(res.success), int(res.nit)


def _prepare(rho, measured: str):
    rho = as_density(rho)
    if rho.dims != (2, 2):
        raise ValueError(f"discord is implemented for two qubits, got dims {rho.dims}")
    if measured not in ("A", "B"):
        raise ValueError(f"measured must be 'A' or 'B', not {measured!r}")
    return permute(rho, [1, 0]) if measured == "A" else rho


def discord_result(rho, measured: str = "B", config: OptimizerConfig = DEFAULT_CONFIG) -> DiscordResult:
    """Full optimization record; ``measured`` names the subsystem that is measured.

    Raises ConvergenceError when the refinement hits ``max_iter`` and
    ``config.strict`` is set.
    """
    rho = _prepare(rho, measured)
    s_a = von_neumann_entropy(partial_trace(rho, [0]))
    s_b = von_neumann_entropy(partial_trace(rho, [1]))
    s_ab = von_neumann_entropy(rho)
    cond, n, ok, nit = minimize_conditional_entropy(rho.data, config)
    if not ok and config.strict:
        raise ConvergenceError(f"measurement optimization did not converge in {config.max_iter} iterations")
    return DiscordResult(
        discord=s_b - s_ab + cond,
        classical=s_a - cond,
        mutual_info=s_a + s_b - s_ab,
        basis=MeasurementBasis.from_vector(n),
        conditional_entropy=cond,
        converged=ok,
        iterations=nit,
    )


def discord(rho, measured: str = "B", config: OptimizerConfig = DEFAULT_CONFIG) -> float:
    """D(A,B) for ``measured="B"``, D(B,A) for ``measured="A"`` (bits)."""
    return discord_result(rho, measured, config).discord


def classical_correlation(rho, measured: str = "B", config: OptimizerConfig = DEFAULT_CONFIG) -> float:
    """J = S(unmeasured) - min sum_k p_k S(unmeasured | k)."""
    return discord_result(rho, measured, config).classical
