"""Measures of the rank-2 family over the (alpha, beta) plane."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConvergenceError
from ..qubit.discord import DEFAULT_CONFIG, OptimizerConfig, discord_result
from ..qubit.family import Rank2Params, family_entanglement, make_rank2_state
from ._parallel import ordered_map

SCAN_COLUMNS = ("alpha", "beta", "D_ab", "D_ba", "neg_ac", "neg_bc", "pi_tangle", "converged")


@dataclass(frozen=True)
class ScanGrid:
    q: float = 0.5
    n_alpha: int = 16
    n_beta: int = 16

    def __post_init__(self):
        if not 0 < self.q < 1:
            raise ValueError("q must lie in (0, 1)")
        if self.n_alpha < 3 or self.n_beta < 3:
            raise ValueError("grid sizes must be at least 3")

    def alphas(self) -> np.ndarray:
        return np.arange(self.n_alpha) * (2 * np.pi / self.n_alpha)

    def betas(self) -> np.ndarray:
        return np.arange(self.n_beta) * (2 * np.pi / self.n_beta)


def discords(q: float, alpha: float, beta: float, config: OptimizerConfig = DEFAULT_CONFIG):
    """(D_ab, D_ba, converged) for one family member; failures give NaN, never raise."""
    rho = make_rank2_state(Rank2Params(q, alpha, beta))
    out, ok = [], True
    for side in ("B", "A"):
        try:
            r = discord_result(rho, side, config)
            out.append(r.discord)
            ok &= r.converged
        except ConvergenceError:
            out.append(float("nan"))
            ok = False
    return out[0], out[1], ok


def grid_scan(grid: ScanGrid, config: OptimizerConfig = DEFAULT_CONFIG, workers: int | None = None) -> list[dict]:
    """One row per node, alpha-major."""
    a, b = np.meshgrid(grid.alphas(), grid.betas(), indexing="ij")
    a, b = a.ravel(), b.ravel()
    ent = family_entanglement(grid.q, a, b)
    lax = OptimizerConfig(config.grid, config.max_iter, config.ftol, strict=False)
    disc = ordered_map(lambda ab: discords(grid.q, ab[0], ab[1], lax), zip(a, b), workers)
    rows = []
    for i, (d_ab, d_ba, ok) in enumerate(disc):
        rows.append(
            {
                "alpha": float(a[i]),
                "beta": float(b[i]),
                "D_ab": d_ab,
                "D_ba": d_ba,
                "neg_ac": float(ent["neg_ac"][i]),
                "neg_bc": float(ent["neg_bc"][i]),
                "pi_tangle": float(ent["pi_tangle"][i]),
                "converged": ok,
            }
        )
    return rows
