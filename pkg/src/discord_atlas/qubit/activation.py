"""Remote activation of AC entanglement by a local filter on B."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import PureState, apply_local, ghz_state
from .discord import DEFAULT_CONFIG, OptimizerConfig
from .structure import CorrelationValues, StructureReport, Thresholds, classify_values, correlation_values

# |0> -> |0>, |1> -> (|0> + |1>)/sqrt(2)
ACTIVATION_FILTER = np.array([[1.0, 1.0 / np.sqrt(2)], [0.0, 1.0 / np.sqrt(2)]])


@dataclass(frozen=True)
class ActivationResult:
    before: tuple[StructureReport, CorrelationValues]
    after: tuple[StructureReport, CorrelationValues]
    success_probability: float


def apply_filter(psi: PureState, op, party: int = 1) -> tuple[PureState, float]:
    """Post-selected local filtering; returns (renormalized state, norm^2)."""
    out = apply_local(psi, op, party)
    norm2 = float(np.vdot(out, out).real)
    if norm2 < 1e-14:
        raise ValueError("filter annihilates the state")
    return PureState(out / np.sqrt(norm2), psi.dims), norm2


def remote_activation_demo(
    filter=ACTIVATION_FILTER,
    state: PureState | None = None,
    thresholds: Thresholds = Thresholds(),
    config: OptimizerConfig = DEFAULT_CONFIG,
) -> ActivationResult:
    """Filter B of the GHZ state and report the structure before and after."""
    op = np.asarray(filter, dtype=complex)
    if op.shape != (2, 2) or not np.any(op):
        raise ValueError("filter must be a nonzero 2x2 matrix")
    psi = ghz_state(3) if state is None else state
    after, p = apply_filter(psi, op)
    v0 = correlation_values(psi, config)
    v1 = correlation_values(after, config)
    return ActivationResult(
        before=(classify_values(v0, thresholds), v0),
        after=(classify_values(v1, thresholds), v1),
        success_probability=p,
    )
