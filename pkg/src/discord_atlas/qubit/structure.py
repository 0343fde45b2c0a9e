"""Correlation bundles, purification identities and structure classification."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from ..core import PureState, partial_trace, permute, von_neumann_entropy
from .discord import DEFAULT_CONFIG, OptimizerConfig, discord_result
from .family import (
    Rank2Params,
    purify_rank2,
    separability_predicate,
    tripartite_predicate,
    zero_discord_predicate,
)
from .measures import eof_two_qubit, negativity, pi_tangle, pt_spectrum, _three_qubit


@dataclass(frozen=True)
class CorrelationValues:
    discord_ab: float
    discord_ba: float
    mutual_info: float
    classical_ab: float
    classical_ba: float
    eof_ab: float
    neg_ac: float
    neg_bc: float
    neg_ab: float
    pi_tangle: float
    lambda_min_ac: float
    lambda_min_bc: float

    def as_dict(self) -> dict:
        return asdict(self)


def correlation_values(
    psi, config: OptimizerConfig = DEFAULT_CONFIG, convention: str = "oufan"
) -> CorrelationValues:
    """Every measure of the AB pair of a pure three-qubit state (or Rank2Params)."""
    if isinstance(psi, Rank2Params):
        psi = purify_rank2(psi)
    psi = _three_qubit(psi)
    rho_ab = partial_trace(psi, [0, 1])
    rho_ac = partial_trace(psi, [0, 2])
    rho_bc = partial_trace(psi, [1, 2])
    d_ab = discord_result(rho_ab, "B", config)
    d_ba = discord_result(rho_ab, "A", config)
    return CorrelationValues(
        discord_ab=d_ab.discord,
        discord_ba=d_ba.discord,
        mutual_info=d_ab.mutual_info,
        classical_ab=d_ab.classical,
        classical_ba=d_ba.classical,
        eof_ab=eof_two_qubit(rho_ab),
        neg_ac=negativity(rho_ac, (0,), convention),
        neg_bc=negativity(rho_bc, (0,), convention),
        neg_ab=negativity(rho_ab, (0,), convention),
        pi_tangle=pi_tangle(psi),
        lambda_min_ac=float(pt_spectrum(rho_ac)[0]),
        lambda_min_bc=float(pt_spectrum(rho_bc)[0]),
    )


# -- identities on pure three-qubit states ------------------------------------

def _reorder(psi, ordering) -> PureState:
    psi = _three_qubit(psi)
    labels = {"A": 0, "B": 1, "C": 2}
    order = [labels[x] if isinstance(x, str) else int(x) for x in ordering]
    return permute(psi, order)


def koashi_winter_terms(psi, ordering=("A", "B", "C"), config: OptimizerConfig = DEFAULT_CONFIG) -> dict:
    """D(A,B) and E_AC - S(C) + S(B) computed along separate paths."""
    psi = _reorder(psi, ordering)
    d_ab = discord_result(partial_trace(psi, [0, 1]), "B", config).discord
    rhs = (
        eof_two_qubit(partial_trace(psi, [0, 2]))
        - von_neumann_entropy(partial_trace(psi, [2]))
        + von_neumann_entropy(partial_trace(psi, [1]))
    )
    return {"discord": d_ab, "entanglement_side": rhs}


def koashi_winter_residual(psi, ordering=("A", "B", "C"), config: OptimizerConfig = DEFAULT_CONFIG) -> float:
    """D(A,B) - [E(rho_AC) - S(C) + S(B)]; vanishes for pure ABC."""
    t = koashi_winter_terms(psi, ordering, config)
    return t["discord"] - t["entanglement_side"]


def discord_sum_rule_residual(psi, ordering=("A", "B", "C"), config: OptimizerConfig = DEFAULT_CONFIG) -> float:
    """D(A,B) + D(A,C) - E_AC - E_AB."""
    psi = _reorder(psi, ordering)
    rho_ab = partial_trace(psi, [0, 1])
    rho_ac = partial_trace(psi, [0, 2])
    return (
        discord_result(rho_ab, "B", config).discord
        + discord_result(rho_ac, "B", config).discord
        - eof_two_qubit(rho_ac)
        - eof_two_qubit(rho_ab)
    )


# -- structure classification --------------------------------------------------

@dataclass(frozen=True)
class Thresholds:
    entangled: float = 1e-6
    tripartite: float = 1e-6
    discord: float = 1e-6
    band: tuple[float, float] = (1e-8, 1e-4)


@dataclass(frozen=True)
class StructureReport:
    """Numerical entanglement/discord structure of one purification.

    ``predicted`` holds the closed-form flags when the state came from a
    Rank2Params, and ``agreement`` says whether both views coincide.
    ``boundary`` names the quantities that landed inside the guard band.
    """

    ac_entangled: bool
    bc_entangled: bool
    tripartite_entangled: bool
    discord_ab_zero: bool
    discord_ba_zero: bool
    source: Optional[Rank2Params]
    values: CorrelationValues
    predicted: Optional[dict] = None
    agreement: Optional[bool] = None
    boundary: tuple[str, ...] = field(default=())

    def flags(self) -> dict:
        return {
            "ac_entangled": self.ac_entangled,
            "bc_entangled": self.bc_entangled,
            "tripartite_entangled": self.tripartite_entangled,
            "discord_ab_zero": self.discord_ab_zero,
            "discord_ba_zero": self.discord_ba_zero,
        }

    def as_dict(self) -> dict:
        out = self.flags()
        out.update(
            source=None if self.source is None else asdict(self.source),
            values=self.values.as_dict(),
            predicted=self.predicted,
            agreement=self.agreement,
            boundary=list(self.boundary),
        )
        return out


def predicted_flags(p: Rank2Params) -> dict:
    return {
        "ac_entangled": not separability_predicate(p, "AC"),
        "bc_entangled": not separability_predicate(p, "BC"),
        "tripartite_entangled": tripartite_predicate(p),
        "discord_ab_zero": zero_discord_predicate(p, "AB"),
        "discord_ba_zero": zero_discord_predicate(p, "BA"),
    }


def classify_values(
    values: CorrelationValues, thresholds: Thresholds = Thresholds(), source: Optional[Rank2Params] = None
) -> StructureReport:
    lo, hi = thresholds.band
    watched = {
        "neg_ac": values.neg_ac,
        "neg_bc": values.neg_bc,
        "pi_tangle": values.pi_tangle,
        "discord_ab": values.discord_ab,
        "discord_ba": values.discord_ba,
    }
    boundary = tuple(k for k, v in watched.items() if lo <= v <= hi)
    report = dict(
        ac_entangled=values.neg_ac > thresholds.entangled,
        bc_entangled=values.neg_bc > thresholds.entangled,
        tripartite_entangled=values.pi_tangle > thresholds.tripartite,
        discord_ab_zero=values.discord_ab <= thresholds.discord,
        discord_ba_zero=values.discord_ba <= thresholds.discord,
    )
    predicted = agreement = None
    if source is not None:
        predicted = predicted_flags(source)
        agreement = predicted == report
    return StructureReport(
        **report, source=source, values=values, predicted=predicted, agreement=agreement, boundary=boundary
    )


def structure_classify(
    p: Rank2Params, thresholds: Thresholds = Thresholds(), config: OptimizerConfig = DEFAULT_CONFIG
) -> StructureReport:
    """Numerical structure of purify_rank2(p) next to the closed-form predicates."""
    return classify_values(correlation_values(p, config), thresholds, source=p)


def structure_cases(q: float = 0.5) -> dict[str, Rank2Params]:
    """One representative per row of the structure table."""
    g = np.pi / 4
    return {
        "generic": Rank2Params(q, g, np.pi / 5),
        "beta_one": Rank2Params(q, g, np.pi / 2),
        "alpha_one": Rank2Params(q, np.pi / 2, g),
        "alpha_zero": Rank2Params(q, 0.0, g),
        "beta_zero": Rank2Params(q, g, 0.0),
        "ghz": Rank2Params(q, np.pi / 2, np.pi / 2),
    }
