"""Seeded randomized falsification runs.

Every sample draws from its own child of ``SeedSequence(seed)``, so a report
depends only on (seed, n) and never on the thread count.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .. import gaussian as g
from ..core import PureState
from ..qubit.discord import DEFAULT_CONFIG, OptimizerConfig
from ..qubit.family import Rank2Params, purify_rank2
from ..qubit.structure import correlation_values, discord_sum_rule_residual, koashi_winter_residual
from ._parallel import ordered_map

CORRELATION_TOL = 1e-4
ENTANGLEMENT_TOL = 1e-6

QUBIT_CLAIMS = {
    "correlations_need_tripartite": "mutual_info > 1e-4 implies pi_tangle > 1e-6",
    "discord_ab_needs_ac": "D(A,B) > 1e-4 implies N_AC > 1e-6",
    "discord_ba_needs_bc": "D(B,A) > 1e-4 implies N_BC > 1e-6",
}

GAUSSIAN_CLAIMS = {
    "global_purity": "symplectic spectrum of the standard form is {1, 1, 1}",
    "saturation": "Delta_ij = det sigma_ij + 1 for every pair",
    "purity_matching": "det sigma_ij = det sigma_k for every pair",
    "identity": "1 - det sigma_i = det gamma_ij + det gamma_ik for every party",
    "equivalence_ac": "AB separable: AC separable iff det sigma_A = 1",
    "equivalence_bc": "AB separable: BC separable iff det sigma_B = 1",
    "equivalence_product": "AB separable: gamma_AB = 0 iff det sigma_A = 1 or det sigma_B = 1",
    "no_classical_without_quantum": "AB separable and gamma_AB != 0 implies AC and BC entangled",
}


@dataclass
class FuzzReport:
    samples: int
    seed: int
    violations: list[dict] = field(default_factory=list)
    premise_counts: dict = field(default_factory=dict)
    worst: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "violations": self.violations,
            "premise_counts": self.premise_counts,
            "worst": self.worst,
        }


def _children(seed: int, n: int) -> list[np.random.Generator]:
    if n < 1:
        raise ValueError("need at least one sample")
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(n)]


def _haar_qubit(rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return v / np.linalg.norm(v)


def random_separable_rank2(rng: np.random.Generator) -> tuple[PureState, dict]:
    """Purification of q|a1 b1><a1 b1| + (1-q)|a2 b2><a2 b2| with Haar-random kets."""
    q = rng.uniform(0.05, 0.95)
    a1, b1, a2, b2 = (_haar_qubit(rng) for _ in range(4))
    psi = np.sqrt(q) * np.kron(np.kron(a1, b1), [1, 0]) + np.sqrt(1 - q) * np.kron(np.kron(a2, b2), [0, 1])
    params = {"q": q, "a1": a1.tolist(), "b1": b1.tolist(), "a2": a2.tolist(), "b2": b2.tolist()}
    return PureState(psi, (2, 2, 2)), params


def _qubit_sample(rng, config):
    psi, params = random_separable_rank2(rng)
    v = correlation_values(psi, config)
    checks = {
        "correlations_need_tripartite": (v.mutual_info > CORRELATION_TOL, v.pi_tangle > ENTANGLEMENT_TOL),
        "discord_ab_needs_ac": (v.discord_ab > CORRELATION_TOL, v.neg_ac > ENTANGLEMENT_TOL),
        "discord_ba_needs_bc": (v.discord_ba > CORRELATION_TOL, v.neg_bc > ENTANGLEMENT_TOL),
    }
    return params, v, checks


def _jsonable(params: dict) -> dict:
    out = {}
    for k, val in params.items():
        if isinstance(val, list):
            val = [[c.real, c.imag] if isinstance(c, complex) else c for c in val]
        out[k] = val
    return out


def qubit_fuzz(seed: int, n: int, config: OptimizerConfig = DEFAULT_CONFIG, workers: int | None = None) -> FuzzReport:
    """Random separable rank-2 states (with phases) against the necessity claims."""
    results = ordered_map(lambda rng: _qubit_sample(rng, config), _children(seed, n), workers)
    report = FuzzReport(n, seed, premise_counts={k: 0 for k in QUBIT_CLAIMS})
    for i, (params, v, checks) in enumerate(results):
        for claim, (premise, conclusion) in checks.items():
            report.premise_counts[claim] += int(premise)
            if premise and not conclusion:
                report.violations.append(
                    {"index": i, "claim": claim, "params": _jsonable(params), "values": v.as_dict()}
                )
    return report


def gaussian_checks(nu: g.NuTriple, tol: float = g.RESIDUAL_TOL) -> tuple[dict, dict]:
    """Per-claim (premise, holds) flags and the raw residuals for one triple."""
    cov = g.standard_form_pure(nu)
    res = {
        "global_purity": float(np.max(np.abs(g.symplectic_eigenvalues(cov) - 1))),
        "saturation": max(abs(g.uncertainty_saturation_residual(cov, p)) for p in g.PAIRS),
        "purity_matching": max(abs(g.purity_matching_residual(cov, p)) for p in g.PAIRS),
        "identity": max(abs(g.identity_residual(cov, m)) for m in "ABC"),
    }
    checks = {k: (True, v <= tol) for k, v in res.items()}
    eq = g.verify_equivalences(nu, tol)
    checks["equivalence_ac"] = (eq.in_hypothesis, bool(eq.ac_equiv) or not eq.in_hypothesis)
    checks["equivalence_bc"] = (eq.in_hypothesis, bool(eq.bc_equiv) or not eq.in_hypothesis)
    checks["equivalence_product"] = (eq.in_hypothesis, bool(eq.product_equiv) or not eq.in_hypothesis)
    correlated = eq.in_hypothesis and not g.is_product(cov, "AB")
    both_entangled = not g.ppt_separable(cov, "AC") and not g.ppt_separable(cov, "BC")
    checks["no_classical_without_quantum"] = (correlated, both_entangled or not correlated)
    return checks, res


def gaussian_fuzz(seed: int, n: int, workers: int | None = None) -> FuzzReport:
    """Random valid triples against the identities and equivalences."""
    triples = [g.sample_triple(rng) for rng in _children(seed, n)]
    results = ordered_map(gaussian_checks, triples, workers)
    report = FuzzReport(n, seed, premise_counts={k: 0 for k in GAUSSIAN_CLAIMS})
    for i, (nu, (checks, res)) in enumerate(zip(triples, results)):
        for claim, (premise, holds) in checks.items():
            report.premise_counts[claim] += int(premise)
            if premise and not holds:
                report.violations.append({"index": i, "claim": claim, "nu": list(nu), "residuals": res})
    return report


IDENTITY_TOL = 1e-5


def random_rank2_params(rng: np.random.Generator) -> Rank2Params:
    return Rank2Params(rng.uniform(0.05, 0.95), rng.uniform(0, 2 * np.pi), rng.uniform(0, 2 * np.pi))


def _identity_sample(rng, config):
    p = random_rank2_params(rng)
    psi = purify_rank2(p)
    return p, koashi_winter_residual(psi, config=config), discord_sum_rule_residual(psi, config=config)


def identity_suite(seed: int, n: int, config: OptimizerConfig = DEFAULT_CONFIG, workers: int | None = None) -> FuzzReport:
    """Koashi-Winter and sum-rule residuals on random purifications of the real family."""
    results = ordered_map(lambda rng: _identity_sample(rng, config), _children(seed, n), workers)
    report = FuzzReport(n, seed, premise_counts={"koashi_winter": n, "sum_rule": n})
    worst = {"koashi_winter": 0.0, "sum_rule": 0.0}
    for i, (p, kw, sr) in enumerate(results):
        for claim, r in (("koashi_winter", kw), ("sum_rule", sr)):
            worst[claim] = max(worst[claim], abs(r))
            if abs(r) > IDENTITY_TOL:
                report.violations.append({"index": i, "claim": claim, "params": asdict(p), "residual": r})
    report.worst = worst
    return report
