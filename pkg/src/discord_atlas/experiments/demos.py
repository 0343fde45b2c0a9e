"""Uncorrelated product states whose purification is still entangled."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ..core import DensityMatrix, permute, purify, partial_trace, tensor, von_neumann_entropy
from ..qubit.measures import mutual_information, negativity


@dataclass(frozen=True)
class NonconverseReport:
    mutual_info_ab: float
    neg_a_ancilla: float
    neg_b_ancilla: float
    entropy_a_bc: float
    entropy_b_ac: float
    entropy_ab_c: float

    @property
    def uncorrelated(self) -> bool:
        return self.mutual_info_ab <= 1e-8

    @property
    def purification_entangled(self) -> bool:
        """Bipartite negativity with the ancillas and every A|B|C cut entangled."""
        cuts = (self.entropy_a_bc, self.entropy_b_ac, self.entropy_ab_c)
        return min(self.neg_a_ancilla, self.neg_b_ancilla) > 1e-6 and min(cuts) > 1e-6

    def as_dict(self) -> dict:
        out = asdict(self)
        out.update(uncorrelated=self.uncorrelated, purification_entangled=self.purification_entangled)
        return out


def nonconverse_demo(rho_a: DensityMatrix | None = None, rho_b: DensityMatrix | None = None) -> NonconverseReport:
    """Purify each mixed factor of rho_A x rho_B separately; C = (A', B')."""
    if rho_a is None:
        rho_a = DensityMatrix(np.eye(2) / 2, (2,))
    if rho_b is None:
        rho_b = DensityMatrix(np.eye(2) / 2, (2,))
    if min(von_neumann_entropy(rho_a), von_neumann_entropy(rho_b)) <= 0:
        raise ValueError("both factors must be mixed")
    # registers A A' B B' -> A B A' B'
    psi = permute(tensor(purify(rho_a), purify(rho_b)), [0, 2, 1, 3])
    return NonconverseReport(
        mutual_info_ab=mutual_information(tensor(rho_a, rho_b)),
        neg_a_ancilla=negativity(partial_trace(psi, [0, 2]), (0,)),
        neg_b_ancilla=negativity(partial_trace(psi, [1, 3]), (0,)),
        entropy_a_bc=von_neumann_entropy(partial_trace(psi, [0])),
        entropy_b_ac=von_neumann_entropy(partial_trace(psi, [1])),
        entropy_ab_c=von_neumann_entropy(partial_trace(psi, [0, 1])),
    )
