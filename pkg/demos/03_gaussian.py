"""The same story for pure three-mode Gaussian states.

A pure three-mode state is fixed, up to local symplectic operations, by its
local symplectic eigenvalues (nu_A, nu_B, nu_C).  For the reduced AB state,
correlations without AB entanglement require both A and B to be entangled
with C.
"""

import numpy as np

from discord_atlas import gaussian as g
from discord_atlas.experiments import gaussian_fuzz


def describe(nu):
    cov = g.standard_form_pure(nu)
    print(f"nu = {nu}")
    print(f"  symplectic spectrum {np.round(g.symplectic_eigenvalues(cov), 12)}")
    for pair in g.PAIRS:
        r = g.pair_report(cov, pair)
        kind = "product" if r.product else ("separable" if r.separable else "entangled")
        print(f"  {pair}: det gamma = {r.det_gamma:+.4f} ({kind})")


def main():
    describe((1.0, 1.0, 1.0))   # three vacua
    describe((1.0, 2.0, 2.0))   # A in vacuum, B and C two-mode squeezed
    describe((2.0, 2.0, 1.0))   # A and B two-mode squeezed
    describe((2.0, 2.5, 1.8))   # every pair correlated
    describe((2.0, 2.0, 3.0))   # AB separable but correlated: both entangled with C

    rep = gaussian_fuzz(seed=0, n=1000)
    print(f"\n1000 random triples: {rep.premise_counts['equivalence_ac']} have separable AB,"
          f" {rep.premise_counts['no_classical_without_quantum']} of those are correlated,"
          f" {len(rep.violations)} violations")


if __name__ == "__main__":
    main()
