"""Where discord lives in the purified rank-2 family.

A separable two-qubit state  rho_AB = q|00><00| + (1-q)|ab><ab|  is purified
by a third qubit C.  Even though A and B are never entangled, their discord
is tied to the entanglement each of them shares with C.  This script walks
through the six representative cases and shows that the numerical flags
match the closed-form predicates.
"""

import numpy as np

from discord_atlas.qubit import structure_cases, structure_classify

FLAGS = ("ac_entangled", "bc_entangled", "tripartite_entangled", "discord_ab_zero", "discord_ba_zero")


def main():
    print(f"{'case':12s}" + "".join(f"{f:>22s}" for f in FLAGS) + f"{'agree':>8s}")
    for name, p in structure_cases(q=0.5).items():
        r = structure_classify(p)
        flags = r.flags()
        print(f"{name:12s}" + "".join(f"{str(flags[f]):>22s}" for f in FLAGS) + f"{str(r.agreement):>8s}")

    # the GHZ row is the odd one out: genuine tripartite entanglement, yet no
    # pairwise entanglement and no discord in either direction
    ghz = structure_classify(structure_cases()["ghz"]).values
    print(f"\nGHZ point: pi_ABC = {ghz.pi_tangle:.3f}, N_AC = {ghz.neg_ac:.1e}, D(A,B) = {ghz.discord_ab:.1e}")

    # a generic point carries discord both ways and entanglement to C on both sides
    v = structure_classify(structure_cases()["generic"]).values
    print(f"generic point: D(A,B) = {v.discord_ab:.4f} with N_AC = {v.neg_ac:.4f};"
          f" D(B,A) = {v.discord_ba:.4f} with N_BC = {v.neg_bc:.4f}")
    print(f"angles in radians: alpha = {np.pi / 4:.4f}, beta = {np.pi / 5:.4f}")


if __name__ == "__main__":
    main()
