"""Two short stories about what discord does and does not imply.

Activation: in the GHZ state no pair is entangled and A,B share no discord.
A local filter on B alone switches on both AC entanglement and AB discord,
paid for with some of the tripartite entanglement.

Non-converse: entanglement with a purifying system does not imply correlations.
Purify rho_A x rho_B one factor at a time: A and B each end up entangled with
C, yet their mutual information stays exactly zero.
"""

from discord_atlas.experiments import nonconverse_demo
from discord_atlas.qubit import remote_activation_demo


def main():
    res = remote_activation_demo()
    (_, before), (_, after) = res.before, res.after
    print(f"{'':8s}{'D(A,B)':>10s}{'N_AC':>10s}{'pi_ABC':>10s}")
    for label, v in (("GHZ", before), ("filtered", after)):
        print(f"{label:8s}{v.discord_ab:10.4f}{v.neg_ac:10.4f}{v.pi_tangle:10.4f}")
    print(f"filter success probability {res.success_probability:.3f}")

    rep = nonconverse_demo()
    print(f"\nI(A:B) = {rep.mutual_info_ab:.2e}")
    print(f"N(A|A') = {rep.neg_a_ancilla:.3f}, N(B|B') = {rep.neg_b_ancilla:.3f}")
    print(f"S(AB) = S(C) = {rep.entropy_ab_c:.3f} bits")


if __name__ == "__main__":
    main()
