"""Discord along contours of constant entanglement.

Hold the tripartite pi-tangle fixed and walk once around its level curve in
the (alpha, beta) plane: D(A,B) rises and falls in lockstep with N_AC, and
N_AC trades off against N_BC.  Holding N_AC fixed instead, the pi-tangle and
D(A,B) are no longer tied together; there are stretches where one climbs
while the other drops.

Set DISCORD_ATLAS_THREADS to use more than one worker thread.
"""

from discord_atlas.experiments import (
    contour_trajectory,
    monogamy_report,
    monotonicity_report,
    opposing_segment,
    trajectory_profiles,
)

SAMPLES = 200


def show(profile, every=25):
    print(f"  {'phi':>6s} {'alpha':>7s} {'beta':>7s} {'D_ab':>8s} {'D_ba':>8s} {'N_AC':>8s} {'N_BC':>8s} {'pi':>8s}")
    for row in profile[::every]:
        print("  " + " ".join(f"{row[k]:{w}.4f}" for k, w in
                              (("phi", 6), ("alpha", 7), ("beta", 7), ("D_ab", 8), ("D_ba", 8),
                               ("neg_ac", 8), ("neg_bc", 8), ("pi_tangle", 8))))


def main():
    print("pi_ABC = 0.2, q = 1/2")
    prof = trajectory_profiles(contour_trajectory("pi_tangle", 0.2, samples=SAMPLES))
    show(prof)
    print(f"  spearman(D_ab, N_AC) = {monotonicity_report(prof, 'neg_ac', 'D_ab').spearman:.5f}")
    print(f"  spearman(D_ba, N_BC) = {monotonicity_report(prof, 'neg_bc', 'D_ba').spearman:.5f}")
    print(f"  spearman(N_AC, N_BC) = {monogamy_report(prof):.5f}")

    print("\nN_AC = 0.1, q = 1/2")
    prof = trajectory_profiles(contour_trajectory("neg_ac", 0.1, samples=SAMPLES))
    show(prof)
    start, n = opposing_segment(prof, "pi_tangle", "D_ab")
    print(f"  pi_ABC rises while D(A,B) falls over {n} consecutive points starting at index {start}")


if __name__ == "__main__":
    main()
