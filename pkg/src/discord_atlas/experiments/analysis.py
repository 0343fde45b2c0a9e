"""Claim-level statistics over trajectory profiles."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import spearmanr

PROFILE_COLUMNS = ("phi", "alpha", "beta", "D_ab", "D_ba", "neg_ac", "neg_bc", "pi_tangle")


def trajectory_profiles(points) -> list[dict]:
    """One row per trajectory point, in trajectory order."""
    points = list(points)
    if not points:
        raise ValueError("empty trajectory")
    return [
        {
            "phi": p.phi,
            "alpha": p.alpha,
            "beta": p.beta,
            "D_ab": p.values.discord_ab,
            "D_ba": p.values.discord_ba,
            "neg_ac": p.values.neg_ac,
            "neg_bc": p.values.neg_bc,
            "pi_tangle": p.values.pi_tangle,
        }
        for p in points
    ]


def column(profile, name: str) -> np.ndarray:
    return np.array([row[name] for row in profile], dtype=float)


def _runs(mask: np.ndarray) -> tuple[int, int]:
    """(start, length) of the longest run of True steps; (0, 0) when there is none."""
    best = (0, 0)
    start = None
    for i, m in enumerate(list(mask) + [False]):
        if m and start is None:
            start = i
        elif not m and start is not None:
            if i - start > best[1]:
                best = (start, i - start)
            start = None
    return best


@dataclass(frozen=True)
class MonotonicityReport:
    spearman: float
    strict_fraction: float
    worst_window: tuple[int, int]  # point indices [start, end] of the longest opposing run


def monotonicity_report(profile, x: str, y: str) -> MonotonicityReport:
    """How well ``y`` tracks ``x`` along the profile.

    ``strict_fraction`` is the share of consecutive steps in which both
    columns move in the same strict direction; ``worst_window`` spans the
    longest run of steps in which they move in opposite directions.
    """
    if len(profile) < 10:
        raise ValueError("need at least 10 profile points")
    xs, ys = column(profile, x), column(profile, y)
    if np.ptp(xs) == 0:
        raise ValueError(f"column {x!r} is constant")
    dx, dy = np.sign(np.diff(xs)), np.sign(np.diff(ys))
    same = (dx == dy) & (dx != 0)
    start, length = _runs((dx * dy) < 0)
    return MonotonicityReport(
        spearman=float(spearmanr(xs, ys)[0]),
        strict_fraction=float(np.mean(same)),
        worst_window=(start, start + length),
    )


def opposing_segment(profile, rising: str, falling: str) -> tuple[int, int]:
    """Longest stretch of consecutive points where ``rising`` strictly increases
    while ``falling`` strictly decreases; returned as (start, number of points)."""
    up = np.diff(column(profile, rising)) > 0
    down = np.diff(column(profile, falling)) < 0
    start, steps = _runs(up & down)
    return start, steps + 1 if steps else 0


def monogamy_report(profile) -> float:
    """Rank correlation of N_AC against N_BC; strongly negative on a constant-pi contour."""
    return float(spearmanr(column(profile, "neg_ac"), column(profile, "neg_bc"))[0])
