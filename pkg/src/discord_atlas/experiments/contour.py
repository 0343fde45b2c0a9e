"""Constant-level trajectories through the (alpha, beta) plane.

A level set of pi-tangle or N_AC is traced with marching squares on an
n x n grid over [0, 2pi)^2, each vertex is pushed back onto the level set with Newton
steps along the gradient, and the loop is resampled uniformly in arc length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from skimage.measure import find_contours

from ..errors import ConvergenceError
from ..qubit.discord import DEFAULT_CONFIG, OptimizerConfig
from ..qubit.family import Rank2Params, family_entanglement
from ..qubit.structure import CorrelationValues, correlation_values
from ._parallel import ordered_map

QUANTITIES = ("pi_tangle", "neg_ac")
LEVEL_TOL = 1e-6


class LevelNotAttained(ValueError):
    pass


@dataclass(frozen=True)
class TrajectoryPoint:
    phi: float
    alpha: float
    beta: float
    values: CorrelationValues


@dataclass
class Trajectory:
    points: list[TrajectoryPoint]
    quantity: str
    level: float
    q: float
    convention: str
    closed: bool
    contour_lengths: list[float] = field(default_factory=list)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def level_function(quantity: str, q: float, convention: str = "oufan"):
    """Vectorized f(alpha, beta) for the fixed quantity."""
    if quantity not in QUANTITIES:
        raise ValueError(f"quantity must be one of {QUANTITIES}, not {quantity!r}")
    if convention not in ("oufan", "half"):
        raise ValueError(f"unknown negativity convention {convention!r}")
    scale = 0.5 if (quantity == "neg_ac" and convention == "half") else 1.0

    def f(alpha, beta):
        return scale * family_entanglement(q, alpha, beta)[quantity]

    return f


def polish(f, level: float, alpha: float, beta: float, tol: float = 1e-10, h: float = 1e-6, max_iter: int = 50):
    """Newton iteration along the local gradient until |f - level| <= tol."""
    x = np.array([alpha, beta], dtype=float)
    for _ in range(max_iter):
        pts = x + np.array([[0, 0], [h, 0], [-h, 0], [0, h], [0, -h]])
        v = f(pts[:, 0], pts[:, 1])
        r = v[0] - level
        if abs(r) <= tol:
            return x, r
        g = np.array([v[1] - v[2], v[3] - v[4]]) / (2 * h)
        gg = g @ g
        if gg < 1e-20:
            break
        x = x - r * g / gg
    r = float(f(np.array([x[0]]), np.array([x[1]]))[0]) - level
    if abs(r) > LEVEL_TOL:
        raise ConvergenceError(f"could not polish point ({alpha:.6g}, {beta:.6g}) onto level {level}")
    return x, r


def _arc_length(poly: np.ndarray, closed: bool) -> float:
    seg = np.diff(np.vstack([poly, poly[:1]]) if closed else poly, axis=0)
    return float(np.sum(np.hypot(seg[:, 0], seg[:, 1])))


def extract_contours(f, level: float, n: int = 256):
    """All level-set polylines on an n x n grid over [0, 2pi)^2 as (angles, closed) pairs.

    Every measure is pi-periodic in each angle, so the grid holds two full
    periods per axis and the canonical loop never needs to wrap.
    """
    h = 2 * np.pi / n
    axis = np.arange(n) * h
    a, b = np.meshgrid(axis, axis, indexing="ij")
    z = f(a, b)
    if not (z.min() < level < z.max()):
        raise LevelNotAttained(f"level {level} outside the sampled range [{z.min():.6g}, {z.max():.6g}]")
    out = []
    for c in find_contours(z, level):
        closed = bool(np.allclose(c[0], c[-1]))
        poly = (c[:-1] if closed else c) * h
        out.append((poly, closed))
    return out


def select_contour(contours):
    """Longest closed loop (ties: smallest min-alpha, then min-beta); open curves only as fallback."""

    def key(item):
        poly, closed = item
        i = np.lexsort((poly[:, 1], poly[:, 0]))[0]
        return (not closed, -round(_arc_length(poly, closed), 9), round(poly[i, 0], 9), round(poly[i, 1], 9))

    return min(contours, key=key)


def resample_loop(poly: np.ndarray, samples: int) -> np.ndarray:
    """``samples`` points equally spaced in arc length around a closed polyline."""
    loop = np.vstack([poly, poly[:1]])
    seg = np.hypot(*np.diff(loop, axis=0).T)
    s = np.concatenate([[0.0], np.cumsum(seg)])
    t = np.arange(samples) * (s[-1] / samples)
    return np.column_stack([np.interp(t, s, loop[:, 0]), np.interp(t, s, loop[:, 1])])


def _orient(poly: np.ndarray) -> np.ndarray:
    """Counterclockwise in (alpha, beta), starting at min alpha (ties: min beta)."""
    x, y = poly[:, 0], poly[:, 1]
    area = 0.5 * np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)
    if area < 0:
        poly = poly[::-1]
    start = np.lexsort((poly[:, 1], poly[:, 0]))[0]
    return np.roll(poly, -start, axis=0)


def level_curve(quantity: str, level: float, q: float = 0.5, samples: int = 400,
                convention: str = "oufan", grid: int = 256):
    """Polished (alpha, beta) points on the canonical contour plus metadata."""
    if samples < 3:
        raise ValueError("need at least 3 samples")
    f = level_function(quantity, q, convention)
    contours = extract_contours(f, level, grid)
    poly, closed = select_contour(contours)
    poly = np.array([polish(f, level, *p)[0] for p in poly])
    if closed:
        poly = _orient(poly)
        pts = resample_loop(poly, samples)
    else:
        s = np.concatenate([[0.0], np.cumsum(np.hypot(*np.diff(poly, axis=0).T))])
        t = np.linspace(0.0, s[-1], samples)
        pts = np.column_stack([np.interp(t, s, poly[:, 0]), np.interp(t, s, poly[:, 1])])
    pts = np.array([polish(f, level, *p)[0] for p in pts])
    meta = dict(closed=closed, contour_lengths=sorted((_arc_length(c, cl) for c, cl in contours), reverse=True))
    return pts, meta


def contour_trajectory(
    quantity: str,
    level: float,
    q: float = 0.5,
    samples: int = 400,
    convention: str = "oufan",
    config: OptimizerConfig = DEFAULT_CONFIG,
    workers: int | None = None,
    grid: int = 256,
) -> Trajectory:
    """Trajectory of constant ``quantity`` with all measures evaluated at each point."""
    pts, meta = level_curve(quantity, level, q, samples, convention, grid)
    values = ordered_map(
        lambda ab: correlation_values(Rank2Params(q, ab[0], ab[1]), config, convention), pts, workers
    )
    phis = 2 * np.pi * np.arange(samples) / samples
    points = [TrajectoryPoint(float(phi), float(a), float(b), v) for phi, (a, b), v in zip(phis, pts, values)]
    return Trajectory(points, quantity, level, q, convention, meta["closed"], meta["contour_lengths"])
