"""Pure three-mode Gaussian states in standard form.

Quadratures are ordered (x_A, p_A, x_B, p_B, x_C, p_C) and the symplectic
form is a direct sum of [[0, 1], [-1, 0]].  Covariance matrices are
normalized so that the vacuum is the identity (pure states have unit
symplectic eigenvalues).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

MODES = {"A": 0, "B": 1, "C": 2}
PAIRS = ("AB", "AC", "BC")
RESIDUAL_TOL = 1e-8
SEP_TOL = 1e-10
PRODUCT_TOL = 1e-10
RADICAND_ZERO = 1e-12


def symplectic_form(n: int) -> np.ndarray:
    return np.kron(np.eye(n), np.array([[0.0, 1.0], [-1.0, 0.0]]))


class InvalidTriple(ValueError):
    pass


@dataclass(frozen=True)
class NuTriple:
    """Local symplectic eigenvalues (nu_A, nu_B, nu_C) of a pure three-mode state."""

    nu_a: float
    nu_b: float
    nu_c: float

    def __post_init__(self):
        problem = triple_violation(self.as_tuple())
        if problem:
            raise InvalidTriple(problem)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.nu_a, self.nu_b, self.nu_c)

    def __iter__(self):
        return iter(self.as_tuple())


def triple_violation(nu, tol: float = 1e-12) -> str | None:
    """Name the first violated purity constraint of a triple, or None if valid.

    Each nu_i >= 1, and for every ordering |nu_j - nu_k| + 1 <= nu_i <= nu_j + nu_k - 1.
    """
    names = "ABC"
    for i, v in enumerate(nu):
        if not np.isfinite(v) or v < 1 - tol:
            return f"nu_{names[i]} = {v} < 1"
    for i, j, k in permutations(range(3)):
        if nu[i] > nu[j] + nu[k] - 1 + tol:
            return f"nu_{names[i]} <= nu_{names[j]} + nu_{names[k]} - 1 violated"
        if nu[i] < abs(nu[j] - nu[k]) + 1 - tol:
            return f"nu_{names[i]} >= |nu_{names[j]} - nu_{names[k]}| + 1 violated"
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        lo, hi = _radicands(nu[i], nu[j], nu[k])
        if lo < -RADICAND_ZERO or hi < -RADICAND_ZERO:
            return f"negative radicand in e+-_{names[i]}{names[j]}"
    return None


def _radicands(ni, nj, nk):
    d2, s2 = (ni - nj) ** 2, (ni + nj) ** 2
    m2, p2 = (nk - 1) ** 2, (nk + 1) ** 2
    return (d2 - m2) * (d2 - p2), (s2 - m2) * (s2 - p2)


def _root(x: float) -> float:
    return 0.0 if abs(x) <= RADICAND_ZERO else float(np.sqrt(x))


def e_pm(ni: float, nj: float, nk: float) -> tuple[float, float]:
    """Diagonal entries (e+, e-) of the standard-form correlation block gamma_ij."""
    lo, hi = _radicands(ni, nj, nk)
    a, b = _root(lo), _root(hi)
    scale = 4 * np.sqrt(ni * nj)
    return (a + b) / scale, (a - b) / scale


def standard_form_pure(nu) -> np.ndarray:
    """6x6 standard-form covariance matrix of the pure state with local eigenvalues ``nu``."""
    if not isinstance(nu, NuTriple):
        nu = NuTriple(*nu)
    v = nu.as_tuple()
    cov = np.zeros((6, 6))
    for i in range(3):
        cov[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = v[i] * np.eye(2)
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        ep, em = e_pm(v[i], v[j], v[k])
        g = np.diag([ep, em])
        cov[2 * i : 2 * i + 2, 2 * j : 2 * j + 2] = g
        cov[2 * j : 2 * j + 2, 2 * i : 2 * i + 2] = g.T
    return cov


def symplectic_eigenvalues(cov) -> np.ndarray:
    """Moduli of the eigenvalues of i Omega cov, one per mode, descending."""
    cov = np.asarray(cov, dtype=float)
    n2 = cov.shape[0]
    if cov.shape != (n2, n2) or n2 % 2:
        raise ValueError("covariance matrix must be square with even dimension")
    if np.max(np.abs(cov - cov.T)) > 1e-12:
        raise ValueError("covariance matrix is not symmetric")
    if np.linalg.eigvalsh(cov)[0] <= 0:
        raise ValueError("covariance matrix is not positive definite")
    ev = np.abs(np.linalg.eigvals(1j * symplectic_form(n2 // 2) @ cov))
    return np.sort(ev)[::-1][::2]


def block(cov, i: str, j: str | None = None) -> np.ndarray:
    j = i if j is None else j
    a, b = MODES[i], MODES[j]
    return np.asarray(cov)[2 * a : 2 * a + 2, 2 * b : 2 * b + 2]


def pair_cov(cov, pair: str) -> np.ndarray:
    """4x4 covariance matrix of a two-mode reduction, e.g. ``pair_cov(cov, "AC")``."""
    idx = [2 * MODES[pair[0]], 2 * MODES[pair[0]] + 1, 2 * MODES[pair[1]], 2 * MODES[pair[1]] + 1]
    return np.asarray(cov)[np.ix_(idx, idx)]


def _other(pair: str) -> str:
    return next(m for m in "ABC" if m not in pair)


@dataclass(frozen=True)
class GaussianPairReport:
    pair: str
    delta: float
    delta_tilde: float
    det_sigma_pair: float
    det_gamma: float
    separable: bool
    product: bool


def pair_report(cov, pair: str) -> GaussianPairReport:
    i, j = pair
    det_i = np.linalg.det(block(cov, i))
    det_j = np.linalg.det(block(cov, j))
    det_g = float(np.linalg.det(block(cov, i, j)))
    return GaussianPairReport(
        pair=pair,
        delta=float(det_i + det_j + 2 * det_g),
        delta_tilde=float(det_i + det_j - 2 * det_g),
        det_sigma_pair=float(np.linalg.det(pair_cov(cov, pair))),
        det_gamma=det_g,
        separable=ppt_separable(cov, pair),
        product=is_product(cov, pair),
    )


def uncertainty_saturation_residual(cov, pair: str) -> float:
    """Delta_ij - det sigma_ij - 1; zero for reductions of a pure state."""
    r = pair_report(cov, pair)
    return r.delta - r.det_sigma_pair - 1.0


def purity_matching_residual(cov, pair: str) -> float:
    """det sigma_ij - det sigma_k."""
    return float(np.linalg.det(pair_cov(cov, pair)) - np.linalg.det(block(cov, _other(pair))))


def ppt_separable(cov, pair: str, tol: float = SEP_TOL) -> bool:
    """det gamma_ij >= 0, exact for two-mode reductions of pure three-mode states."""
    return bool(np.linalg.det(block(cov, pair[0], pair[1])) >= -tol)


def is_product(cov, pair: str, tol: float = PRODUCT_TOL) -> bool:
    return bool(np.max(np.abs(block(cov, pair[0], pair[1]))) <= tol)


def identity_residual(cov, party: str = "A") -> float:
    """1 - det sigma_i - det gamma_ij - det gamma_ik."""
    j, k = (m for m in "ABC" if m != party)
    return float(
        1.0
        - np.linalg.det(block(cov, party))
        - np.linalg.det(block(cov, party, j))
        - np.linalg.det(block(cov, party, k))
    )


@dataclass(frozen=True)
class EquivalenceReport:
    nu: tuple[float, float, float]
    in_hypothesis: bool
    ac_equiv: bool | None = None
    bc_equiv: bool | None = None
    product_equiv: bool | None = None
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        """True out of hypothesis, otherwise all three equivalences hold."""
        return not self.in_hypothesis or bool(self.ac_equiv and self.bc_equiv and self.product_equiv)


def verify_equivalences(nu, tol: float = RESIDUAL_TOL) -> EquivalenceReport:
    """Check the three separability equivalences under the hypothesis that AB is separable."""
    if not isinstance(nu, NuTriple):
        nu = NuTriple(*nu)
    cov = standard_form_pure(nu)
    if not ppt_separable(cov, "AB"):
        return EquivalenceReport(nu.as_tuple(), False)
    a_pure = abs(np.linalg.det(block(cov, "A")) - 1) <= tol
    b_pure = abs(np.linalg.det(block(cov, "B")) - 1) <= tol
    ac_sep = ppt_separable(cov, "AC")
    bc_sep = ppt_separable(cov, "BC")
    ab_product = is_product(cov, "AB", tol)
    return EquivalenceReport(
        nu.as_tuple(),
        True,
        ac_equiv=ac_sep == a_pure,
        bc_equiv=bc_sep == b_pure,
        product_equiv=ab_product == (a_pure or b_pure),
        details=dict(a_pure=a_pure, b_pure=b_pure, ac_separable=ac_sep, bc_separable=bc_sep, ab_product=ab_product),
    )


def sample_triple(rng: np.random.Generator, scale: float = 1.5, max_tries: int = 10_000) -> NuTriple:
    """nu_i = 1 + |g|, g ~ N(0, scale), rejection-sampled against validity."""
    for _ in range(max_tries):
        nu = 1.0 + np.abs(rng.normal(0.0, scale, 3))
        if triple_violation(nu) is None:
            return NuTriple(*nu)
    raise RuntimeError("could not sample a valid triple")
