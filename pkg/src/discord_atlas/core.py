"""Dense operators on small multi-qubit registers.

States carry a ``dims`` signature (one entry per subsystem) so that partial
traces and partial transposes can be taken by subsystem index.  Everything
here is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
NORM_TOL = 1e-12


def _as_dims(dims: Sequence[int], side: int) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims) or int(np.prod(dims)) != side:
        raise ValueError(f"dims {dims} do not match dimension {side}")
    return dims


def _qubit_dims(side: int) -> tuple[int, ...]:
    n = int(round(np.log2(side)))
    if 2**n != side:
        raise ValueError(f"dimension {side} is not a power of two; pass dims explicitly")
    return (2,) * n


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Hermitian matrix with a subsystem signature (not necessarily a state)."""

    data: np.ndarray
    dims: tuple[int, ...] = field(default=())

    def __post_init__(self):
        data = np.asarray(self.data, dtype=complex)
        if data.ndim != 2 or data.shape[0] != data.shape[1]:
            raise ValueError("operator must be a square matrix")
        dims = _as_dims(self.dims, data.shape[0]) if self.dims else _qubit_dims(data.shape[0])
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "dims", dims)
        self._check()

    def _check(self):
        err = np.max(np.abs(self.data - self.data.conj().T))
        if err > HERMITIAN_TOL:
            raise ValueError(f"matrix is not Hermitian (max |M - M^dag| = {err:.3g})")

    @property
    def shape(self):
        return self.data.shape

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)


@dataclass(frozen=True, eq=False)
class DensityMatrix(HermitianOperator):
    """Hermitian, positive semidefinite, unit-trace operator."""

    def _check(self):
        super()._check()
        tr = np.trace(self.data)
        if abs(tr - 1) > TRACE_TOL:
            raise ValueError(f"trace is {tr.real:.15g}, expected 1")
        lmin = np.linalg.eigvalsh(self.data)[0]
        if lmin < -PSD_TOL:
            raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {lmin:.3g})")


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized state vector with a subsystem signature."""

    data: np.ndarray
    dims: tuple[int, ...] = field(default=())

    def __post_init__(self):
        data = np.asarray(self.data, dtype=complex).ravel()
        dims = _as_dims(self.dims, data.size) if self.dims else _qubit_dims(data.size)
        norm = np.linalg.norm(data)
        if abs(norm - 1) > NORM_TOL:
            raise ValueError(f"state has norm {norm:.15g}, expected 1")
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "dims", dims)

    @classmethod
    def normalized(cls, data, dims=()) -> "PureState":
        data = np.asarray(data, dtype=complex).ravel()
        return cls(data / np.linalg.norm(data), dims)

    def to_density(self) -> DensityMatrix:
        return DensityMatrix(np.outer(self.data, self.data.conj()), self.dims)

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)


State = Union[PureState, DensityMatrix]


def as_density(state) -> DensityMatrix:
    """Coerce a state (or raw matrix/vector) to a DensityMatrix."""
    if isinstance(state, DensityMatrix):
        return state
    if isinstance(state, PureState):
        return state.to_density()
    arr = np.asarray(state, dtype=complex)
    if arr.ndim == 1:
        return PureState(arr).to_density()
    return DensityMatrix(arr)


def tensor(a, b):
    """Kronecker product of two states or operators; dims are concatenated."""
    dims = a.dims + b.dims
    if isinstance(a, PureState) and isinstance(b, PureState):
        return PureState(np.kron(a.data, b.data), dims)
    if isinstance(a, PureState) or isinstance(b, PureState):
        a, b = as_density(a), as_density(b)
    kind = DensityMatrix if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix) else HermitianOperator
    return kind(np.kron(a.data, b.data), dims)


def _check_indices(idx: Iterable[int], n: int) -> list[int]:
    idx = sorted(set(int(i) for i in idx))
    if any(i < 0 or i >= n for i in idx):
        raise ValueError(f"subsystem indices {idx} out of range for {n} subsystems")
    return idx


def partial_trace(state: State, keep: Iterable[int]) -> DensityMatrix:
    """Reduced state on the subsystems in ``keep`` (their original order is preserved)."""
    dims = state.dims
    n = len(dims)
    keep = _check_indices(keep, n)
    drop = [i for i in range(n) if i not in keep]
    kdims = tuple(dims[i] for i in keep)
    dk = int(np.prod(kdims)) if keep else 1
    if isinstance(state, PureState):
        psi = state.data.reshape(dims).transpose(keep + drop).reshape(dk, -1)
        out = psi @ psi.conj().T
    else:
        rho = state.data.reshape(dims + dims)
        perm = keep + drop
        rho = rho.transpose(perm + [n + i for i in perm])
        dd = state.data.shape[0] // dk
        out = np.einsum("ajbj->ab", rho.reshape(dk, dd, dk, dd))
    return DensityMatrix(out, kdims or (1,))


def partial_transpose(state: State, subsystem: Union[int, Iterable[int]]) -> HermitianOperator:
    """Transpose applied on the given subsystem(s) only."""
    rho = as_density(state)
    dims = rho.dims
    n = len(dims)
    sub = _check_indices([subsystem] if np.isscalar(subsystem) else subsystem, n)
    t = rho.data.reshape(dims + dims)
    axes = list(range(2 * n))
    for i in sub:
        axes[i], axes[n + i] = axes[n + i], axes[i]
    return HermitianOperator(t.transpose(axes).reshape(rho.data.shape), dims)


def eigenvalues_hermitian(h) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix in ascending order."""
    m = h.data if isinstance(h, HermitianOperator) else np.asarray(h, dtype=complex)
    err = np.max(np.abs(m - m.conj().T))
    if err > HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (max |M - M^dag| = {err:.3g})")
    return np.linalg.eigvalsh(m)


def entropy_from_spectrum(evals) -> float:
    """Shannon entropy in bits of a (possibly slightly negative) spectrum, 0 log 0 = 0."""
    p = np.asarray(evals, dtype=float)
    p = p[p > 1e-300]
    return float(-np.sum(p * np.log2(p))) + 0.0


def von_neumann_entropy(state: State) -> float:
    """-Tr rho log2 rho."""
    if isinstance(state, PureState):
        return 0.0
    return entropy_from_spectrum(np.linalg.eigvalsh(as_density(state).data))


def binary_entropy(x: float) -> float:
    return entropy_from_spectrum([x, 1.0 - x])


def purify(rho: DensityMatrix, rank_tol: float = 1e-12) -> PureState:
    """Canonical eigen-purification sum_i sqrt(l_i) |v_i>|i>.

    The ancilla is appended as the last subsystem; its dimension is the rank
    padded up to the next power of two (1 for a pure input).
    """
    rho = as_density(rho)
    evals, evecs = np.linalg.eigh(rho.data)
    order = np.argsort(evals)[::-1]
    evals, evecs = evals[order], evecs[:, order]
    r = max(1, int(np.sum(evals > rank_tol * max(evals[0], 1.0))))
    d_anc = 1 << (r - 1).bit_length()
    psi = np.zeros((rho.data.shape[0], d_anc), dtype=complex)
    psi[:, :r] = evecs[:, :r] * np.sqrt(np.clip(evals[:r], 0.0, None))
    return PureState.normalized(psi.ravel(), rho.dims + (d_anc,))


def permute(state: State, order: Sequence[int]):
    """Reorder subsystems: new subsystem k is old subsystem ``order[k]``."""
    dims = state.dims
    n = len(dims)
    order = list(order)
    if sorted(order) != list(range(n)):
        raise ValueError(f"{order} is not a permutation of {n} subsystems")
    new_dims = tuple(dims[i] for i in order)
    if isinstance(state, PureState):
        return PureState(state.data.reshape(dims).transpose(order).ravel(), new_dims)
    side = state.data.shape[0]
    t = state.data.reshape(dims + dims).transpose(order + [n + i for i in order])
    return type(state)(t.reshape(side, side), new_dims)


# -- standard states and random sampling ------------------------------------

def ket(bits: str) -> PureState:
    """Computational-basis qubit state, e.g. ``ket("010")``."""
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return PureState(v, (2,) * len(bits))


def ghz_state(n: int = 3) -> PureState:
    v = np.zeros(2**n, dtype=complex)
    v[0] = v[-1] = 1 / np.sqrt(2)
    return PureState(v, (2,) * n)


def w_state() -> PureState:
    v = np.zeros(8, dtype=complex)
    v[[1, 2, 4]] = 1 / np.sqrt(3)
    return PureState(v, (2, 2, 2))


def bell_state() -> PureState:
    return ghz_state(2)


def maximally_mixed(d: int = 2) -> DensityMatrix:
    return DensityMatrix(np.eye(d) / d, (d,))


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_pure_state(dims: Sequence[int], rng: np.random.Generator) -> PureState:
    d = int(np.prod(dims))
    return PureState.normalized(rng.standard_normal(d) + 1j * rng.standard_normal(d), tuple(dims))


def random_density_matrix(dims: Sequence[int], rng: np.random.Generator, rank: int | None = None) -> DensityMatrix:
    """Random state from the induced (Hilbert-Schmidt for full rank) measure."""
    d = int(np.prod(dims))
    k = rank or d
    g = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(rho / np.trace(rho).real, tuple(dims))


def apply_local(state: State, op: np.ndarray, subsystem: int):
    """Apply ``op`` on one subsystem (no renormalization, returns raw array)."""
    dims = state.dims
    mats = [np.eye(d) for d in dims]
    mats[subsystem] = np.asarray(op, dtype=complex)
    full = mats[0]
    for m in mats[1:]:
        full = np.kron(full, m)
    if isinstance(state, PureState):
        return full @ state.data
    return full @ state.data @ full.conj().T
