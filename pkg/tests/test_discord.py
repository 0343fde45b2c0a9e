import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discord_atlas import ConvergenceError
from discord_atlas.core import (
    DensityMatrix,
    bell_state,
    ghz_state,
    maximally_mixed,
    random_density_matrix,
    random_unitary,
    tensor,
)
from discord_atlas.qubit import (
    MeasurementBasis,
    OptimizerConfig,
    Rank2Params,
    classical_correlation,
    discord,
    discord_result,
    make_rank2_state,
)
from discord_atlas.qubit.discord import conditional_blocks, conditional_entropy, sphere_grid

from oracles import _cond_entropy, discord_oracle

# oracle-frozen: D(A,B) of the rank-2 family at q=1/2, alpha=beta=pi/4
D_QUARTER = 0.1441768148989937
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_measurement_basis():
    b = MeasurementBasis.from_vector([0, 0, 2])
    assert np.allclose(b.bloch, [0, 0, 1])
    plus, minus = b.projectors()
    assert np.allclose(plus + minus, np.eye(2))
    assert np.allclose(plus @ minus, 0)


def test_discord_examples(rng):
    assert discord(bell_state()) == pytest.approx(1, abs=1e-8)
    assert discord(bell_state(), measured="A") == pytest.approx(1, abs=1e-8)
    assert classical_correlation(bell_state()) == pytest.approx(1, abs=1e-8)
    prod = tensor(random_density_matrix([2], rng), random_density_matrix([2], rng))
    assert discord(prod) == pytest.approx(0, abs=1e-8)
    assert discord(tensor(maximally_mixed(), maximally_mixed())) == pytest.approx(0, abs=1e-8)
    p = Rank2Params(0.5, np.pi / 4, np.pi / 4)
    assert discord(make_rank2_state(p)) == pytest.approx(D_QUARTER, abs=1e-8)
    with pytest.raises(ValueError):
        discord(ghz_state())
    with pytest.raises(ValueError):
        discord(bell_state(), measured="C")


def test_conditional_entropy_matches_explicit_projectors(rng):
    rho = random_density_matrix([2, 2], rng)
    rho_a, m = conditional_blocks(rho.data)
    pts = sphere_grid(8)
    vals = conditional_entropy(rho_a, m, pts)
    for n, v in zip(pts, vals):
        assert v == pytest.approx(_cond_entropy(rho.data, n), abs=1e-10)


def test_oracle_agreement_on_family_point():
    rho = make_rank2_state(Rank2Params(0.5, np.pi / 4, np.pi / 4))
    assert discord_oracle(rho.data) == pytest.approx(D_QUARTER, abs=1e-9)


@given(seed=seeds)
@settings(max_examples=25, deadline=None)
def test_decomposition_and_nonnegativity(seed):
    rho = random_density_matrix([2, 2], np.random.default_rng(seed))
    for side in ("A", "B"):
        r = discord_result(rho, side)
        assert r.converged
        assert r.discord >= -1e-9
        assert r.classical >= -1e-9
        assert abs(r.discord + r.classical - r.mutual_info) <= 1e-9


@given(seed=seeds)
@settings(max_examples=15, deadline=None)
def test_local_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix([2, 2], rng, rank=2)
    u = np.kron(random_unitary(2, rng), random_unitary(2, rng))
    rotated = DensityMatrix(u @ rho.data @ u.conj().T, (2, 2))
    assert discord(rotated) == pytest.approx(discord(rho), abs=1e-7)


def test_classical_quantum_states_have_zero_discord(rng):
    # classical on B: sum_k p_k rho_k x |k><k|
    rho = sum(
        p * np.kron(random_density_matrix([2], rng).data, np.diag([1 - k, k]))
        for k, p in enumerate((0.3, 0.7))
    )
    assert discord(DensityMatrix(rho, (2, 2))) == pytest.approx(0, abs=1e-8)


def test_strict_convergence_raises():
    rho = make_rank2_state(Rank2Params(0.3, 0.4, 1.1))
    with pytest.raises(ConvergenceError):
        discord_result(rho, config=OptimizerConfig(grid=4, max_iter=1))
    r = discord_result(rho, config=OptimizerConfig(grid=4, max_iter=1, strict=False))
    assert not r.converged
