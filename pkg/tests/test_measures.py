import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discord_atlas.core import (
    DensityMatrix,
    PureState,
    apply_local,
    bell_state,
    ghz_state,
    ket,
    maximally_mixed,
    partial_trace,
    random_density_matrix,
    random_pure_state,
    random_unitary,
    tensor,
    w_state,
)
from discord_atlas.qubit import (
    Rank2Params,
    concurrence,
    eof_from_concurrence,
    eof_two_qubit,
    family_entanglement,
    make_rank2_state,
    mutual_information,
    negativity,
    pi_tangle,
    pi_tangle_terms,
    purify_rank2,
    reduced_ac,
)

from oracles import negativity_loops, pi_tangle_bruteforce

W_PI_TANGLE = 0.5493635455554623  # (4*sqrt(5) - 4) / 9
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_negativity_examples():
    assert negativity(bell_state()) == pytest.approx(1, abs=1e-12)
    assert negativity(bell_state(), convention="half") == pytest.approx(0.5, abs=1e-12)
    assert negativity(tensor(maximally_mixed(), maximally_mixed())) == pytest.approx(0, abs=1e-12)
    ac = reduced_ac(Rank2Params(0.5, np.pi / 4, np.pi / 4))
    assert negativity(ac) > 0
    with pytest.raises(ValueError):
        negativity(bell_state(), convention="nielsen")
    with pytest.raises(ValueError):
        negativity(bell_state(), subsystems=(0, 1))


@given(seed=seeds)
@settings(max_examples=30, deadline=None)
def test_negativity_matches_loops_and_is_nonnegative(seed):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix([2, 2, 2], rng)
    for sub in ([0], [1], [2]):
        n = negativity(rho, sub)
        assert n >= 0
        assert n == pytest.approx(negativity_loops(rho.data, [2, 2, 2], sub), abs=1e-10)


def test_concurrence_and_eof_examples():
    assert concurrence(bell_state()) == pytest.approx(1, abs=1e-10)
    assert eof_two_qubit(bell_state()) == pytest.approx(1, abs=1e-10)
    assert concurrence(tensor(ket("0"), ket("1"))) == pytest.approx(0, abs=1e-10)
    assert concurrence(reduced_ac(Rank2Params(0.5, np.pi / 4, np.pi / 4))) == pytest.approx(0.5, abs=1e-10)
    assert eof_from_concurrence(0.5) == pytest.approx(0.35457890266527003, abs=1e-12)
    assert eof_from_concurrence(0) == 0
    with pytest.raises(ValueError):
        concurrence(ghz_state())


@given(seed=seeds)
@settings(max_examples=30, deadline=None)
def test_concurrence_of_pure_states(seed):
    rng = np.random.default_rng(seed)
    psi = random_pure_state([2, 2], rng)
    m = psi.data.reshape(2, 2)
    expected = 2 * abs(np.linalg.det(m))
    assert concurrence(psi) == pytest.approx(expected, abs=1e-8)


@given(seed=seeds)
@settings(max_examples=30, deadline=None)
def test_concurrence_local_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix([2, 2], rng, rank=2)
    u = np.kron(random_unitary(2, rng), random_unitary(2, rng))
    rotated = DensityMatrix(u @ rho.data @ u.conj().T, (2, 2))
    assert concurrence(rotated) == pytest.approx(concurrence(rho), abs=1e-8)


def test_mutual_information_examples(rng):
    assert mutual_information(bell_state()) == pytest.approx(2, abs=1e-12)
    prod = tensor(random_density_matrix([2], rng), random_density_matrix([2], rng))
    assert mutual_information(prod) == pytest.approx(0, abs=1e-10)


def test_pi_tangle_examples():
    assert pi_tangle(ghz_state()) == pytest.approx(1, abs=1e-12)
    assert pi_tangle(w_state()) == pytest.approx(W_PI_TANGLE, abs=1e-10)
    assert pi_tangle_bruteforce(w_state().data) == pytest.approx(W_PI_TANGLE, abs=1e-10)
    assert pi_tangle(tensor(tensor(ket("0"), ket("1")), ket("0"))) == pytest.approx(0, abs=1e-12)
    with pytest.raises(ValueError):
        pi_tangle(bell_state())


@given(seed=seeds)
@settings(max_examples=20, deadline=None)
def test_pi_tangle_matches_bruteforce(seed):
    psi = random_pure_state([2, 2, 2], np.random.default_rng(seed))
    assert pi_tangle(psi) == pytest.approx(pi_tangle_bruteforce(psi.data), abs=1e-10)
    assert all(t >= -1e-10 for t in pi_tangle_terms(psi))


@given(seed=seeds, party=st.integers(0, 2))
@settings(max_examples=20, deadline=None)
def test_pi_tangle_local_unitary_invariance(seed, party):
    rng = np.random.default_rng(seed)
    psi = random_pure_state([2, 2, 2], rng)
    moved = PureState(apply_local(psi, random_unitary(2, rng), party), (2, 2, 2))
    assert pi_tangle(moved) == pytest.approx(pi_tangle(psi), abs=1e-9)


@given(
    q=st.floats(0.05, 0.95),
    a=st.floats(0, 2 * np.pi),
    b=st.floats(0, 2 * np.pi),
)
@settings(max_examples=30, deadline=None)
def test_vectorized_family_entanglement_matches_scalar(q, a, b):
    p = Rank2Params(q, a, b)
    psi = purify_rank2(p)
    vec = family_entanglement(q, np.array([a]), np.array([b]))
    assert vec["neg_ac"][0] == pytest.approx(negativity(partial_trace(psi, [0, 2])), abs=1e-10)
    assert vec["neg_bc"][0] == pytest.approx(negativity(partial_trace(psi, [1, 2])), abs=1e-10)
    assert vec["neg_ab"][0] == pytest.approx(0, abs=1e-10)
    assert vec["pi_tangle"][0] == pytest.approx(pi_tangle(psi), abs=1e-10)
    assert make_rank2_state(p).dims == (2, 2)
