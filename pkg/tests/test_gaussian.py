import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from discord_atlas import gaussian as g

from oracles import symplectic_eigenvalues_sq

nus = st.floats(1.0, 8.0)


@st.composite
def triples(draw):
    nu = (draw(nus), draw(nus), draw(nus))
    assume(g.triple_violation(nu) is None)
    return g.NuTriple(*nu)


def test_invalid_triples_rejected():
    for bad in ((0.5, 1, 1), (1, 5, 1), (2, 2, 4), (1, 1, 2), (np.nan, 1, 1)):
        with pytest.raises(g.InvalidTriple):
            g.NuTriple(*bad)
    assert "<= nu_B + nu_C - 1" in g.triple_violation((3.5, 1.5, 1.5))
    with pytest.raises(ValueError):
        g.standard_form_pure((1, 5, 1))


def test_vacuum_and_product_examples():
    assert np.allclose(g.standard_form_pure((1, 1, 1)), np.eye(6))
    assert np.allclose(g.symplectic_eigenvalues(np.eye(6)), 1)
    cov = g.standard_form_pure((1, 2, 2))
    assert g.is_product(cov, "AB") and g.is_product(cov, "AC")
    assert not g.ppt_separable(cov, "BC")
    assert np.allclose(g.block(cov, "B", "C"), np.diag([np.sqrt(3), -np.sqrt(3)]))


def test_two_two_one_example():
    cov = g.standard_form_pure((2, 2, 1))
    gab = g.block(cov, "A", "B")
    assert np.allclose(gab, np.diag([np.sqrt(3), -np.sqrt(3)]), atol=1e-12)
    assert np.linalg.det(gab) == pytest.approx(-3, abs=1e-12)
    assert g.is_product(cov, "AC") and g.is_product(cov, "BC")
    assert np.allclose(g.symplectic_eigenvalues(cov), 1, atol=1e-10)
    assert g.identity_residual(cov, "A") == pytest.approx(0, abs=1e-12)


def test_symplectic_eigenvalues_validation():
    with pytest.raises(ValueError):
        g.symplectic_eigenvalues(np.ones((3, 3)))
    with pytest.raises(ValueError):
        g.symplectic_eigenvalues(np.array([[1.0, 0.5], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        g.symplectic_eigenvalues(-np.eye(2))
    thermal = np.diag([3.0, 3.0, 1.5, 1.5])
    assert np.allclose(g.symplectic_eigenvalues(thermal), [3, 1.5])


@given(nu=triples())
@settings(max_examples=200, deadline=None)
def test_standard_form_properties(nu):
    cov = g.standard_form_pure(nu)
    assert np.allclose(cov, cov.T)
    assert np.linalg.eigvalsh(cov)[0] > 0
    sym = g.symplectic_eigenvalues(cov)
    assert np.max(np.abs(sym - 1)) <= 1e-8
    assert np.allclose(sym, symplectic_eigenvalues_sq(cov), atol=1e-6)
    for pair in g.PAIRS:
        assert abs(g.uncertainty_saturation_residual(cov, pair)) <= 1e-8
        assert abs(g.purity_matching_residual(cov, pair)) <= 1e-8
    for party in "ABC":
        assert abs(g.identity_residual(cov, party)) <= 1e-8
        assert np.linalg.det(g.block(cov, party)) == pytest.approx(getattr(nu, "nu_" + party.lower()) ** 2)


@given(nu=triples())
@settings(max_examples=200, deadline=None)
def test_equivalences(nu):
    assert g.verify_equivalences(nu).holds


@given(nu=st.floats(1.0, 20.0))
@settings(max_examples=50, deadline=None)
def test_one_nu_nu_family(nu):
    # vacuum on A, two-mode squeezed vacuum on BC
    cov = g.standard_form_pure((1.0, nu, nu))
    assert g.is_product(cov, "AB") and g.is_product(cov, "AC")
    assert np.allclose(g.block(cov, "A"), np.eye(2))
    rep = g.verify_equivalences((1.0, nu, nu))
    assert rep.in_hypothesis and rep.holds and rep.details["a_pure"]


def test_pair_report_fields():
    cov = g.standard_form_pure((2.0, 2.5, 1.8))
    r = g.pair_report(cov, "AB")
    assert r.pair == "AB"
    assert r.delta - r.delta_tilde == pytest.approx(4 * r.det_gamma)
    assert r.separable == (r.det_gamma >= -g.SEP_TOL)


def test_sample_triple_is_seeded():
    a = g.sample_triple(np.random.default_rng(7))
    b = g.sample_triple(np.random.default_rng(7))
    assert a == b and g.triple_violation(a.as_tuple()) is None
