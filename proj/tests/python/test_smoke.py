import math

import pytest

import rbforms


def test_exports():
    for name in rbforms.__all__:
        assert hasattr(rbforms, name)


def test_extremal_law_moments():
    law = rbforms.make_extremal(1.0, 2.0, 4.0)
    m2, mt = rbforms.moments(law, 4.0)
    assert math.isclose(m2, 1.0, rel_tol=1e-12)
    assert math.isclose(mt, 2.0, rel_tol=1e-12)
    assert law.support_size() >= 2
    assert "SymmetricAtomDist" in repr(law)


def test_infeasible_targets_raise():
    with pytest.raises(ValueError):
        rbforms.make_extremal(1.0, 0.5, 3.0)


def test_approx_law_moments():
    law = rbforms.make_approx(1.0, 2.0, 4.0, 100)
    m2, mt = rbforms.moments(law, 4.0)
    assert math.isclose(m2, 1.0, rel_tol=1e-12)
    assert math.isclose(mt, 2.0, rel_tol=1e-12)


def test_chaos_values():
    assert rbforms.rademacher_sum_moment(3, 4.0) == pytest.approx(21.0)
    assert rbforms.rademacher_chaos_ordinary(3, 4.0) == pytest.approx(21.0)
    assert rbforms.rademacher_chaos_decoupled(2, 4.0) == pytest.approx(8.0)


def test_bounds_dicts():
    sup = rbforms.sup_bound("ordinary", [1.0, 1.0], [2.0, 2.0], 3.0)
    assert sup["value"] == pytest.approx(4.0)
    assert sup["regime"] == "sup_2to4"
    total = sup["product_term"] + sup["cross_terms"] + sup["chaos_term"]
    assert total == pytest.approx(sup["value"])

    inf = rbforms.inf_bound("ordinary", [1.0, 1.0], [2.0, 2.0], 3.0)
    assert inf["value"] == pytest.approx(4.0)

    dec = rbforms.sup_bound_decoupled([1.0, 1.0], [2.0, 2.0],
                                      [1.0, 1.0], [2.0, 2.0], 3.0)
    assert dec["value"] >= sup["value"] - 1e-12


def test_moment_bilinear_matches_closed_form():
    signs = [rbforms.make_rademacher(1.0) for _ in range(3)]
    value = rbforms.moment_bilinear("ordinary", 4.0, signs)
    assert value == pytest.approx(21.0)


def test_mc_estimate_shape():
    signs = [rbforms.make_rademacher(1.0) for _ in range(2)]
    estimate, stderr = rbforms.mc_moment_bilinear(
        "ordinary", 4.0, signs, samples=2000, seed=7)
    assert estimate == pytest.approx(1.0)
    assert stderr == 0.0


def test_best_constant():
    report = rbforms.best_constant("B5", 4.0, 2)
    assert report["literal"] == pytest.approx(0.25)
    assert report["derived"] == pytest.approx(0.25)
    assert report["relative_gap"] == 0.0
    with pytest.raises(ValueError):
        rbforms.best_constant("B9", 4.0, 2)


def test_sample_member_reproducible():
    one = rbforms.sample_member(1.0, 2.0, 3.0, "M1", seed=11)
    two = rbforms.sample_member(1.0, 2.0, 3.0, "M1", seed=11)
    assert repr(one) == repr(two)
    m2, mt = rbforms.moments(one, 3.0)
    assert math.isclose(m2, 1.0, rel_tol=1e-9)
    assert math.isclose(mt, 2.0, rel_tol=1e-9)


def test_convergence():
    report = rbforms.check_convergence(1.0, 2.0, 3.0, 3,
                                       m_schedule=[10, 100, 1000])
    assert report["passed"]
    gaps = [row["gap"] for row in report["rows"]]
    assert gaps[-1] <= gaps[0] + 1e-12
