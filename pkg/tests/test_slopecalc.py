from fractions import Fraction

import pytest

from frobstrat.gfield import projective_plane
from frobstrat.localmodel import (
    ModelSpec,
    classify_stratum,
    intersection_colength,
    submodule_from_point,
)
from frobstrat.polygon import PSI2, PSI3, PSI4
from frobstrat.slopecalc import (
    BundleData,
    canonical_filtration_degrees,
    degree_from_colength,
    embedding_certificate,
    euler_characteristic,
    nonsplit_predicate,
    pullback_degree,
    pushforward_degree,
    stability_certificate,
    sun_upper_bound,
)

PRIMES = (2, 3, 5, 7)


def test_bundle_data_validation():
    with pytest.raises(ValueError):
        BundleData(0, 1)
    assert BundleData(3, 2).slope == Fraction(2, 3)


@pytest.mark.parametrize("d", range(-4, 5))
def test_pushforward_degree_line_bundle_case(d):
    assert pushforward_degree(BundleData(1, d - 1), 3, 2) == d + 1


def test_pushforward_degree_instances():
    assert pushforward_degree(BundleData(1, 0), 2, 2) == 1
    assert pushforward_degree(BundleData(4, 7), 5, 1) == 7   # genus 1: unchanged


def test_pushforward_conserves_euler_characteristic():
    for p in PRIMES:
        for g in range(1, 6):
            for rank in range(1, 5):
                for d in range(-5, 6):
                    b = BundleData(rank, d)
                    assert euler_characteristic(
                        p * rank, pushforward_degree(b, p, g), g
                    ) == euler_characteristic(rank, d, g)


def test_pullback_degree():
    assert pullback_degree(BundleData(3, 4), 3) == BundleData(3, 12)
    assert pullback_degree(BundleData(1, 0), 7) == BundleData(1, 0)
    assert pullback_degree(BundleData(2, -1), 2) == BundleData(2, -2)


@pytest.mark.parametrize("d", range(-4, 5))
def test_sun_upper_bound_values(d):
    mu = Fraction(d + 1, 3)
    assert sun_upper_bound(1, 3, 2, mu) == Fraction(d - 1, 3)
    assert sun_upper_bound(2, 3, 2, mu) == Fraction(d, 3)
    assert sun_upper_bound(3, 3, 2, mu) == mu   # gap term vanishes at full rank


def test_sun_upper_bound_monotone_in_subrank():
    for p in (3, 5):
        for g in (2, 3, 4):
            bounds = [sun_upper_bound(s, p, g, Fraction(1, p)) for s in range(1, p + 1)]
            assert all(a < b for a, b in zip(bounds, bounds[1:]))


def test_sun_upper_bound_rejects_bad_subrank():
    with pytest.raises(ValueError):
        sun_upper_bound(0, 3, 2, Fraction(1, 3))
    with pytest.raises(ValueError):
        sun_upper_bound(4, 3, 2, Fraction(1, 3))


@pytest.mark.parametrize("d", range(-10, 11))
def test_certificates_hold_in_the_main_regime(d):
    for report in (stability_certificate(3, 2, 3, d, d - 1),
                   embedding_certificate(3, 2, 3, d, d - 1)):
        assert report.passed
        assert [b.bound for b in report.bounds] == [Fraction(d - 1, 3), Fraction(d, 3)]
        assert all(b.threshold == Fraction(d, 3) for b in report.bounds)


def test_stability_certificate_at_t_minus_two():
    report = stability_certificate(3, 2, 3, 0, -2)
    assert report.passed
    assert [b.bound for b in report.bounds] == [Fraction(-2, 3), Fraction(-1, 3)]


def test_certificates_reject_bad_regimes():
    with pytest.raises(ValueError):
        stability_certificate(3, 1, 3, 0, -1)
    with pytest.raises(ValueError):
        embedding_certificate(3, 2, 2, 0, -1)   # rank differs from characteristic
    with pytest.raises(ValueError):
        stability_certificate(3, 2, 3, 5, 0)    # push-forward too small to contain E


def test_rank_one_is_vacuously_certified():
    report = embedding_certificate(3, 2, 1, 0, -1)
    assert report.passed
    assert report.bounds == ()


def test_certificate_can_fail():
    # a generous auxiliary degree breaks the inequalities and must report FAIL
    report = embedding_certificate(3, 2, 3, 0, 4)
    assert not report.passed
    assert any(not b.ok for b in report.bounds)


def test_certificate_json_shape():
    payload = stability_certificate(3, 2, 3, 0, -1).to_jsonable()
    assert payload["passed"] is True
    row = payload["witness"][0]
    assert set(row) == {"subrank", "bound", "threshold", "verdict"}
    assert row["bound"] == {"num": -1, "den": 3}
    assert row["verdict"] == "pass"


@pytest.mark.parametrize("d", [-2, 0, 7])
def test_canonical_filtration_degrees_main_regime(d):
    assert canonical_filtration_degrees(3, 2, d - 1) == [d + 3, d + 1, d - 1]


def test_canonical_filtration_degrees_instances():
    assert canonical_filtration_degrees(2, 2, 0) == [2, 0]
    assert canonical_filtration_degrees(5, 1, 3) == [3, 3, 3, 3, 3]


def test_canonical_filtration_degree_sum_identity():
    for p in PRIMES:
        for g in range(1, 6):
            for t in range(-5, 6):
                degrees = canonical_filtration_degrees(p, g, t)
                assert sum(degrees) == p * t + p * (p - 1) * (g - 1)


def test_canonical_degrees_match_pullback_of_pushforward():
    for p in PRIMES:
        for g in range(1, 6):
            for t in range(-5, 6):
                total = pullback_degree(
                    BundleData(p, pushforward_degree(BundleData(1, t), p, g)), p
                ).degree
                assert sum(canonical_filtration_degrees(p, g, t)) == total


def test_nonsplit_predicate_literal_values():
    assert nonsplit_predicate(3, 4) is True       # 3 | 3
    assert nonsplit_predicate(3, 3) is False      # 3 does not divide 2
    assert nonsplit_predicate(3, 2) is False      # literal value; see docstring caveat


def test_degree_from_colength():
    assert [degree_from_colength(0, c) for c in (1, 2, 3)] == [2, 1, 0]
    assert degree_from_colength(5, 2) == 6
    with pytest.raises(ValueError):
        degree_from_colength(0, 4)


def test_degree_colength_polygon_equivalences_on_the_plane(f3, model3):
    # colength 1 <-> degree d+2 <-> Psi4, and so on, on every plane point
    expected = {1: PSI4, 2: PSI3, 3: PSI2}
    for d in (-1, 0, 2):
        degree_of = {PSI4: d + 2, PSI3: d + 1, PSI2: d}
        for point in projective_plane(f3):
            V = submodule_from_point(model3, point)
            c = intersection_colength(V)
            label = classify_stratum(V)
            assert label == expected[c]
            assert degree_from_colength(d, c) == degree_of[label]
