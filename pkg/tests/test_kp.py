from itertools import product

import pytest

from hermkp.errors import CapacityError, InconsistencyError
from hermkp.kp import (
    coefficient, is_symmetric, kp_connected_correlator, kp_correlator, n_cycles, npoint,
    npoint_signed, npoint_vs_free_energy, one_point_coefficients, propagator, symmetrized_classes,
)
from hermkp.partitions import Partition, partitions_up_to
from hermkp.polyalg import NPoly, TruncSeries
from hermkp.wick import connected_correlator, wick_correlator
from printed_tables import G1, G2, G2_MISPRINTS, G3, G3_MISPRINTS, NPOINT_LISTING, poly


@pytest.fixture(scope="module")
def g1():
    return npoint(1, 21)


@pytest.fixture(scope="module")
def g2():
    return npoint(2, 20)


@pytest.fixture(scope="module")
def g3():
    return npoint(3, 13)


def test_one_point_listing(g1):
    got = one_point_coefficients(g1)
    for e, value in G1:
        assert got[e] == poly(value), e
    assert set(got) == {e for e, _ in G1}


@pytest.mark.parametrize("exps, value", G2)
def test_two_point_listing(g2, exps, value):
    a, b = exps
    assert g2.coefficient((a, b)) == poly(value)
    assert g2.coefficient((b, a)) == poly(value)


@pytest.mark.parametrize("exps, value", G3)
def test_three_point_listing(g3, exps, value):
    assert symmetrized_classes(g3)[exps] == poly(value)


@pytest.mark.parametrize("misprints, series_name", [(G2_MISPRINTS, "g2"), (G3_MISPRINTS, "g3")])
def test_misprinted_entries_follow_the_census(request, misprints, series_name):
    series = request.getfixturevalue(series_name)
    for exps, (printed, computed) in misprints.items():
        got = symmetrized_classes(series)[exps]
        oracle = connected_correlator(Partition(e - 1 for e in exps)).poly
        assert got == oracle == poly(computed)
        assert got != poly(printed)


def test_listed_examples():
    for n, entries in NPOINT_LISTING.items():
        series = npoint(n, 8)
        for exps, value in entries:
            assert series.coefficient(exps) == poly(value), (n, exps)


def test_coefficients_are_connected_correlators(g2, g3):
    for series, n in ((g2, 2), (g3, 3)):
        for exps, c in series.items():
            if sum(exps) - n <= 10:
                lam = Partition(sorted((e - 1 for e in exps), reverse=True))
                assert c == connected_correlator(lam).poly, exps


@pytest.mark.parametrize("n, cap", [(1, 12), (2, 12), (3, 10), (4, 8)])
def test_symmetry_parity_regularity(n, cap):
    series = npoint(n, cap)
    assert is_symmetric(series)
    for exps in series.terms:
        assert min(exps) >= 2
        assert (sum(exps) - n) % 2 == 0
        assert sum(exps) - n <= cap


def test_two_point_double_pole_cancels():
    # without the subtraction the x^-1 y^-1 -type terms would survive
    signed = npoint_signed(2, 6)
    assert all(min(k) >= 2 for k in signed.terms)


def test_cycles_and_propagators():
    assert len(list(n_cycles(4))) == 6
    assert not propagator(0, 0, 2, 4).includes_rational_part
    assert propagator(0, 1, 2, 4).includes_rational_part


@pytest.mark.parametrize("n, cap", [(1, 7), (2, 8), (3, 9)])
def test_free_energy_bridge(n, cap):
    report = npoint_vs_free_energy(n, cap)
    assert report.ok, report.summary()
    assert report.checked > 0


def test_kp_engine_matches_census():
    for lam in partitions_up_to(10):
        if lam and len(lam) <= 3:
            assert kp_correlator(lam) == wick_correlator(lam), lam
            assert kp_connected_correlator(lam) == connected_correlator(lam), lam


def test_kp_engine_limits():
    with pytest.raises(CapacityError):
        kp_correlator(Partition((1,) * 6))
    with pytest.raises(CapacityError):
        kp_connected_correlator(Partition((20, 20, 2)))
    assert kp_correlator(Partition((3,))).is_zero()


def test_coefficient_helper_uses_j_indices(g2):
    assert coefficient(g2, (1, 1)) == g2.coefficient((2, 2)) == NPoly([0, 1])


def test_bad_arguments():
    with pytest.raises(ValueError):
        npoint(0, 4)
    with pytest.raises(ValueError):
        npoint(2, 0)
    asym = TruncSeries(("x", "y"), 6, {(2, 3): NPoly([1]), (3, 2): NPoly([2])})
    assert not is_symmetric(asym)
    with pytest.raises(InconsistencyError):
        symmetrized_classes(asym)


def test_a_series_listed_coefficients():
    from fractions import Fraction
    from hermkp.kp import a_series
    from printed_tables import factored
    a = a_series(5)
    assert a.coefficient((1, 2)) == factored(Fraction(1, 2), [0, 1])
    assert a.coefficient((3, 2)) == factored(Fraction(-1, 8), [-2, -1, 0, 1])
    assert a.coefficient((1, 1)).is_zero()
    with pytest.raises(ValueError):
        a_series(1)


def test_bridge_reports_mismatch(monkeypatch):
    from hermkp import kp
    from hermkp.errors import EngineDisagreement
    real = kp.npoint

    def tampered(n, cap=None):
        s = real(n, cap)
        s.terms[(2, 2)] = s.terms[(2, 2)] + NPoly([1])
        return s
    monkeypatch.setattr(kp, "npoint", tampered)
    report = kp.npoint_vs_free_energy(2, 6)
    assert not report.ok and "j=(1, 1)" in report.first_mismatch
    with pytest.raises(EngineDisagreement):
        kp.npoint_vs_free_energy(2, 6, raise_on_mismatch=True)
