import math
from fractions import Fraction

import pytest

import sphmc


def test_threej_exact_value():
    v = sphmc.threej(2, 2, 0, 1, -1, 0)
    assert v.sign == -1
    assert v.radicand == Fraction(1, 5)
    assert v.value == pytest.approx(-1 / math.sqrt(5), rel=1e-15)


def test_selection_rule_zero():
    assert sphmc.threej(3, 1, 1, 0, 0, 0).sign == 0


def test_structure_constant_against_quadrature():
    g = sphmc.g_real(2, 1, 2, -1, 1, 0)
    G = sphmc.oracle_structure_coeff(4, 2, 1, 2, -1, 1, 0)
    assert G.real == pytest.approx(0.0, abs=1e-12)
    assert G.imag == pytest.approx(-g.value, abs=1e-12)


def test_bracket_terms():
    assert sorted(sphmc.bracket((2, 1), (3, -1))) == [2, 4]
    assert sphmc.bracket((2, 1), (2, 1)) == {}


def test_mc_flat_exact():
    r = sphmc.mc_flat((1, 0), (2, 2))
    assert r["flat"] == -12
    assert r["value"] == pytest.approx(-12 / math.pi)
    assert sphmc.mc_flat((4, 1), (1, 0))["flat"] == 0
    assert sphmc.mc_flat((3, 2), (2, -2))["sign"] == 1


def test_critical_ratio_table_cell():
    c = sphmc.critical_ratio(3, 2, 1)
    assert c["status"] == "ok"
    assert c["direction"] == ">"
    assert c["ratio"] == pytest.approx(2.983, rel=5e-3)
    assert sphmc.critical_ratio(5, 2, 1)["status"] == "undefined"
    assert sphmc.critical_ratio(3, 2, 3)["status"] == "not-applicable"


def test_critical_table_csv_header():
    text = sphmc.critical_table_csv(4, 3)
    lines = text.splitlines()
    assert lines[0] == "l2,m2,ratio,direction,status"
    assert all(line.endswith(("undefined", "not-applicable")) for line in lines[1:])


def test_coriolis_above_ratio_is_positive():
    assert sphmc.mc_coriolis((3, 0), (2, 1), "5.0")["sign"] == 1
    assert sphmc.mc_coriolis((3, 0), (2, 1), 2)["sign"] == -1


def test_rhw_special_case():
    r = sphmc.rhw_mc((1, 0), 1, (3, 2), (1, 1), rotation=-2)
    assert r["plain_over_pi"] == 0
    assert r["extended_rational"] == 2


def test_rhw_zonal_order_rejected():
    with pytest.raises(sphmc.HypothesisError):
        sphmc.rhw_mc((1, 0), 1, (3, 0), (2, 1))


def test_threshold_and_conjugate_time():
    assert sphmc.rhw_threshold(3, 2, 2, 4) == 0.0
    assert sphmc.conjugate_time(math.pi**2, 1.0) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        sphmc.conjugate_time(-1.0, 1.0)


def test_invalid_index_raises():
    with pytest.raises(ValueError):
        sphmc.mc_flat((2, 3), (1, 0))


def test_table_suite_passes():
    r = sphmc.run_suite("table")
    assert r["ok"], r["messages"]
