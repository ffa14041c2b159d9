import math

import pytest

import sunit


def test_quaternion_round_trip():
    q = sunit.canonical("1/2 + 1/2*I - 1/2*J + 1/2*K")
    assert q == "1/2 + 1/2*I - 1/2*J + 1/2*K"
    assert sunit.reduced_norm(q) == "1"
    assert sunit.is_hurwitz(q)
    assert sunit.multiply("I", "J") == "0 + 0*I + 0*J + 1*K"


def test_height_and_norm():
    assert sunit.height("1 + I + J") == "3"
    assert sunit.reduced_norm("-1 + I - J - 3*K") == "12"


def test_unit_group():
    assert len(sunit.enumerate_by_norm(1)) == 24
    assert sunit.unit_order_counts() == {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}
    assert len(sunit.generating_set([3])) == 120


def test_hurwitz_bounds():
    report = sunit.bounds(1, 2, 1, 1, 0, "2")
    assert float(report["c"]) == pytest.approx(4 / math.pi, rel=1e-15)
    assert float(report["height_bound_general"]) == pytest.approx(4 / math.pi, rel=1e-15)
    assert float(report["m_X"]) == pytest.approx(16 / math.pi**2, rel=1e-15)


def test_local_abs_matches_content():
    assert sunit.local_abs("3 + 3*I", 3) == "1/3"
    assert sunit.local_abs("1/5*I", 5) == "5"


def test_tree_checks():
    assert len(sunit.neighbor_coverage(3)) == 4
    report = sunit.product_transitivity([3], 2)
    assert report["reached"] == report["expected"] == 17


def test_relators_are_central():
    values = dict(sunit.relator_values())
    assert values["r1"] == "1/1728"
    assert values["r8"] == "1"


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        sunit.canonical("1 + Q")
    with pytest.raises(ValueError):
        sunit.generating_set([4])
    with pytest.raises(ZeroDivisionError):
        sunit.height("0")
