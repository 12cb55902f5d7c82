from fractions import Fraction

import pytest

import signpat


def test_classify_and_order():
    assert signpat.classify("++--+-+++-") == [(1, "A"), (2, "C")]
    assert signpat.classify("+++-+++-") == []
    assert signpat.is_canonical("+---+")
    assert signpat.canonical_order("++--") == "N<P<N"
    assert signpat.sign_counts("++--") == (1, 2)


def test_rigid():
    assert signpat.rigid("PNPN") == "++--+"
    assert signpat.rigid("NNPN") is None


def test_exact_polynomials():
    coeffs = signpat.poly_from_roots([Fraction(9, 10), -1, Fraction(-11, 10)])
    assert coeffs == [Fraction(-99, 100), Fraction(-79, 100), Fraction(6, 5), 1]
    assert signpat.pattern_of_poly(coeffs) == "++--"
    assert signpat.moduli_order([-2, -3, 4]) == "N<N<P"


def test_realize_and_witness():
    assert signpat.realize("++--", 10) == [-10, 100, -1000]
    roots = signpat.witness("++--", "N<N<P", budget=20000)
    assert roots is not None
    assert signpat.moduli_order(roots) == "N<N<P"
    assert signpat.pattern_of_poly(signpat.poly_from_roots(roots)) == "++--"
    assert signpat.witness("+++-", "N<P<N", budget=1000) is None


def test_orders_report():
    report = signpat.orders("++--", budget=20000)
    assert report["canonical_order"] == "N<P<N"
    assert [o["order"] for o in report["orders"]] == ["N<N<P", "N<P<N", "P<N<N"]


def test_lift_and_census():
    assert signpat.symbolic_lift("++++") == "++**--"
    report = signpat.st_report("++++")
    assert sorted(report["T"]) == sorted(["++++--", "+++---", "++----"])
    assert report["holds"]
    assert signpat.verify_proposition(7)
    assert not signpat.verify_proposition(8)
    assert signpat.verify_theorem(3, budget=5000)
    row = signpat.census(4)
    assert (row["total"], row["canonical"]) == (16, 10)


def test_errors_are_value_errors():
    with pytest.raises(signpat.SignpatError):
        signpat.canonical_order("-+")
    with pytest.raises(ValueError):
        signpat.poly_from_roots([1, -1])
