"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import twoloop


def test_vassiliev_values():
    trefoil = twoloop.torus_record(3, 2)
    assert twoloop.v2(trefoil) == Fraction(-1)
    assert twoloop.v3(trefoil) == Fraction(1)
    assert twoloop.v3(twoloop.torus_record(7, 2)) == Fraction(14)
    assert twoloop.v3_torus(5, 2) == Fraction(5)


def test_exact_fractions_cross_the_boundary():
    phi = twoloop.torus_phi(2, 3)
    assert phi.derivative().evaluate_at_one() == Fraction(-8, 3)
    assert twoloop.v3_cable(Fraction(1), Fraction(2), 2, 3) == Fraction(8)


def test_theta_fundamental_domain():
    theta = twoloop.torus_theta(3, 2)
    assert theta.fundamental_domain() == [
        (2, 0, Fraction(1)),
        (2, 1, Fraction(-1)),
    ]
    assert theta.degree_t1() == Fraction(2)


def test_pretty_printing():
    assert str(twoloop.torus_theta_hat(7, 2)) == "3t^5 + 5t^3 + 6t + 6t^-1 + 5t^-3 + 3t^-5"
    assert str(twoloop.torus_alexander(3, 2)) == "t - 1 + t^-1"


def test_polynomial_construction_and_arithmetic():
    f = twoloop.LaurentPolynomial([(Fraction(1, 2), Fraction(1)), (Fraction(-1, 2), Fraction(-1))])
    square = f * f
    assert square == twoloop.LaurentPolynomial(
        [(Fraction(-1), Fraction(1)), (Fraction(0), Fraction(-2)), (Fraction(1), Fraction(1))]
    )
    assert square.evaluate_at_one() == Fraction(0)
    assert square.is_symmetric()


def test_cabling_pipeline():
    trefoil = twoloop.cable(twoloop.unknot(), 3, 2)
    assert trefoil.name == "unknot^(3,2)"
    assert trefoil.alexander == twoloop.torus_alexander(3, 2)

    cabled = twoloop.cable(trefoil, 2, 3)
    assert twoloop.v3(cabled) == Fraction(8)
    assert twoloop.reduce_theta_hat(cabled.theta) == twoloop.cable_theta_hat(trefoil, 2, 3)


def test_record_round_trip():
    record = twoloop.builtin("torus:5:3")
    text = twoloop.serialize_record(record)
    parsed = twoloop.parse_record(text)
    assert twoloop.serialize_record(parsed) == text
    assert parsed.theta == record.theta


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        twoloop.torus_alexander(4, 2)
    with pytest.raises(ValueError):
        twoloop.parse_record("not a record\n")


def test_verify_sweep():
    results = twoloop.run_verify(3, 2)
    assert results
    assert all(passed for _, passed, _ in results)
