"""Classical-method oracles and the cross-checking report."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactfit import (
    DataError,
    barycentric_eval,
    eval_polynomial,
    fit_polynomial,
    lagrange_basis_row,
    newton_fit,
    vandermonde_fit,
    verify_fit,
)

PART_ONE = [(Fraction(2), Fraction(8)), (Fraction(3), Fraction(11)), (Fraction(5), Fraction(18))]
SMALL = [(Fraction(1), Fraction(2)), (Fraction(2), Fraction(3)), (Fraction(3), Fraction(5))]

point_sets = st.lists(
    st.tuples(st.integers(-9, 9), st.integers(-99, 99)),
    min_size=1,
    max_size=8,
    unique_by=lambda point: point[0],
).map(lambda ps: [(Fraction(x), Fraction(y)) for x, y in ps])


@pytest.mark.parametrize("oracle", [newton_fit, vandermonde_fit])
def test_oracle_goldens(oracle):
    assert oracle(PART_ONE).coefficients == (3, Fraction(13, 6), Fraction(1, 6))
    assert oracle(SMALL).coefficients == (2, Fraction(-1, 2), Fraction(1, 2))


def test_newton_constant_through_two_points():
    model = newton_fit([(Fraction(0), Fraction(1)), (Fraction(1), Fraction(1))])
    assert model.coefficients == (1, 0)


def test_vandermonde_refit_golden():
    points = [(Fraction(2), Fraction(50)), (Fraction(3), Fraction(250)), (Fraction(5), Fraction(6250))]
    model = vandermonde_fit(points)
    assert model.coefficients == (5250, Fraction(-13400, 3), Fraction(2800, 3))


@pytest.mark.parametrize("oracle", [newton_fit, vandermonde_fit])
def test_oracle_single_point(oracle):
    assert oracle([(Fraction(4), Fraction(9))]).coefficients == (9,)


@pytest.mark.parametrize("oracle", [newton_fit, vandermonde_fit])
@given(points=point_sets)
def test_oracles_interpolate(oracle, points):
    model = oracle(points)
    for x, y in points:
        assert eval_polynomial(model, x) == y


@given(point_sets)
def test_oracles_agree_with_fit(points):
    coefficients = fit_polynomial(points).coefficients
    assert newton_fit(points).coefficients == coefficients
    assert vandermonde_fit(points).coefficients == coefficients


def test_barycentric_golden():
    assert barycentric_eval(PART_ONE, Fraction(4)) == Fraction(43, 3)
    assert barycentric_eval(PART_ONE, Fraction(0)) == 3
    for x, y in PART_ONE:
        assert barycentric_eval(PART_ONE, x) == y


def test_barycentric_single_point():
    assert barycentric_eval([(Fraction(4), Fraction(9))], Fraction(100)) == 9


@given(point_sets, st.fractions(min_value=-30, max_value=30, max_denominator=9))
def test_barycentric_agrees_with_fit(points, x):
    model = fit_polynomial(points)
    assert barycentric_eval(points, x) == eval_polynomial(model, x)


def test_vandermonde_f64_partial_pivoting():
    points = [(1.0, 2.0), (2.0, 3.0), (3.0, 5.0), (4.0, 11.0)]
    model = vandermonde_fit(points)
    reference = vandermonde_fit(
        [(Fraction(x), Fraction(y)) for x, y in points]
    )
    for a, r in zip(model.coefficients, reference.coefficients):
        assert a == pytest.approx(float(r), rel=1e-12, abs=1e-12)


def test_lagrange_basis_row_golden():
    nodes = [Fraction(2), Fraction(3), Fraction(5)]
    assert lagrange_basis_row(nodes, 1) == [-5, Fraction(7, 2), Fraction(-1, 2)]
    with pytest.raises(IndexError):
        lagrange_basis_row(nodes, 3)


def test_verify_fit_passes_exact():
    reports = verify_fit(PART_ONE, against="all")
    assert [r.method for r in reports] == ["newton", "vandermonde", "barycentric"]
    for report in reports:
        assert report.passed
        assert report.max_residual == 0
    assert reports[0].max_coefficient_discrepancy == 0
    assert reports[2].max_coefficient_discrepancy is None


def test_verify_fit_single_oracle():
    (report,) = verify_fit(PART_ONE, against="newton")
    assert report.method == "newton"
    assert report.passed


def test_verify_fit_flags_f64_mismatch():
    points = [(1.0, 2.0), (1.0000001, 3.0), (2.0, 5.0), (3.0, 7.0)]
    reports = verify_fit(points, against="all", tolerance=1e-14)
    assert not all(report.passed for report in reports)
    loose = verify_fit(points, against="all", tolerance=1.0)
    assert all(report.passed for report in loose)


def test_verify_fit_validates_arguments():
    with pytest.raises(ValueError):
        verify_fit(PART_ONE, against="chebyshev")
    with pytest.raises(ValueError):
        verify_fit(PART_ONE, tolerance=0.0)
    with pytest.raises(DataError):
        verify_fit([])
