"""Model fitting and evaluation, both polynomial and exponential form."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactfit import (
    DataError,
    DomainError,
    ExponentialModel,
    PolynomialModel,
    eval_exponential,
    eval_polynomial,
    fit_exponential,
    fit_polynomial,
    horner,
)

PART_ONE = [(Fraction(2), Fraction(8)), (Fraction(3), Fraction(11)), (Fraction(5), Fraction(18))]
PART_TWO = [(Fraction(2), Fraction(50)), (Fraction(3), Fraction(250)), (Fraction(5), Fraction(6250))]

point_sets = st.lists(
    st.tuples(st.integers(-9, 9), st.integers(-99, 99)),
    min_size=1,
    max_size=8,
    unique_by=lambda point: point[0],
).map(lambda ps: [(Fraction(x), Fraction(y)) for x, y in ps])


def test_fit_polynomial_golden():
    model = fit_polynomial(PART_ONE)
    assert model.base_value == 8
    assert model.adjustments == (-5, Fraction(13, 6), Fraction(1, 6))
    assert model.coefficients == (3, Fraction(13, 6), Fraction(1, 6))
    assert model.degree == 2


def test_fit_polynomial_refit_golden():
    model = fit_polynomial(PART_TWO)
    assert model.base_value == 50
    assert model.adjustments[0] == 5200
    assert model.coefficients == (5250, Fraction(-13400, 3), Fraction(2800, 3))


def test_eval_polynomial_golden():
    model = fit_polynomial(PART_ONE)
    assert eval_polynomial(model, Fraction(4)) == Fraction(43, 3)
    assert eval_polynomial(model, Fraction(0)) == 3
    for x, y in PART_ONE:
        assert eval_polynomial(model, x) == y


def test_eval_polynomial_refit_golden():
    model = fit_polynomial(PART_TWO)
    assert eval_polynomial(model, Fraction(3)) == 250


def test_fit_polynomial_single_point():
    model = fit_polynomial([(Fraction(7), Fraction(9))])
    assert model.base_value == 9
    assert model.adjustments == (0,)
    assert model.coefficients == (9,)
    assert eval_polynomial(model, Fraction(-100)) == 9


def test_fit_polynomial_rejects_bad_data():
    with pytest.raises(DataError):
        fit_polynomial([])
    with pytest.raises(DataError):
        fit_polynomial([(Fraction(1), Fraction(2)), (Fraction(1), Fraction(3))])


@given(point_sets)
def test_fit_polynomial_interpolates(points):
    model = fit_polynomial(points)
    assert len(model.coefficients) == len(points)
    for x, y in points:
        assert eval_polynomial(model, x) == y


@given(point_sets, st.randoms(use_true_random=False))
def test_fit_polynomial_base_point_independent(points, rng):
    shuffled = list(points)
    rng.shuffle(shuffled)
    model = fit_polynomial(points)
    other = fit_polynomial(shuffled)
    assert other.coefficients == model.coefficients
    assert other.base_value == shuffled[0][1]
    assert other == model


def test_polynomial_model_equality_ignores_split():
    fitted = fit_polynomial(PART_ONE)
    refit = fit_polynomial(list(reversed(PART_ONE)))
    assert fitted.base_value != refit.base_value
    assert fitted == refit
    assert hash(fitted) == hash(refit)


def test_polynomial_model_validates():
    with pytest.raises(ValueError):
        PolynomialModel(Fraction(1), (Fraction(0),), (Fraction(2),))
    with pytest.raises(ValueError):
        PolynomialModel(Fraction(1), (Fraction(0), Fraction(1)), (Fraction(1),))
    with pytest.raises(ValueError):
        PolynomialModel(Fraction(1), (), ())


def test_fit_exponential_golden():
    model = fit_exponential(PART_TWO)
    assert model.base_value == 50
    factors = model.factors
    assert factors[0] == pytest.approx(0.04, abs=1e-12)
    assert factors[1] == pytest.approx(5.0, abs=1e-12)
    assert factors[2] == pytest.approx(1.0, abs=1e-12)
    for x, y in [(2, 50.0), (3, 250.0), (5, 6250.0)]:
        assert eval_exponential(model, x) == pytest.approx(y, rel=1e-9)


def test_fit_exponential_unit_line():
    model = fit_exponential([(0.0, 1.0), (1.0, math.e)])
    assert model.base_value == 1.0
    assert model.log_coefficients[0] == pytest.approx(0.0, abs=1e-12)
    assert model.log_coefficients[1] == pytest.approx(1.0, abs=1e-12)


def test_eval_exponential_between_nodes():
    model = fit_exponential(PART_TWO)
    assert eval_exponential(model, 4.0) == pytest.approx(1250.0, rel=1e-9)


def test_fit_exponential_backends_agree():
    exact = fit_exponential(PART_TWO)
    floated = fit_exponential([(float(x), float(y)) for x, y in PART_TWO])
    assert exact.log_coefficients == floated.log_coefficients


@pytest.mark.parametrize(
    "points",
    [
        [(2.0, 50.0), (3.0, 250.0), (5.0, 6250.0)],
        [(-2.0, 0.25), (0.0, 1.0), (1.0, math.e), (4.0, 3.5)],
    ],
)
def test_fit_exponential_matches_log_domain_polynomial(points):
    exp_model = fit_exponential(points)
    log_model = fit_polynomial([(x, math.log(y)) for x, y in points])
    combined = (
        math.log(exp_model.base_value) + exp_model.log_coefficients[0],
        *exp_model.log_coefficients[1:],
    )
    assert len(combined) == len(log_model.coefficients)
    for ours, theirs in zip(combined, log_model.coefficients):
        assert ours == pytest.approx(theirs, abs=1e-12)


def test_fit_exponential_rejects_nonpositive():
    for bad in (Fraction(0), Fraction(-11)):
        with pytest.raises(DomainError, match="positive ordinates"):
            fit_exponential([(Fraction(2), Fraction(50)), (Fraction(3), bad)])


def test_fit_exponential_single_point():
    model = fit_exponential([(Fraction(3), Fraction(7))])
    assert model.log_coefficients == (0.0,)
    assert eval_exponential(model, 123.0) == 7.0


@given(
    st.lists(
        st.tuples(st.integers(-5, 5), st.integers(1, 50)),
        min_size=1,
        max_size=6,
        unique_by=lambda point: point[0],
    ).map(lambda ps: [(Fraction(x), Fraction(y)) for x, y in ps])
)
def test_fit_exponential_interpolates(points):
    model = fit_exponential(points)
    scale = max(1.0, max(float(y) for _, y in points))
    for x, y in points:
        assert abs(eval_exponential(model, x) - float(y)) <= 1e-7 * scale


def test_exponential_model_validates():
    with pytest.raises(DomainError):
        ExponentialModel(Fraction(0), (0.0,))
    with pytest.raises(DomainError):
        ExponentialModel(-1.0, (0.0,))
    with pytest.raises(ValueError):
        ExponentialModel(Fraction(1), ())
    with pytest.raises(ValueError):
        ExponentialModel(Fraction(1), (math.nan,))


def test_eval_exponential_overflow_saturates():
    model = ExponentialModel(Fraction(1), (700.0, 1.0))
    assert eval_exponential(model, 40.0) == math.inf


def test_horner():
    assert horner([Fraction(3), Fraction(13, 6), Fraction(1, 6)], Fraction(4)) == Fraction(43, 3)
    assert horner([5.0], 100.0) == 5.0
    with pytest.raises(ValueError):
        horner([], 1)


@given(
    st.lists(
        st.fractions(min_value=-50, max_value=50, max_denominator=12),
        min_size=1,
        max_size=8,
    ),
    st.fractions(min_value=-10, max_value=10, max_denominator=12),
)
def test_horner_matches_naive_summation(coefficients, x):
    naive = sum(c * x**j for j, c in enumerate(coefficients))
    assert horner(coefficients, x) == naive
