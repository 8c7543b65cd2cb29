"""Scikit-learn style wrappers around the fitting core.

Both estimators expect a single feature column and fit the interpolating
model through the samples exactly (the polynomial has degree
``n_samples - 1``).  The arithmetic backend is a constructor parameter;
``predict`` computes in that backend and rounds once to float64 at the
end, so the exact backend loses nothing before the final conversion.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.exceptions import NotFittedError

from .models import (
    eval_exponential,
    eval_polynomial,
    fit_exponential,
    fit_polynomial,
)
from .numeric import Scalar, as_scalar, check_arithmetic


def _as_scalar_column(values: object, arithmetic: str, name: str) -> list[Scalar]:
    """Coerce a 1-D (or single-column 2-D) array-like into backend scalars."""
    array = np.asarray(values, dtype=object)
    if array.ndim == 2 and array.shape[1] == 1:
        array = array[:, 0]
    if array.ndim != 1:
        raise ValueError(
            f"{name} must be 1-D or a single column, got shape {array.shape}"
        )
    return [as_scalar(value, arithmetic) for value in array.tolist()]


class PolynomialInterpolator(RegressorMixin, BaseEstimator):
    """Exact interpolating-polynomial regressor.

    Parameters
    ----------
    arithmetic : {"exact", "f64"}, default="exact"
        Scalar backend for fitting and evaluation.  "exact" keeps every
        coefficient as an arbitrary-precision rational.

    Attributes
    ----------
    model_ : PolynomialModel
        The fitted model.
    coefficients_ : tuple
        Monomial coefficients, ascending powers; length ``n_samples``.
    n_features_in_ : int
        Always 1.

    Examples
    --------
    >>> reg = PolynomialInterpolator().fit([[2], [3], [5]], [8, 11, 18])
    >>> [str(c) for c in reg.coefficients_]
    ['3', '13/6', '1/6']
    >>> reg.predict([[4]])
    array([14.33333333])
    """

    def __init__(self, arithmetic: str = "exact") -> None:
        self.arithmetic = arithmetic

    def fit(self, X, y) -> "PolynomialInterpolator":
        check_arithmetic(self.arithmetic)
        xs = _as_scalar_column(X, self.arithmetic, "X")
        ys = _as_scalar_column(y, self.arithmetic, "y")
        if len(xs) != len(ys):
            raise ValueError(
                f"X and y have inconsistent lengths: {len(xs)} != {len(ys)}"
            )
        self.model_ = fit_polynomial(list(zip(xs, ys)))
        self.coefficients_ = self.model_.coefficients
        self.n_features_in_ = 1
        return self

    def predict(self, X) -> np.ndarray:
        if not hasattr(self, "model_"):
            raise NotFittedError(
                "This PolynomialInterpolator instance is not fitted yet; "
                "call 'fit' first."
            )
        xs = _as_scalar_column(X, self.arithmetic, "X")
        return np.array(
            [float(eval_polynomial(self.model_, x)) for x in xs], dtype=float
        )


class ExponentialInterpolator(RegressorMixin, BaseEstimator):
    """Interpolating regressor in multiplicative form.

    Fits Y = p * prod_j a_j^(x^j) through samples with strictly positive
    targets by interpolating their log-ordinates.

    Parameters
    ----------
    arithmetic : {"f64", "exact"}, default="f64"
        Backend for the basis construction; the log-domain coefficients
        are binary64 either way.

    Attributes
    ----------
    model_ : ExponentialModel
    log_coefficients_ : tuple of float
        Exponent-polynomial coefficients, ascending powers.
    factors_ : tuple of float
        Derived per-power factors exp(log_coefficients_[j]).
    n_features_in_ : int
        Always 1.
    """

    def __init__(self, arithmetic: str = "f64") -> None:
        self.arithmetic = arithmetic

    def fit(self, X, y) -> "ExponentialInterpolator":
        check_arithmetic(self.arithmetic)
        xs = _as_scalar_column(X, self.arithmetic, "X")
        ys = _as_scalar_column(y, self.arithmetic, "y")
        if len(xs) != len(ys):
            raise ValueError(
                f"X and y have inconsistent lengths: {len(xs)} != {len(ys)}"
            )
        self.model_ = fit_exponential(list(zip(xs, ys)))
        self.log_coefficients_ = self.model_.log_coefficients
        self.factors_ = self.model_.factors
        self.n_features_in_ = 1
        return self

    def predict(self, X) -> np.ndarray:
        if not hasattr(self, "model_"):
            raise NotFittedError(
                "This ExponentialInterpolator instance is not fitted yet; "
                "call 'fit' first."
            )
        xs = _as_scalar_column(X, self.arithmetic, "X")
        return np.array(
            [eval_exponential(self.model_, x) for x in xs], dtype=float
        )
