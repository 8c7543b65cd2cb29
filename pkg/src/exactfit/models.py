"""Fitted model forms and the fitting routines that produce them.

Both fits run the same tableau: with base point (x_0, y_0), the cardinal
basis rows F[k] for k >= 1 weight the remaining samples, and the result
comes out directly in monomial coefficients (no intermediate divided
differences or linear solve).

* :func:`fit_polynomial` produces Y = p + a_0 + a_1 x + ... + a_n x^n,
  the unique degree-<=n interpolant of n+1 samples, where p = y_0 and
  a_j = sum_{k>=1} (y_k - p) F[k][j].  The split between the base value
  p and the constant adjustment a_0 is an artifact of the construction;
  the combined coefficients c (c_0 = p + a_0, c_j = a_j) are canonical.
* :func:`fit_exponential` runs the same weighting in the log domain:
  beta_j = sum_{k>=1} ln(y_k / p) F[k][j], giving the multiplicative
  model Y = p * prod_j a_j^(x^j) with a_j = exp(beta_j), which
  interpolates any positive samples.  The basis matrix is computed in
  the input backend (exactly, for rational inputs) and converted to
  binary64 only when the log-domain sums are accumulated, so the
  log coefficients are always floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .numeric import Scalar, scalar_format
from .tableau import basis_matrix
from .validation import check_points


def horner(coefficients: Sequence[Scalar], x: Scalar) -> Scalar:
    """Evaluate sum_j coefficients[j] x^j by Horner's scheme."""
    if not coefficients:
        raise ValueError("at least one coefficient is required")
    acc = coefficients[-1]
    for c in reversed(coefficients[:-1]):
        acc = acc * x + c
    return acc


@dataclass(frozen=True, eq=False)
class PolynomialModel:
    """Interpolating polynomial in monomial form.

    ``coefficients`` is the canonical representation: c_0 = base_value +
    adjustments[0] and c_j = adjustments[j] for j >= 1.  Because many
    base/adjustment splits describe the same polynomial, equality and
    hashing consider only the combined coefficients.
    """

    base_value: Scalar
    adjustments: tuple[Scalar, ...]
    coefficients: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "adjustments", tuple(self.adjustments))
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if not self.coefficients:
            raise ValueError("at least one coefficient is required")
        if len(self.adjustments) != len(self.coefficients):
            raise ValueError("adjustments and coefficients must have equal length")
        if self.coefficients[0] != self.base_value + self.adjustments[0]:
            raise ValueError("coefficients[0] must equal base_value + adjustments[0]")
        if self.coefficients[1:] != self.adjustments[1:]:
            raise ValueError("coefficients[j] must equal adjustments[j] for j >= 1")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolynomialModel):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)


@dataclass(frozen=True)
class ExponentialModel:
    """Multiplicative model Y = base_value * prod_j exp(log_coefficients[j])^(x^j).

    The log coefficients beta are the authoritative representation; the
    per-power factors a_j = exp(beta_j) are derived.  The base value must
    be positive (it is the first sample's ordinate).
    """

    base_value: Scalar
    log_coefficients: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "log_coefficients", tuple(float(b) for b in self.log_coefficients)
        )
        if not self.log_coefficients:
            raise ValueError("at least one log coefficient is required")
        if isinstance(self.base_value, float) and not math.isfinite(self.base_value):
            raise DomainError("base value must be finite")
        if not self.base_value > 0:
            raise DomainError(
                f"base value must be positive, got {scalar_format(self.base_value)}"
            )
        if not all(math.isfinite(b) for b in self.log_coefficients):
            raise ValueError("log coefficients must be finite")

    @property
    def degree(self) -> int:
        return len(self.log_coefficients) - 1

    @property
    def factors(self) -> tuple[float, ...]:
        return tuple(math.exp(b) for b in self.log_coefficients)


def fit_polynomial(points: Sequence[tuple[Scalar, Scalar]]) -> PolynomialModel:
    """Interpolate ``points`` exactly, returning monomial coefficients.

    The first point is the base point: p = y_0, and each remaining sample
    contributes its offset from p weighted by its cardinal basis row.
    With exact scalars the result is exact; reordering the points never
    changes the combined coefficients (only the internal split).
    """
    points = check_points(points)
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    p = ys[0]
    zero = p * 0
    n = len(points) - 1
    if n == 0:
        return PolynomialModel(p, (zero,), (p + zero,))
    fmatrix = basis_matrix(xs)
    adjustments = []
    for j in range(n + 1):
        acc = zero
        for k in range(1, n + 1):
            acc += (ys[k] - p) * fmatrix[k][j]
        adjustments.append(acc)
    combined = (p + adjustments[0], *adjustments[1:])
    return PolynomialModel(p, tuple(adjustments), combined)


def eval_polynomial(model: PolynomialModel, x: Scalar) -> Scalar:
    """Evaluate the polynomial at ``x`` in the backend of its coefficients."""
    return horner(model.coefficients, x)


def fit_exponential(points: Sequence[tuple[Scalar, Scalar]]) -> ExponentialModel:
    """Fit the multiplicative model through ``points``, all of which need y > 0.

    Interpolates the log-ordinates: beta_j = sum_{k>=1} ln(y_k / p) F[k][j],
    with the basis row converted to binary64 after it is computed, so exact
    inputs lose precision only in the final log-domain accumulation.
    """
    points = check_points(points)
    for index, (_, y) in enumerate(points):
        if not y > 0:
            raise DomainError(
                "exponential form requires positive ordinates "
                f"(y = {scalar_format(y)} at position {index})"
            )
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    p = ys[0]
    n = len(points) - 1
    if n == 0:
        return ExponentialModel(p, (0.0,))
    fmatrix = basis_matrix(xs)
    log_ratios = [math.log(ys[k] / p) for k in range(n + 1)]
    betas = []
    for j in range(n + 1):
        acc = 0.0
        for k in range(1, n + 1):
            acc += log_ratios[k] * float(fmatrix[k][j])
        betas.append(acc)
    return ExponentialModel(p, tuple(betas))


def eval_exponential(model: ExponentialModel, x: Scalar) -> float:
    """Evaluate base_value * exp(sum_j beta_j x^j) at ``x`` in binary64.

    Overflow of the exponential saturates to ``inf`` rather than raising.
    """
    exponent = horner(model.log_coefficients, float(x))
    try:
        growth = math.exp(exponent)
    except OverflowError:
        growth = math.inf
    return float(model.base_value) * growth
