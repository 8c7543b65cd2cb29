"""Classical interpolation methods used as independent cross-checks.

The tableau fit is validated against three classics with unrelated
failure modes: Newton divided differences (recurrence-based), a
Vandermonde solve (linear algebra), and barycentric Lagrange evaluation
(no coefficients at all).  A brute-force cardinal-basis expansion via
elementary symmetric sums backs the basis matrix itself at small sizes.

:func:`verify_fit` packages the comparisons: it fits the tableau model,
compares coefficients and evaluations per oracle, and reports pass/fail
under the backend's notion of agreement (exact equality for rational
scalars, norm-relative tolerance for binary64).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import DataError
from .models import PolynomialModel, eval_polynomial, fit_polynomial
from .numeric import Scalar, unit_like
from .validation import check_nodes, check_points

ORACLE_NAMES = ("newton", "vandermonde", "barycentric")


def newton_fit(points: Sequence[tuple[Scalar, Scalar]]) -> PolynomialModel:
    """Interpolate via divided differences, expanded to monomial coefficients.

    Builds the divided-difference table in place, then expands the Newton
    form sum_j d_j prod_{i<j} (x - x_i) with polynomial Horner steps.
    """
    points = check_points(points)
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    n = len(points) - 1
    one = unit_like(xs)
    zero = one * 0
    table = list(ys)
    for j in range(1, n + 1):
        for i in range(n, j - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - j])
    coeffs: list[Scalar] = [table[n] + zero]
    for i in range(n - 1, -1, -1):
        extended: list[Scalar] = [zero] * (len(coeffs) + 1)
        for m, c in enumerate(coeffs):
            extended[m] += -xs[i] * c
            extended[m + 1] += c
        extended[0] += table[i]
        coeffs = extended
    p = ys[0]
    return PolynomialModel(p, (coeffs[0] - p, *coeffs[1:]), tuple(coeffs))


def vandermonde_fit(points: Sequence[tuple[Scalar, Scalar]]) -> PolynomialModel:
    """Interpolate by solving the Vandermonde system V c = y.

    Gaussian elimination with back substitution; rational scalars pivot on
    the first nonzero entry (any nonzero pivot is exact), binary64 uses
    partial pivoting on the largest magnitude.
    """
    points = check_points(points)
    size = len(points)
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    rows = [[xs[i] ** j for j in range(size)] + [ys[i]] for i in range(size)]
    f64 = isinstance(xs[0], float)
    for col in range(size):
        if f64:
            pivot = max(range(col, size), key=lambda r: abs(rows[r][col]))
        else:
            pivot = next((r for r in range(col, size) if rows[r][col] != 0), -1)
        if pivot < 0 or rows[pivot][col] == 0:
            raise DataError("singular system: x values are not distinct")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(col + 1, size):
            factor = rows[r][col] / rows[col][col]
            if factor == 0:
                continue
            for c in range(col, size + 1):
                rows[r][c] -= factor * rows[col][c]
    coeffs: list[Scalar] = [ys[0] * 0] * size
    for i in range(size - 1, -1, -1):
        acc = rows[i][size]
        for j in range(i + 1, size):
            acc -= rows[i][j] * coeffs[j]
        coeffs[i] = acc / rows[i][i]
    p = ys[0]
    return PolynomialModel(p, (coeffs[0] - p, *coeffs[1:]), tuple(coeffs))


def barycentric_eval(points: Sequence[tuple[Scalar, Scalar]], x: Scalar) -> Scalar:
    """Evaluate the interpolant at ``x`` by the barycentric formula.

    Uses weights w_k = 1 / prod_{m != k} (x_k - x_m) and returns
    sum_k w_k y_k / (x - x_k) over sum_k w_k / (x - x_k); a query that
    hits a node returns that node's ordinate exactly.
    """
    points = check_points(points)
    for xk, yk in points:
        if x == xk:
            return yk
    one = unit_like([x for x, _ in points])
    numerator = one * 0
    denominator = one * 0
    for xk, yk in points:
        product = one
        for xm, _ in points:
            if xm != xk:
                product *= xk - xm
        term = one / (product * (x - xk))
        numerator += term * yk
        denominator += term
    return numerator / denominator


def lagrange_basis_row(nodes: Sequence[Scalar], k: int) -> list[Scalar]:
    """Brute-force coefficients of the k-th cardinal basis polynomial.

    Expands prod_{m != k} (x - x_m) through elementary symmetric sums over
    explicit subsets, sharing nothing with the tableau recurrences.  Cost
    is exponential in the node count; intended for small cross-checks.
    """
    nodes = check_nodes(nodes)
    if not 0 <= k < len(nodes):
        raise IndexError(f"node index {k} out of range for {len(nodes)} nodes")
    others = [x for m, x in enumerate(nodes) if m != k]
    one = unit_like(nodes)
    zero = one * 0
    denominator = one
    for x in others:
        denominator *= nodes[k] - x
    row: list[Scalar] = []
    degree = len(others)
    for j in range(degree + 1):
        symmetric = zero
        for subset in combinations(others, degree - j):
            symmetric += math.prod(subset, start=one)
        signed = symmetric if (degree - j) % 2 == 0 else -symmetric
        row.append(signed / denominator)
    return row


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking the tableau fit against one oracle.

    ``max_coefficient_discrepancy`` is None for the barycentric oracle,
    which produces evaluations but no coefficients.  ``max_residual`` is
    the largest gap between the fitted model and the oracle over the
    nodes and consecutive midpoints; at the nodes it is the nodal
    residual.  ``passed`` is true iff every available discrepancy is
    exactly zero (exact backend) or within the norm-relative tolerance
    (binary64 backend).
    """

    method: str
    max_coefficient_discrepancy: Optional[Scalar]
    max_residual: Scalar
    passed: bool


def _query_points(xs: Sequence[Scalar]) -> list[Scalar]:
    """Nodes plus consecutive midpoints, in input order."""
    queries = list(xs)
    for left, right in zip(xs, xs[1:]):
        queries.append((left + right) / 2)
    return queries


def _within(discrepancy: Scalar, scale: float, exact: bool, tolerance: float) -> bool:
    if exact:
        return discrepancy == 0
    return float(discrepancy) <= tolerance * scale


def verify_fit(
    points: Sequence[tuple[Scalar, Scalar]],
    against: str = "all",
    tolerance: float = 1e-8,
) -> list[VerificationReport]:
    """Fit the tableau model and cross-check it against classical oracles.

    ``against`` names one oracle or ``"all"``.  Coefficient vectors are
    compared entrywise; evaluations are compared at the nodes and at the
    midpoints between consecutive nodes.  Exact scalars must agree
    exactly; binary64 discrepancies are accepted up to ``tolerance``
    scaled by max(1, largest reference magnitude).
    """
    if against != "all" and against not in ORACLE_NAMES:
        raise ValueError(
            f"unknown oracle {against!r}; expected one of {', '.join(ORACLE_NAMES)} or 'all'"
        )
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    points = check_points(points)
    exact = not any(
        isinstance(value, float) for point in points for value in point
    )
    model = fit_polynomial(points)
    xs = [x for x, _ in points]
    queries = _query_points(xs)
    model_values = [eval_polynomial(model, t) for t in queries]
    names = list(ORACLE_NAMES) if against == "all" else [against]
    reports = []
    for name in names:
        if name == "barycentric":
            coeff_disc: Optional[Scalar] = None
            coeff_ok = True
            reference = [barycentric_eval(points, t) for t in queries]
        else:
            fit = newton_fit if name == "newton" else vandermonde_fit
            other = fit(points)
            diffs = [
                abs(a - b) for a, b in zip(model.coefficients, other.coefficients)
            ]
            coeff_disc = max(diffs)
            coeff_scale = max(
                1.0,
                max(
                    float(abs(c))
                    for c in (*model.coefficients, *other.coefficients)
                ),
            )
            coeff_ok = _within(coeff_disc, coeff_scale, exact, tolerance)
            reference = [eval_polynomial(other, t) for t in queries]
        residual = max(abs(a - b) for a, b in zip(model_values, reference))
        residual_scale = max(1.0, max(float(abs(v)) for v in reference))
        residual_ok = _within(residual, residual_scale, exact, tolerance)
        reports.append(
            VerificationReport(name, coeff_disc, residual, coeff_ok and residual_ok)
        )
    return reports
