"""Direct monomial-coefficient interpolation with exact and binary64 backends.

Given n+1 samples with distinct x values, :func:`fit_polynomial` returns
the unique interpolating polynomial of degree at most n straight in
monomial coefficients, built from a tableau of node-polynomial
coefficients instead of divided differences or a linear solve.
:func:`fit_exponential` runs the same construction in the log domain,
producing a multiplicative model for positive data.  Classical methods
(Newton, Vandermonde, barycentric Lagrange) are included as independent
oracles, and scikit-learn style estimators wrap the core for array-based
workflows.
"""

from .errors import DataError, DomainError, ExactFitError, ParseError
from .io import parse_dataset, parse_model, serialize_model
from .models import (
    ExponentialModel,
    PolynomialModel,
    eval_exponential,
    eval_polynomial,
    fit_exponential,
    fit_polynomial,
    horner,
)
from .numeric import (
    Scalar,
    as_scalar,
    rational_normalize,
    scalar_format,
    scalar_parse,
)
from .oracles import (
    VerificationReport,
    barycentric_eval,
    lagrange_basis_row,
    newton_fit,
    vandermonde_fit,
    verify_fit,
)
from .tableau import basis_matrix, deflate, node_coefficients

__version__ = "0.1.0"

_ESTIMATORS = ("PolynomialInterpolator", "ExponentialInterpolator")

__all__ = [
    "DataError",
    "DomainError",
    "ExactFitError",
    "ExponentialModel",
    "ParseError",
    "PolynomialModel",
    "Scalar",
    "VerificationReport",
    "as_scalar",
    "barycentric_eval",
    "basis_matrix",
    "deflate",
    "eval_exponential",
    "eval_polynomial",
    "fit_exponential",
    "fit_polynomial",
    "horner",
    "lagrange_basis_row",
    "newton_fit",
    "node_coefficients",
    "parse_dataset",
    "parse_model",
    "rational_normalize",
    "scalar_format",
    "scalar_parse",
    "serialize_model",
    "vandermonde_fit",
    "verify_fit",
    *_ESTIMATORS,
]


def __getattr__(name: str):
    # The estimators pull in numpy and scikit-learn; import them only on use
    # so the functional core stays import-light.
    if name in _ESTIMATORS:
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
