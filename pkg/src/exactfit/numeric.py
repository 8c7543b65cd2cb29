"""Scalar arithmetic backends: exact rationals and binary64 floats.

Every algorithm in this package is generic over a scalar type.  Two
backends are supported, selected by the string names ``"exact"`` and
``"f64"``:

* ``"exact"`` computes with :class:`fractions.Fraction`, which keeps every
  value in canonical form (lowest terms, positive denominator) through
  arbitrary arithmetic, so results are exact and comparisons are trivial.
* ``"f64"`` computes with the native ``float`` (IEEE 754 binary64).

Both backends share one textual grammar for scalars: optionally signed
integers (``-17``), integer fractions (``13/6``), and decimals with an
optional exponent (``2.5e-3``).  The exact backend preserves every form
exactly (decimals become scaled fractions); the f64 backend rounds to the
nearest representable double.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Sequence, Union

from .errors import DomainError, ParseError

Scalar = Union[Fraction, float]

ARITHMETICS = ("exact", "f64")

_INT = r"-?[0-9]+"
_NUMBER_RE = re.compile(rf"{_INT}(?:/{_INT}|(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?)")


def unit_like(values: Sequence[Scalar]) -> Scalar:
    """Multiplicative unit in the backend of ``values`` (ints count as exact)."""
    return 1.0 if isinstance(values[0], float) else Fraction(1)


def check_arithmetic(arithmetic: str) -> str:
    """Return ``arithmetic`` if it names a backend, else raise ValueError."""
    if arithmetic not in ARITHMETICS:
        raise ValueError(
            f"unknown arithmetic {arithmetic!r}; expected one of {', '.join(ARITHMETICS)}"
        )
    return arithmetic


def rational_normalize(numerator: int, denominator: int) -> Fraction:
    """Reduce ``numerator/denominator`` to canonical form.

    Canonical means lowest terms with a positive denominator (zero is
    ``0/1``).  A zero denominator is a domain error.
    """
    if denominator == 0:
        raise DomainError("zero denominator")
    return Fraction(numerator, denominator)


def scalar_parse(text: str, arithmetic: str = "exact") -> Scalar:
    """Parse one scalar literal in the given backend.

    Accepts integers, fractions ``p/q``, and decimals with an optional
    exponent.  Raises :class:`ParseError` carrying the byte offset of the
    first character that does not fit the grammar.  In f64 mode a literal
    whose nearest double is not finite is rejected.
    """
    check_arithmetic(arithmetic)
    match = _NUMBER_RE.match(text)
    if match is None or match.end() != len(text):
        offset = 0 if match is None else len(text[: match.end()].encode("utf-8"))
        raise ParseError(
            f"malformed number {text!r} at byte offset {offset}", offset=offset
        )
    if "/" in text:
        numerator, _, denominator = text.partition("/")
        if int(denominator) == 0:
            offset = len(numerator) + 1
            raise ParseError(
                f"zero denominator in {text!r} at byte offset {offset}", offset=offset
            )
        value = Fraction(int(numerator), int(denominator))
        if arithmetic == "exact":
            return value
        try:
            result = float(value)
        except OverflowError:
            result = math.inf
    else:
        if arithmetic == "exact":
            return Fraction(text)
        # float(text) rounds correctly and, unlike a Fraction round trip,
        # keeps the sign of zero.
        result = float(text)
    if not math.isfinite(result):
        raise ParseError(f"{text!r} does not fit in binary64", offset=0)
    return result


def scalar_format(value: Scalar) -> str:
    """Format a scalar so that ``scalar_parse`` reads back the same value.

    Rationals print as ``p/q`` (or a bare integer when q is 1).  Floats
    print the shortest decimal that round-trips; integral floats drop the
    trailing ``.0``, with negative zero kept distinct as ``-0``.
    """
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return str(value)
    value = float(value)
    if not math.isfinite(value):
        return repr(value)
    if value == 0.0:
        return "-0" if math.copysign(1.0, value) < 0 else "0"
    if value.is_integer():
        return str(int(value))
    return repr(value)


def as_scalar(value: object, arithmetic: str = "exact") -> Scalar:
    """Coerce a number or numeric string into the given backend.

    Exact mode converts floats to their exact binary64 value.  Non-finite
    inputs are rejected in both modes.
    """
    check_arithmetic(arithmetic)
    if isinstance(value, str):
        return scalar_parse(value, arithmetic)
    if isinstance(value, bool) or not isinstance(value, (int, float, Fraction)):
        raise TypeError(f"cannot treat {type(value).__name__} as a scalar")
    if isinstance(value, float) and not math.isfinite(value):
        raise DomainError(f"non-finite value {value!r}")
    if arithmetic == "exact":
        return value if isinstance(value, Fraction) else Fraction(value)
    return float(value)
