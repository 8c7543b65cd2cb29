"""Dataset ingestion (CSV and JSON) and model document serialization.

Datasets preserve input order, because the first point is the fit's base
point.  Model documents are JSON objects carrying the model kind, the
arithmetic backend, and the coefficients; exact coefficients are encoded
as strings ("13/6") so nothing is lost to binary64 on the way through
JSON.  The exponential document stores the log coefficients losslessly
and additionally lists the derived per-power factors, rounded to 15
significant digits, for human consumption; :func:`parse_model` ignores
the derived field.
"""

from __future__ import annotations

import json
import math
from typing import Sequence, Union

from .errors import DataError, DomainError, ParseError
from .models import ExponentialModel, PolynomialModel
from .numeric import Scalar, check_arithmetic, scalar_format, scalar_parse

Model = Union[PolynomialModel, ExponentialModel]

DATASET_FORMATS = ("csv", "json")
MODEL_FORMATS = ("text", "json")


def _decode(data: Union[str, bytes]) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from exc
    return data


def parse_dataset(
    data: Union[str, bytes], fmt: str = "csv", arithmetic: str = "exact"
) -> list[tuple[Scalar, Scalar]]:
    """Parse sample points from CSV rows or a JSON array of {x, y} objects.

    Rows keep their input order.  Duplicate x values and empty inputs are
    data errors; anything malformed is a parse error naming the offending
    line (CSV) or JSON path.
    """
    check_arithmetic(arithmetic)
    if fmt not in DATASET_FORMATS:
        raise ValueError(
            f"unknown dataset format {fmt!r}; expected one of {', '.join(DATASET_FORMATS)}"
        )
    text = _decode(data)
    if fmt == "csv":
        return _parse_csv(text, arithmetic)
    return _parse_json_dataset(text, arithmetic)


def _parse_csv(text: str, arithmetic: str) -> list[tuple[Scalar, Scalar]]:
    rows = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped:
            rows.append((line_number, stripped))
    if rows:
        first_fields = [field.strip().lower() for field in rows[0][1].split(",")]
        if first_fields == ["x", "y"]:
            rows = rows[1:]
    if not rows:
        raise DataError("empty input: no data rows")
    points: list[tuple[Scalar, Scalar]] = []
    seen: dict[Scalar, int] = {}
    for line_number, row in rows:
        fields = [field.strip() for field in row.split(",")]
        if len(fields) != 2:
            raise ParseError(
                f"line {line_number}: expected 'x,y', got {row!r}", line=line_number
            )
        try:
            x = scalar_parse(fields[0], arithmetic)
            y = scalar_parse(fields[1], arithmetic)
        except ParseError as exc:
            raise ParseError(f"line {line_number}: {exc}", line=line_number) from exc
        if x in seen:
            raise DataError(
                f"duplicate x value {fields[0]} on lines {seen[x]} and {line_number}"
            )
        seen[x] = line_number
        points.append((x, y))
    return points


def _parse_json_dataset(text: str, arithmetic: str) -> list[tuple[Scalar, Scalar]]:
    try:
        # Numbers are kept as raw strings so the shared scalar grammar decides
        # their value per backend, instead of an early round-trip through float.
        document = json.loads(text, parse_float=str, parse_int=str)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(document, list):
        raise ParseError("expected a JSON array of {x, y} objects at $", path="$")
    if not document:
        raise DataError("empty input: no data points")
    points: list[tuple[Scalar, Scalar]] = []
    seen: dict[Scalar, int] = {}
    for index, item in enumerate(document):
        if not isinstance(item, dict):
            raise ParseError(f"expected an object at $[{index}]", path=f"$[{index}]")
        pair = []
        for key in ("x", "y"):
            path = f"$[{index}].{key}"
            if key not in item:
                raise ParseError(f"missing required field at {path}", path=path)
            value = item[key]
            if isinstance(value, bool) or not isinstance(value, str):
                raise ParseError(f"expected a number at {path}", path=path)
            try:
                pair.append(scalar_parse(value, arithmetic))
            except ParseError as exc:
                raise ParseError(f"at {path}: {exc}", path=path) from exc
        x, y = pair
        if x in seen:
            raise DataError(
                f"duplicate x value {scalar_format(x)} at indices {seen[x]} and {index}"
            )
        seen[x] = index
        points.append((x, y))
    return points


def _arithmetic_of(values: Sequence[Scalar]) -> str:
    return "f64" if any(isinstance(value, float) for value in values) else "exact"


def _display_factor(value: float) -> float:
    """Round a derived factor to 15 significant digits for display.

    exp(log(a)) rarely lands back on a: the derived factors carry a few
    ulps of log-domain noise that 15 digits are exactly enough to hide
    while still distinguishing any two meaningfully different values.
    """
    return float(f"{value:.15g}")


def serialize_model(model: Model, fmt: str = "text", source: str | None = None) -> str:
    """Render a model as a display formula (``"text"``) or a JSON document.

    Text shows the combined monomial form for polynomials and the
    factored form for exponentials, omitting zero terms.  JSON documents
    are lossless: ``parse_model`` reconstructs an equal model.  ``source``
    optionally records where the fitted data came from.
    """
    if fmt not in MODEL_FORMATS:
        raise ValueError(
            f"unknown model format {fmt!r}; expected one of {', '.join(MODEL_FORMATS)}"
        )
    if fmt == "text":
        if isinstance(model, PolynomialModel):
            return _polynomial_text(model)
        return _exponential_text(model)
    return json.dumps(_document(model, source), indent=2)


def _power_suffix(j: int, multiplicative: bool) -> str:
    if j == 0:
        return ""
    base = "^X" if multiplicative else "*X"
    return base if j == 1 else (f"^(X^{j})" if multiplicative else f"*X^{j}")


def _polynomial_text(model: PolynomialModel) -> str:
    terms = []
    for j, c in enumerate(model.coefficients):
        if c == 0:
            continue
        rendered = scalar_format(c)
        if j == 0:
            terms.append(rendered)
        else:
            terms.append(f"({rendered}){_power_suffix(j, multiplicative=False)}")
    if not terms:
        return "Y = 0"
    return "Y = " + " + ".join(terms)


def _exponential_text(model: ExponentialModel) -> str:
    parts = [scalar_format(model.base_value)]
    for j, beta in enumerate(model.log_coefficients):
        if beta == 0:
            continue
        factor = scalar_format(_display_factor(math.exp(beta)))
        parts.append(f"({factor}){_power_suffix(j, multiplicative=True)}")
    return "Y = " + " * ".join(parts)


def _document(model: Model, source: str | None) -> dict:
    if isinstance(model, PolynomialModel):
        arithmetic = _arithmetic_of(model.coefficients)
        if arithmetic == "exact":
            coefficients = [scalar_format(c) for c in model.coefficients]
        else:
            coefficients = [float(c) for c in model.coefficients]
        document = {
            "model": "poly",
            "arith": arithmetic,
            "coefficients": coefficients,
            "points": len(model.coefficients),
        }
    else:
        arithmetic = _arithmetic_of([model.base_value])
        base: object
        if arithmetic == "exact":
            base = scalar_format(model.base_value)
        else:
            base = float(model.base_value)
        document = {
            "model": "exp",
            "arith": arithmetic,
            "p": base,
            "log_coefficients": list(model.log_coefficients),
            "factors": [_display_factor(a) for a in model.factors],
            "points": len(model.log_coefficients),
        }
    if source is not None:
        document["input"] = source
    return document


def _require(document: dict, key: str) -> object:
    if key not in document:
        raise ParseError(f"missing required field at $.{key}", path=f"$.{key}")
    return document[key]


def _number_at(value: object, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"expected a number at {path}", path=path)
    return float(value)


def _exact_at(value: object, path: str) -> Scalar:
    if not isinstance(value, str):
        raise ParseError(f"expected an exact scalar string at {path}", path=path)
    try:
        return scalar_parse(value, "exact")
    except ParseError as exc:
        raise ParseError(f"at {path}: {exc}", path=path) from exc


def parse_model(data: Union[str, bytes]) -> Model:
    """Reconstruct a model from its JSON document.

    Raises :class:`ParseError` with the JSON path of the first schema
    violation, and :class:`DomainError` for an exponential document whose
    base value is not positive.
    """
    text = _decode(data)
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise ParseError("expected a JSON object at $", path="$")
    kind = _require(document, "model")
    if kind not in ("poly", "exp"):
        raise ParseError(f"unknown model kind {kind!r} at $.model", path="$.model")
    arithmetic = _require(document, "arith")
    if arithmetic not in ("exact", "f64"):
        raise ParseError(
            f"unknown arithmetic {arithmetic!r} at $.arith", path="$.arith"
        )
    if kind == "poly":
        raw = _require(document, "coefficients")
        if not isinstance(raw, list) or not raw:
            raise ParseError(
                "expected a nonempty array at $.coefficients", path="$.coefficients"
            )
        coefficients: list[Scalar] = []
        for index, item in enumerate(raw):
            path = f"$.coefficients[{index}]"
            if arithmetic == "exact":
                coefficients.append(_exact_at(item, path))
            else:
                value = _number_at(item, path)
                if not math.isfinite(value):
                    raise ParseError(f"non-finite coefficient at {path}", path=path)
                coefficients.append(value)
        base = coefficients[0]
        zero = base * 0
        return PolynomialModel(base, (zero, *coefficients[1:]), tuple(coefficients))
    raw_base = _require(document, "p")
    if arithmetic == "exact":
        base = _exact_at(raw_base, "$.p")
    else:
        base = _number_at(raw_base, "$.p")
    raw_betas = _require(document, "log_coefficients")
    if not isinstance(raw_betas, list) or not raw_betas:
        raise ParseError(
            "expected a nonempty array at $.log_coefficients",
            path="$.log_coefficients",
        )
    betas = []
    for index, item in enumerate(raw_betas):
        path = f"$.log_coefficients[{index}]"
        value = _number_at(item, path)
        if not math.isfinite(value):
            raise ParseError(f"non-finite log coefficient at {path}", path=path)
        betas.append(value)
    if isinstance(base, float) and not math.isfinite(base):
        raise DomainError("base value must be finite")
    return ExponentialModel(base, tuple(betas))
