"""Input validation helpers shared by the functional core and the estimators."""

from __future__ import annotations

import math
from typing import Sequence

from .errors import DataError
from .numeric import Scalar, scalar_format


def check_nodes(nodes: Sequence[Scalar]) -> list[Scalar]:
    """Validate interpolation nodes: at least one, all finite, pairwise distinct."""
    nodes = list(nodes)
    if not nodes:
        raise DataError("at least one node is required")
    seen: dict[Scalar, int] = {}
    for index, x in enumerate(nodes):
        if isinstance(x, float) and not math.isfinite(x):
            raise DataError(f"non-finite x value at position {index}")
        if x in seen:
            raise DataError(
                f"duplicate x value {scalar_format(x)} "
                f"(positions {seen[x]} and {index})"
            )
        seen[x] = index
    return nodes


def check_points(points: Sequence[tuple[Scalar, Scalar]]) -> list[tuple[Scalar, Scalar]]:
    """Validate sample points: nonempty, (x, y) pairs, finite, distinct x."""
    points = [tuple(point) for point in points]
    for index, point in enumerate(points):
        if len(point) != 2:
            raise DataError(f"point at position {index} is not an (x, y) pair")
    check_nodes([x for x, _ in points])
    for index, (_, y) in enumerate(points):
        if isinstance(y, float) and not math.isfinite(y):
            raise DataError(f"non-finite y value at position {index}")
    return points
