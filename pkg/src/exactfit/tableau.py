"""Tableau construction for direct monomial-coefficient interpolation.

Everything here works on coefficient vectors stored in ascending order of
power (index j holds the coefficient of x^j) and on a node list indexed
from 0, where node 0 is the base point of a fit.

The pipeline has three steps:

1. :func:`node_coefficients` builds N, the negated coefficients of the
   full node polynomial prod_i (x - x_i), one node at a time.
2. :func:`deflate` divides the (sign-restored) node polynomial by a
   single factor (x - x_k) using the synthetic-division recurrence,
   giving the monic coefficients of prod_{m != k} (x - x_m).
3. :func:`basis_matrix` scales each deflated row by the node's
   separation product, yielding the monomial coefficients of every
   cardinal basis polynomial L_k (the degree-n polynomial that is 1 at
   x_k and 0 at the other nodes).

All three are generic over the scalar backend: rational nodes flow
through exactly, floats in binary64.
"""

from __future__ import annotations

from typing import Sequence

from .numeric import Scalar, unit_like
from .validation import check_nodes


def node_coefficients(nodes: Sequence[Scalar]) -> list[Scalar]:
    """Negated monomial coefficients N of the node polynomial.

    N satisfies sum_m N[m] x^m = -prod_i (x - x_i), so the list has
    length ``len(nodes) + 1``, its leading entry is -1, and every node is
    a root.  It is built by folding nodes in one at a time: appending
    node x maps a row r to the convolution r'[m] = (-x) r[m] + r[m-1],
    starting from the single-entry row [-1].  The result is independent
    of node order because the underlying product is.
    """
    nodes = check_nodes(nodes)
    one = unit_like(nodes)
    zero = one * 0
    row: list[Scalar] = [-one]
    for x in nodes:
        extended: list[Scalar] = [zero] * (len(row) + 1)
        for m, c in enumerate(row):
            extended[m] += -x * c
            extended[m + 1] += c
        row = extended
    return row


def deflate(ncoeffs: Sequence[Scalar], nodes: Sequence[Scalar], k: int) -> list[Scalar]:
    """Divide the node polynomial by (x - x_k) via synthetic division.

    Given N = ``node_coefficients(nodes)`` and a node index ``k``, returns
    the monic coefficients Q of prod_{m != k} (x - x_m), computed by the
    recurrence

        Q[n] = 1,    Q[j] = x_k Q[j+1] - N[j+1]    (j = n-1, ..., 0)

    where n = ``len(nodes) - 1``.  The recurrence inverts the convolution
    identity N[m] = x_k Q[m] - Q[m-1], which holds with Q[-1] = Q[n+1] = 0
    because appending x_k to the other nodes reproduces N.
    """
    nodes = list(nodes)
    n = len(nodes) - 1
    if not 0 <= k <= n:
        raise IndexError(f"node index {k} out of range for {n + 1} nodes")
    if len(ncoeffs) != n + 2:
        raise ValueError(
            f"expected {n + 2} node coefficients for {n + 1} nodes, got {len(ncoeffs)}"
        )
    xk = nodes[k]
    quotient: list[Scalar] = [unit_like(nodes)] * (n + 1)
    for j in range(n - 1, -1, -1):
        quotient[j] = xk * quotient[j + 1] - ncoeffs[j + 1]
    return quotient


def basis_matrix(nodes: Sequence[Scalar]) -> list[list[Scalar]]:
    """Monomial coefficients of every cardinal basis polynomial.

    Row k holds the coefficients F[k] of L_k(x), the unique degree-n
    polynomial with L_k(x_k) = 1 and L_k(x_m) = 0 for m != k: the
    deflated row for node k divided by D_k = prod_{m != k} (x_k - x_m).
    Two identities pin the matrix down: evaluating row k at the nodes
    reproduces the 1-at-k/0-elsewhere pattern, and the rows sum to the
    constant polynomial 1.
    """
    nodes = check_nodes(nodes)
    ncoeffs = node_coefficients(nodes)
    rows: list[list[Scalar]] = []
    for k, xk in enumerate(nodes):
        separation = unit_like(nodes)
        for m, xm in enumerate(nodes):
            if m != k:
                separation *= xk - xm
        rows.append([q / separation for q in deflate(ncoeffs, nodes, k)])
    return rows
