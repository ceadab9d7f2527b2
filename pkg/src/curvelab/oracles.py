"""Independent reference computations used to cross-check the core."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .diffquot import Curve, dq_raw


def newton_divided_difference(values: Sequence, pts: Sequence):
    """Closed form ``sum_i f(x_i) / prod_{j != i} (x_i - x_j)`` for distinct points."""
    total = Fraction(0)
    for i, (fi, xi) in enumerate(zip(values, pts)):
        den = Fraction(1)
        for j, xj in enumerate(pts):
            if j != i:
                den *= xi - xj
        total += fi / den
    return total


def lagrange_at_zero(nodes: Sequence, values: Sequence):
    """Value at 0 of the interpolating polynomial through ``(nodes, values)``."""
    total = Fraction(0)
    for i, (ei, vi) in enumerate(zip(nodes, values)):
        w = Fraction(1)
        for j, ej in enumerate(nodes):
            if j != i:
                w *= ej / (ej - nodes[i])
        total += w * vi
    return total


def coincident_limit(c: Curve, k: int, x, degree: int) -> tuple:
    """Limit of ``c<k>(x, x+e, ..., x+k e)`` as ``e -> 0``.

    For a polynomial of the given degree the quotient is a polynomial in e
    of degree at most ``degree - k``; it is evaluated at that many plus one
    distinct small rational e and interpolated exactly at e = 0.
    """
    m = max(degree - k, 0) + 1
    nodes = [Fraction(1, 7 + 3 * i) for i in range(m)]
    cols = []
    for e in nodes:
        pts = tuple(x + i * e for i in range(k + 1))
        cols.append(dq_raw(c, pts))
    return tuple(lagrange_at_zero(nodes, [v[d] for v in cols]) for d in range(len(cols[0])))
