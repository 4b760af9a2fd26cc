"""Bivariate interpolation: Lagrange in Y on each fiber, then Lagrange in X
across the fibers, assembled by a divide-and-conquer combine over the
subproduct tree of the X-support.

The result has deg_X < n_X and deg_Y < nu_Y.  On a semi-grid it is the
unique interpolant with those degree bounds.
"""

from __future__ import annotations

from typing import Mapping

from .bivar import BiPoly
from .geometry import PointSet
from .upoly import PartitionTree, UniPoly, combine_rows, poly_scale

__all__ = ["combine", "bivariate_interp"]


def combine(S, V: Mapping, T: PartitionTree, U: Mapping) -> BiPoly:
    """sum_{a in S} V[a](Y) * prod_{a' in S, a' != a}(X - a').

    S must be a node of T and U the output of ``tree_vanish(T)``.
    """
    try:
        node = T.node(S)
    except KeyError as exc:
        raise ValueError(str(exc)) from None
    F = T.field
    rows_v = {}
    for a in node.points:
        v = V[a] if a in V else V[F(a)]
        rows_v[a] = list(v.c) if isinstance(v, UniPoly) else [int(c) for c in v]
    return BiPoly._raw(F, combine_rows(F, node, rows_v, U))


def bivariate_interp(P: PointSet, values) -> BiPoly:
    """Interpolate ``values`` on P.

    ``values`` maps each point (as a pair of codes) to a code, or is a
    sequence aligned with P's point order.
    """
    if not len(P):
        raise ValueError("bivariate_interp needs a non-empty point set")
    F = P.field
    if not isinstance(values, Mapping):
        values = dict(zip(P.points, (int(v) for v in values)))
    xtree = P.x_tree()
    R = xtree.denominators()
    V = {}
    for alpha, ys in P.fibers.items():
        fa = P.fiber_tree(alpha).interpolate({b: int(values[(alpha, b)]) for b in ys})
        r = R[alpha]
        if not r:
            raise ArithmeticError(f"zero Lagrange denominator at x={alpha}; corrupted point set")
        V[alpha] = poly_scale(F, fa, F.inv(r))
    return BiPoly._raw(F, combine_rows(F, xtree.root, V))
