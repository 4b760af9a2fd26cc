"""Fast bivariate multipoint evaluation.

Each X-row of f is evaluated on the X-support with one shared subproduct
tree.  For every alpha this gives g_alpha(Y) = f(alpha, Y), which is then
evaluated on the fiber over alpha.  On a semi-grid with n_X columns of
height nu the cost is O(d_Y * M(d_X + n_X) log n_X + n_X * M(nu) log nu).
"""

from __future__ import annotations

from .bivar import BiPoly
from .geometry import PointSet
from .upoly import trim

__all__ = ["bivariate_mpe", "evaluate_points"]


def bivariate_mpe(f: BiPoly, P: PointSet) -> dict[tuple[int, int], int]:
    """Map each point (x, y) of P, as codes, to the code of f(x, y)."""
    if not len(P):
        raise ValueError("bivariate_mpe needs a non-empty point set")
    P.field._check(f.field)
    xtree = P.x_tree()
    # zero rows skip their evaluation entirely
    row_vals = [xtree.evaluate(list(r)) if r else None for r in f.rows]
    out: dict[tuple[int, int], int] = {}
    for alpha, ys in P.fibers.items():
        g = trim([rv[alpha] if rv is not None else 0 for rv in row_vals])
        if len(g) <= 1:
            c = g[0] if g else 0
            for beta in ys:
                out[(alpha, beta)] = c
            continue
        vals = P.fiber_tree(alpha).evaluate(g)
        for beta in ys:
            out[(alpha, beta)] = vals[beta]
    return out


def evaluate_points(f: BiPoly, P: PointSet) -> list[int]:
    """Values of f at the points of P, in P's order."""
    vals = bivariate_mpe(f, P)
    return [vals[pt] for pt in P.points]
