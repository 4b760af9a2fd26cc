"""C_ab curves: validation, rational points, and the standard families.

A C_ab polynomial H has Y^a and X^b in its support with gcd(a, b) = 1, every
term X^i Y^j satisfies a*i + b*j <= a*b, and H, dH/dX, dH/dY have no common
affine zero.  The last condition is certified by computing a Groebner basis
of the three polynomials and checking that it is {1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bivar import BiPoly, WeightedOrder, evaluate_naive, partial_x, partial_y
from .errors import CurveError
from .field import GF, FieldSpec, prime_power
from .geometry import PointSet
from .vanish import buchberger

__all__ = [
    "CabCurve",
    "good_family_bounds",
    "hasse_weil",
    "hermitian",
    "hermitian_like",
    "norm_trace",
    "rational_points",
    "transpose",
    "validate_cab",
]


@dataclass(frozen=True, eq=False)
class CabCurve:
    H: BiPoly
    a: int
    b: int

    @property
    def field(self) -> FieldSpec:
        return self.H.field

    @property
    def order(self) -> WeightedOrder:
        return WeightedOrder(self.a, self.b)

    @property
    def genus(self) -> int:
        return (self.a - 1) * (self.b - 1) // 2

    def __call__(self, x, y):
        return evaluate_naive(self.H, x, y)

    def __eq__(self, other):
        if not isinstance(other, CabCurve):
            return NotImplemented
        return self.H == other.H

    def __hash__(self):
        return hash(self.H)

    def __repr__(self):
        return f"CabCurve({self.H} over {self.field}, a={self.a}, b={self.b})"


def validate_cab(H: BiPoly) -> CabCurve:
    """Check the C_ab conditions and return the curve, or raise CurveError."""
    if H.is_zero():
        raise CurveError("the zero polynomial defines no curve", "nonzero")
    a, b = H.deg_y, H.deg_x
    if not H.coeff(0, a) or not H.coeff(b, 0):
        raise CurveError(f"Y^{a} and X^{b} must both appear in H", "support")
    bad = [(i, j) for i, j, _ in H.terms() if a * i + b * j > a * b]
    if bad:
        i, j = bad[0]
        raise CurveError(f"term X^{i} Y^{j} has weighted degree above {a * b}", "weighted-degree")
    if a == 1 and b == 1:
        raise CurveError("(a, b) = (1, 1) is excluded", "degenerate")
    if math.gcd(a, b) != 1:
        raise CurveError(f"gcd({a}, {b}) = {math.gcd(a, b)}", "coprime")
    order = WeightedOrder(a, b)
    gb = buchberger([H, partial_x(H), partial_y(H)], order)
    one = BiPoly.monomial(H.field, 0, 0, 1)
    if gb != [one]:
        raise CurveError("H, dH/dX and dH/dY have a common zero (singular curve)", "unit-ideal")
    return CabCurve(H, a, b)


def rational_points(C: CabCurve) -> PointSet:
    """All affine points of C, in ascending (x, y) order."""
    F = C.field
    q = F.q
    xs = np.arange(q, dtype=np.int64)
    X = np.repeat(xs, q)
    Y = np.tile(xs, q)
    acc = np.zeros(q * q, dtype=np.int64)
    # Horner in Y over all of F^2 at once, each coefficient row evaluated
    # on every x first
    for row in reversed(C.H.rows):
        cx = np.zeros(q * q, dtype=np.int64)
        xp = np.ones(q * q, dtype=np.int64)
        for c in row:
            if c:
                cx = F.vadd(cx, F.vscale(c, xp))
            xp = F.vmul(xp, X)
        acc = F.vadd(F.vmul(acc, Y), cx)
    hit = np.flatnonzero(acc == 0)
    return PointSet(F, zip((int(v) for v in X[hit]), (int(v) for v in Y[hit])))


def transpose(C: CabCurve) -> CabCurve:
    """The same curve with X and Y swapped (a and b swap)."""
    H = BiPoly.from_terms(C.field, ((j, i, c) for i, j, c in C.H.terms()))
    return CabCurve(H, C.b, C.a)


def _trace_terms(q: int, r: int):
    return [q**k for k in range(r)]


def hermitian(q: int) -> tuple[CabCurve, PointSet]:
    """Y^q + Y - X^(q+1) over GF(q^2): q^3 points, a maximal semi-grid."""
    prime_power(q)
    F = GF(q * q)
    minus_one = F.neg(1)
    H = BiPoly.from_terms(F, [(0, q, 1), (0, 1, 1), (q + 1, 0, minus_one)])
    C = validate_cab(H)
    assert C.a < C.b
    return C, rational_points(C)


def norm_trace(q: int, r: int) -> tuple[CabCurve, PointSet]:
    """Norm-trace curve over GF(q^r) in the orientation whose point set is a
    semi-grid: Y^(q^(r-1)) + ... + Y^q + Y - X^e with e = (q^r - 1)/(q - 1).

    Every x has exactly q^(r-1) points above it, so there are q^(2r-1)
    points on q^r columns.
    """
    if r < 2:
        raise ValueError("norm-trace curves need r >= 2")
    prime_power(q)
    F = GF(q**r)
    e = (q**r - 1) // (q - 1)
    terms = [(0, t, 1) for t in _trace_terms(q, r)] + [(e, 0, F.neg(1))]
    C = validate_cab(BiPoly.from_terms(F, terms))
    assert C.a < C.b
    return C, rational_points(C)


def hermitian_like(q: int, r: int, e: int) -> tuple[CabCurve, PointSet, PointSet]:
    """X^(q^(r-1)) + ... + X^q + X - Y^e over GF(q^r) for a proper divisor e
    of (q^r - 1)/(q - 1).

    Returns the curve, all its points, and the semi-grid made of the points
    with y != 0 (the x whose trace is nonzero, e points above each).
    """
    if r < 2:
        raise ValueError("hermitian-like curves need r >= 2")
    prime_power(q)
    E = (q**r - 1) // (q - 1)
    if e < 2 or e >= E or E % e:
        raise CurveError(f"e = {e} is not a proper divisor of {E}", "proper-divisor")
    F = GF(q**r)
    terms = [(t, 0, 1) for t in _trace_terms(q, r)] + [(0, e, F.neg(1))]
    C = validate_cab(BiPoly.from_terms(F, terms))
    assert C.a < C.b
    P = rational_points(C)
    return C, P, P.subset(lambda x, y: y != 0)


def hasse_weil(C: CabCurve) -> int:
    """floor((a-1)(b-1) sqrt(q)) + q, the bound on the number of affine points."""
    q = C.field.q
    k = (C.a - 1) * (C.b - 1)
    return math.isqrt(k * k * q) + q


def good_family_bounds(n: int, q: int, c: float) -> dict[str, float]:
    """Upper bounds on a, q*a and q*a^2 for a code of length n >= max(q, c*HW)
    over GF(q) on a curve with a < b."""
    if not 0 < c <= 1:
        raise ValueError("c must lie in (0, 1]")
    return {
        "a": math.sqrt(n / (c * math.sqrt(q))) + 1,
        "qa": n**1.25 / math.sqrt(c) + n,
        "qa2": n**1.5 / c + 2 * n**1.25 / math.sqrt(c) + 2 * n,
    }
