"""The vanishing ideal of a point set under the (a, b)-weighted order.

* :func:`vanishing_gb` computes its reduced Groebner basis by the
  Buchberger-Moeller procedure: monomials are streamed in ascending order and
  tested for linear dependence of their evaluation vectors.
* :func:`compute_Bhat` selects the information set of a code with the same
  elimination machinery.
* :func:`reduce` is the deterministic classical division used by unencoding.
  The divisor is the lowest-index basis element whose leading monomial
  divides some term; the term cancelled is the largest such term.

:func:`divide`, :func:`s_poly` and :func:`buchberger` are textbook reference
implementations on dict polynomials, used for certification and as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .bivar import BiPoly, Monomial, WeightedOrder, leading_monomial, scale
from .errors import ReducePreconditionError
from .field import FieldSpec
from .geometry import PointSet
from .upoly import _ops

__all__ = [
    "GroebnerBasis",
    "buchberger",
    "compute_Bhat",
    "divide",
    "reduce",
    "s_poly",
    "vanishing_gb",
]


# -- linear algebra on evaluation vectors -------------------------------------


class _PointPowers:
    # evaluation vectors of monomials on a fixed point list, built incrementally
    def __init__(self, P: PointSet):
        self.F = P.field
        xs = np.array([x for x, _ in P.points], dtype=np.int64)
        ys = np.array([y for _, y in P.points], dtype=np.int64)
        one = np.ones(len(xs), dtype=np.int64)
        self._base = (xs, ys)
        self._pows = ([one], [one])

    def _pow(self, axis: int, e: int) -> np.ndarray:
        pows = self._pows[axis]
        while len(pows) <= e:
            pows.append(self.F.vmul(pows[-1], self._base[axis]))
        return pows[e]

    def __call__(self, mono) -> np.ndarray:
        i, j = mono
        if not j:
            return self._pow(0, i).copy()
        if not i:
            return self._pow(1, j).copy()
        return self.F.vmul(self._pow(0, i), self._pow(1, j))


class _Echelon:
    """Incremental row echelon form that remembers each row as a combination
    of the accepted monomials."""

    def __init__(self, F: FieldSpec, n: int):
        self.F = F
        self.n = n
        self.rows: list[tuple[int, np.ndarray, np.ndarray]] = []
        self.accepted: list[Monomial] = []

    def _sub_scaled(self, u, c, v):
        F = self.F
        return F.vadd(u, F.vneg(F.vscale(c, v)))

    def insert(self, mono, vec: np.ndarray):
        """Reduce vec; accept it and return None if independent, otherwise
        return the coefficient vector ``comb`` with ev(mono) + sum comb[s] ev(s) = 0."""
        F = self.F
        comb = np.zeros(self.n, dtype=np.int64)
        v = vec
        for piv, row, rc in self.rows:
            c = int(v[piv])
            if c:
                v = self._sub_scaled(v, c, row)
                comb = self._sub_scaled(comb, c, rc)
        nz = np.flatnonzero(v)
        if not len(nz):
            return comb
        piv = int(nz[0])
        comb[len(self.accepted)] = 1
        s = F.inv(int(v[piv]))
        self.rows.append((piv, F.vscale(s, v), F.vscale(s, comb)))
        self.accepted.append(Monomial(*mono))
        return None


# -- the basis ------------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis of a vanishing ideal, in reduction order.

    ``elements[0]`` has a Y-free leading monomial X^i (i <= n_x) and
    ``elements[1]`` a pure-Y leading monomial Y^d; the rest follow in
    ascending order of leading monomial.
    """

    order: WeightedOrder
    elements: tuple[BiPoly, ...]
    n_x: int
    leading: tuple[Monomial, ...] = dc_field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "leading", tuple(leading_monomial(g, self.order) for g in self.elements)
        )

    @property
    def field(self) -> FieldSpec:
        return self.elements[0].field

    @property
    def t(self) -> int:
        return len(self.elements)

    @property
    def pure_y_degree(self) -> int | None:
        for i, j in self.leading:
            if i == 0:
                return j
        return None

    @property
    def g1_divides_x_nx(self) -> bool:
        lm = self.leading[0]
        return lm.j == 0 and lm.i <= self.n_x

    @property
    def g1_y_free(self) -> bool:
        return self.elements[0].deg_y == 0

    @property
    def g2_pure_y_within_a(self) -> bool:
        lm = self.leading[1] if self.t > 1 else self.leading[0]
        return lm.i == 0 and lm.j <= self.order.a

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, k):
        return self.elements[k]


def _arrange(elements: list[BiPoly], order: WeightedOrder) -> list[BiPoly]:
    lms = [leading_monomial(g, order) for g in elements]
    idx = sorted(range(len(elements)), key=lambda k: order.key(lms[k]))
    first = [k for k in idx if lms[k].j == 0][:1]
    second = [k for k in idx if lms[k].i == 0 and k not in first][:1]
    rest = [k for k in idx if k not in first and k not in second]
    return [elements[k] for k in first + second + rest]


def vanishing_gb(P: PointSet, order: WeightedOrder) -> GroebnerBasis:
    """Reduced Groebner basis of {h : h(p) = 0 for p in P} under ``order``."""
    if not len(P):
        raise ValueError("vanishing ideal of the empty set is the unit ideal")
    F = P.field
    ev = _PointPowers(P)
    ech = _Echelon(F, len(P))
    lms: list[Monomial] = []
    elements: list[BiPoly] = []
    x_top = y_top = None
    for mono in order.monomials():
        if x_top is not None and y_top is not None:
            if order.weight(mono) > order.a * (x_top - 1) + order.b * (y_top - 1):
                break
        if any(lm.divides(mono) for lm in lms):
            continue
        comb = ech.insert(mono, ev(mono))
        if comb is None:
            continue
        terms = [(mono.i, mono.j, 1)]
        terms += [(s.i, s.j, int(c)) for s, c in zip(ech.accepted, comb) if c]
        elements.append(BiPoly.from_terms(F, terms))
        lms.append(mono)
        if mono.j == 0:
            x_top = mono.i
        if mono.i == 0:
            y_top = mono.j
    return GroebnerBasis(order, tuple(_arrange(elements, order)), P.n_x)


def compute_Bhat(P: PointSet, order: WeightedOrder, m: int) -> list[Monomial]:
    """Monomials of B = {x^i y^j : a*i + b*j <= m, j < a} whose evaluation
    vectors are independent of all smaller ones, ascending.

    For m < |P| evaluation is injective on L(mP_inf), so this is all of B.
    """
    if m < 0:
        return []
    B = list(order.monomials(max_weight=m, max_j=order.a - 1))
    if m < len(P):
        return B
    ev = _PointPowers(P)
    ech = _Echelon(P.field, len(P))
    out = []
    for mono in B:
        if ech.insert(mono, ev(mono)) is None:
            out.append(mono)
            if len(out) == len(P):
                break
    return out


# -- reduction --------------------------------------------------------------------


def reduce(f: BiPoly, G: GroebnerBasis, check: bool = True, stats: dict | None = None) -> BiPoly:
    """Remainder of f modulo G by the deterministic division rule.

    With ``check`` the input must satisfy deg_X f < n_x and deg_Y f < a, and
    G must contain a pure-Y leading monomial Y^d with d <= a.

    Every step asserts that the largest weighted degree of the remainder
    does not grow.  The intermediate bounds deg_X R < 2 n_x and
    deg_Y R < 2a are asserted only when, in addition, G[0] is free of Y:
    if G[0] has Y-terms (possible when its leading monomial is a proper
    divisor of X^n_x) a step by G[0] can raise deg_Y by deg_Y G[0], and
    the bounds do fail on some point sets.

    ``stats``, when given, receives ``steps``, ``max_deg_x`` and ``max_deg_y``
    over all intermediate remainders.
    """
    F = f.field
    F._check(G.field)
    order = G.order
    a, b = order.a, order.b
    d = G.pure_y_degree
    within = (
        f.is_zero() or (f.deg_x < G.n_x and f.deg_y < a)
    ) and d is not None and d <= a
    if check and not within:
        raise ReducePreconditionError(
            f"reduce needs deg_X < {G.n_x}, deg_Y < {a} and a pure-Y leading monomial "
            f"of degree <= {a}; got deg_X={f.deg_x}, deg_Y={f.deg_y}, d={d}"
        )
    bounded = within and G.g1_y_free
    ops = _ops(F)
    R = [list(r) for r in f.rows]
    gs = [(lm, [ops.prep(list(r)) for r in g.rows]) for lm, g in zip(G.leading, G.elements)]
    bx, by = 2 * G.n_x, 2 * a
    top = _max_weight(R, a, b)
    steps, mx, my = 0, max((len(r) for r in R), default=0), len(R)
    while True:
        pick = None
        for lm, prows in gs:
            best = None
            for j in range(lm.j, len(R)):
                i = len(R[j]) - 1
                if i >= lm.i:
                    k = (a * i + b * j, j)
                    if best is None or k > best[0]:
                        best = (k, i, j)
            if best is not None:
                pick = (lm, prows, best[1], best[2])
                break
        if pick is None:
            break
        lm, prows, i, j = pick
        c = R[j][i]
        di, dj = i - lm.i, j - lm.j
        need = dj + len(prows)
        if len(R) < need:
            R.extend([] for _ in range(need - len(R)))
        for jj, pb in enumerate(prows):
            if not pb:
                continue
            row = R[dj + jj]
            end = di + pb[-1][0] + 1
            if len(row) < end:
                row.extend([0] * (end - len(row)))
            ops.submul_into(row, c, pb, di)
            while row and not row[-1]:
                row.pop()
        while R and not R[-1]:
            R.pop()
        steps += 1
        my = max(my, len(R))
        mx = max(mx, max((len(r) for r in R), default=0))
        assert _max_weight(R, a, b) <= top, "weighted degree of the remainder grew"
        if bounded:
            assert len(R) <= by, f"deg_Y of remainder reached {len(R) - 1}"
            assert all(len(r) <= bx for r in R), "deg_X of remainder reached 2*n_x"
    if stats is not None:
        stats.update(steps=steps, max_deg_x=mx - 1, max_deg_y=my - 1)
    return BiPoly._raw(F, R)


def _max_weight(R, a, b) -> int:
    return max((a * (len(r) - 1) + b * j for j, r in enumerate(R) if r), default=-1)


# -- textbook references on dict polynomials ---------------------------------------


def _lt(p: dict, order: WeightedOrder):
    m = max(p, key=order.key)
    return m, p[m]


def _axpy(F: FieldSpec, p: dict, c: int, shift, g: dict) -> dict:
    # p - c * X^shift.i Y^shift.j * g
    out = dict(p)
    si, sj = shift
    for (i, j), v in g.items():
        key = (i + si, j + sj)
        nv = F.sub(out.get(key, 0), F.mul(c, v))
        if nv:
            out[key] = nv
        else:
            out.pop(key, None)
    return out


def _to_dict(f) -> dict:
    if isinstance(f, BiPoly):
        return {(i, j): c for i, j, c in f.terms()}
    return {tuple(k): v for k, v in f.items() if v}


def divide(f: BiPoly, divisors: Sequence[BiPoly], order: WeightedOrder) -> BiPoly:
    """Remainder of classical multivariate division (leading-term driven,
    first divisor wins)."""
    F = f.field
    p = _to_dict(f)
    gs = [(_lt(d, order), d) for d in map(_to_dict, divisors)]
    r: dict = {}
    while p:
        (m, c) = _lt(p, order)
        for (lm, lc), g in gs:
            if lm[0] <= m[0] and lm[1] <= m[1]:
                p = _axpy(F, p, F.div(c, lc), (m[0] - lm[0], m[1] - lm[1]), g)
                break
        else:
            r[m] = c
            del p[m]
    return BiPoly.from_dict(F, r)


def s_poly(f: BiPoly, g: BiPoly, order: WeightedOrder) -> BiPoly:
    F = f.field
    fd, gd = _to_dict(f), _to_dict(g)
    (mf, cf), (mg, cg) = _lt(fd, order), _lt(gd, order)
    L = (max(mf[0], mg[0]), max(mf[1], mg[1]))
    out = _axpy(F, {}, F.neg(F.inv(cf)), (L[0] - mf[0], L[1] - mf[1]), fd)
    out = _axpy(F, out, F.inv(cg), (L[0] - mg[0], L[1] - mg[1]), gd)
    return BiPoly.from_dict(F, out)


def _monic(g: BiPoly, order: WeightedOrder) -> BiPoly:
    i, j = leading_monomial(g, order)
    return scale(g, g.field.inv(g.rows[j][i]))


def buchberger(generators: Sequence[BiPoly], order: WeightedOrder) -> list[BiPoly]:
    """Reduced Groebner basis of the ideal generated, sorted by leading monomial."""
    G = [_monic(g, order) for g in generators if not g.is_zero()]
    if not G:
        return []
    pairs = [(i, j) for i in range(len(G)) for j in range(i)]
    while pairs:
        i, j = pairs.pop()
        r = divide(s_poly(G[i], G[j], order), G, order)
        if not r.is_zero():
            G.append(_monic(r, order))
            pairs += [(len(G) - 1, k) for k in range(len(G) - 1)]
    # minimise, then inter-reduce
    lms = [leading_monomial(g, order) for g in G]
    keep = []
    for k, lm in enumerate(lms):
        if any(
            o.divides(lm) and (o != lm or k2 < k) for k2, o in enumerate(lms) if k2 != k
        ):
            continue
        keep.append(G[k])
    out = []
    for k, g in enumerate(keep):
        others = keep[:k] + keep[k + 1 :]
        lm = leading_monomial(g, order)
        tail = g - BiPoly.monomial(g.field, lm.i, lm.j, 1)
        out.append(BiPoly.monomial(g.field, lm.i, lm.j, 1) + divide(tail, others, order))
    return sorted(out, key=lambda g: order.key(leading_monomial(g, order)))
