"""One-point codes on C_ab curves: encoding and unencoding.

A message is a vector of k codes, the coefficients of the information basis
``Bhat`` (ascending in the weighted order).  Encoding evaluates the message
polynomial at the code's points with fast bivariate multipoint evaluation.

Unencoding interpolates the received word on the point set.  When the code
is a maximal semi-grid code (points form a semi-grid with fibers of height a,
and m < n) the interpolant already is the message polynomial.  Otherwise it
is reduced modulo the Groebner basis of the vanishing ideal, which leaves the
unique representative supported on standard monomials.  For m >= n this is
still the message polynomial: two Bhat-supported polynomials with the same
evaluations differ by a kernel element, whose leading monomial is reducible
and therefore outside Bhat, so they coincide.

Codewords and messages are lists of integer codes.  Both unencoding paths
check that the recovered support lies in Bhat and raise
:class:`NotACodewordError` otherwise.
"""

from __future__ import annotations

import random
from typing import Sequence

import numpy as np

from .bivar import BiPoly, Monomial
from .curve import CabCurve
from .errors import CodeError, MissingGroebnerBasisError, NotACodewordError
from .geometry import PointSet
from .interp import bivariate_interp
from .mpeval import evaluate_points
from .upoly import poly_eval
from .vanish import GroebnerBasis, compute_Bhat, reduce, vanishing_gb

__all__ = [
    "CabCode",
    "encode",
    "encode_matrix",
    "encode_naive",
    "generator_matrix",
    "is_maximal_semigrid",
    "message_to_poly",
    "new_code",
    "precompute",
    "random_message",
    "unencode",
]


class CabCode:
    """Code parameters.  Build with :func:`new_code`."""

    def __init__(
        self,
        curve: CabCurve,
        points: PointSet,
        m: int,
        Bhat: Sequence[Monomial],
        gb: GroebnerBasis | None = None,
    ):
        self.curve = curve
        self.points = points
        self.m = m
        self.Bhat = tuple(Monomial(*t) for t in Bhat)
        self._slot = {mono: k for k, mono in enumerate(self.Bhat)}
        self.gb = gb
        semi, nu = points.is_semi_grid()
        self.maximal_semigrid = semi and nu == curve.a and m < points.n

    @property
    def field(self):
        return self.curve.field

    @property
    def n(self) -> int:
        return self.points.n

    @property
    def k(self) -> int:
        return len(self.Bhat)

    @property
    def genus(self) -> int:
        return self.curve.genus

    def slot(self, mono) -> int | None:
        return self._slot.get(Monomial(*mono))

    def attach_gb(self, gb: GroebnerBasis) -> None:
        if self.gb is not None and self.gb is not gb:
            raise CodeError("a Groebner basis is already attached to this code")
        if gb.order != self.curve.order:
            raise CodeError("Groebner basis order does not match the curve")
        self.gb = gb

    def __repr__(self):
        return (
            f"CabCode(n={self.n}, k={self.k}, m={self.m}, a={self.curve.a}, "
            f"b={self.curve.b}, maximal_semigrid={self.maximal_semigrid})"
        )


def new_code(curve: CabCurve, points: PointSet, m: int) -> CabCode:
    F = curve.field
    F._check(points.field)
    n = points.n
    if n == 0:
        raise CodeError("a code needs at least one point")
    if not 0 <= m <= n + 2 * curve.genus - 1:
        raise CodeError(f"order m = {m} outside [0, n + 2g - 1] = [0, {n + 2 * curve.genus - 1}]")
    off = [p for p, v in zip(points, evaluate_points(curve.H, points)) if v]
    if off:
        bad = off[0]
        raise CodeError(f"point {bad} is not on the curve")
    return CabCode(curve, points, m, compute_Bhat(points, curve.order, m))


def precompute(code: CabCode) -> GroebnerBasis:
    """Compute and attach the Groebner basis of the code's vanishing ideal."""
    if code.gb is None:
        code.attach_gb(vanishing_gb(code.points, code.curve.order))
    return code.gb


def is_maximal_semigrid(code: CabCode) -> bool:
    return code.maximal_semigrid


def _message(code: CabCode, msg) -> list[int]:
    msg = [int(c) for c in msg]
    if len(msg) != code.k:
        raise CodeError(f"message has length {len(msg)}, expected k = {code.k}")
    q = code.field.q
    if any(not 0 <= c < q for c in msg):
        raise CodeError(f"message entries must be element codes in [0, {q})")
    return msg


def message_to_poly(code: CabCode, msg) -> BiPoly:
    msg = _message(code, msg)
    return BiPoly.from_terms(code.field, ((i, j, c) for (i, j), c in zip(code.Bhat, msg)))


def encode(code: CabCode, msg) -> list[int]:
    """Codeword of msg, in the code's point order."""
    return evaluate_points(message_to_poly(code, msg), code.points)


def encode_naive(code: CabCode, msg) -> list[int]:
    """Per-point Horner evaluation; O(n * m) field operations."""
    f = message_to_poly(code, msg)
    F = code.field
    rows = [list(r) for r in f.rows]
    add, fmul = F.add, F.mul
    out = []
    for x, y in code.points:
        acc = 0
        for r in reversed(rows):
            acc = add(fmul(acc, y), poly_eval(F, r, x))
        out.append(acc)
    return out


def generator_matrix(code: CabCode) -> np.ndarray:
    """k x n matrix whose row t is the evaluation of Bhat[t] at the points."""
    F = code.field
    G = np.zeros((code.k, code.n), dtype=np.int64)
    for t, (i, j) in enumerate(code.Bhat):
        for s, (x, y) in enumerate(code.points):
            G[t, s] = F.mul(F.pow(x, i), F.pow(y, j))
    return G


def encode_matrix(code: CabCode, msg, G: np.ndarray | None = None) -> list[int]:
    """msg times the generator matrix."""
    msg = _message(code, msg)
    F = code.field
    if G is None:
        G = generator_matrix(code)
    acc = np.zeros(code.n, dtype=np.int64)
    for c, row in zip(msg, G):
        if c:
            acc = F.vadd(acc, F.vscale(c, row))
    return [int(v) for v in acc]


def unencode(code: CabCode, cw, force_general: bool = False) -> list[int]:
    """The message whose encoding is cw.

    Uses the semi-grid fast path on maximal semi-grid codes unless
    ``force_general``; the general path needs :func:`precompute` first.
    """
    cw = [int(c) for c in cw]
    if len(cw) != code.n:
        raise CodeError(f"codeword has length {len(cw)}, expected n = {code.n}")
    q = code.field.q
    if any(not 0 <= c < q for c in cw):
        raise CodeError(f"codeword entries must be element codes in [0, {q})")
    fhat = bivariate_interp(code.points, cw)
    if code.maximal_semigrid and not force_general:
        f = fhat
    else:
        if code.gb is None:
            raise MissingGroebnerBasisError(
                "general-path unencoding needs the Groebner basis; run precompute first"
            )
        f = reduce(fhat, code.gb)
    msg = [0] * code.k
    for i, j, c in f.terms():
        s = code._slot.get((i, j))
        if s is None:
            raise NotACodewordError(f"interpolant has the term X^{i} Y^{j}, outside the information set")
        msg[s] = c
    return msg


def random_message(code: CabCode, rng: random.Random | None = None) -> list[int]:
    rng = rng or random.Random()
    q = code.field.q
    return [rng.randrange(q) for _ in range(code.k)]
