"""Bivariate polynomials stored as X-rows indexed by the power of Y, and the
(a, b)-weighted monomial order.

``BiPoly.rows[j]`` is the tuple of X-coefficient codes multiplying ``Y^j``.
Rows are trailing-zero free and there are no trailing zero rows, so equality
is plain tuple equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .field import FieldElement, FieldSpec
from .upoly import UniPoly, poly_add, poly_deriv, poly_eval, poly_mul, poly_scale, poly_sub, trim

__all__ = [
    "BiPoly",
    "Monomial",
    "WeightedOrder",
    "add",
    "evaluate_naive",
    "leading_monomial",
    "mul",
    "mul_by_term",
    "partial_x",
    "partial_y",
    "scale",
    "sub",
    "weighted_degree",
]


class Monomial(NamedTuple):
    """X^i Y^j."""

    i: int
    j: int

    def divides(self, other: Monomial) -> bool:
        return self.i <= other.i and self.j <= other.j

    def __truediv__(self, other: Monomial) -> Monomial:
        return Monomial(self.i - other.i, self.j - other.j)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.i + other.i, self.j + other.j)

    def __repr__(self):
        parts = []
        if self.i:
            parts.append("x" if self.i == 1 else f"x^{self.i}")
        if self.j:
            parts.append("y" if self.j == 1 else f"y^{self.j}")
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class WeightedOrder:
    """Order monomials by a*i + b*j, then by j (so x^b < y^a)."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("weights must be positive")

    def weight(self, mono) -> int:
        return self.a * mono[0] + self.b * mono[1]

    def key(self, mono) -> tuple[int, int]:
        return (self.a * mono[0] + self.b * mono[1], mono[1])

    def less(self, m1, m2) -> bool:
        return self.key(m1) < self.key(m2)

    def monomials(self, max_weight: int | None = None, max_j: int | None = None) -> Iterator[Monomial]:
        """All monomials in ascending order, optionally capped by weight and Y-degree."""
        a, b = self.a, self.b
        w = 0
        while max_weight is None or w <= max_weight:
            top = w // b if max_j is None else min(w // b, max_j)
            for j in range(top + 1):
                r = w - b * j
                if r % a == 0:
                    yield Monomial(r // a, j)
            w += 1

    def sorted(self, monos: Iterable) -> list[Monomial]:
        return sorted((Monomial(*m) for m in monos), key=self.key)


class BiPoly:
    """Immutable bivariate polynomial f = sum_j rows[j](X) * Y^j."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FieldSpec, rows: Iterable = ()):
        self.field = field
        out = []
        for r in rows:
            if isinstance(r, UniPoly):
                field._check(r.field)
                out.append(r.c)
            else:
                out.append(tuple(trim([int(x) for x in r])))
        while out and not out[-1]:
            out.pop()
        self.rows = tuple(out)

    @classmethod
    def _raw(cls, field, rows):
        obj = cls.__new__(cls)
        obj.field = field
        rows = list(rows)
        while rows and not rows[-1]:
            rows.pop()
        obj.rows = tuple(tuple(r) for r in rows)
        return obj

    @classmethod
    def zero(cls, field: FieldSpec) -> BiPoly:
        return cls._raw(field, ())

    @classmethod
    def monomial(cls, field: FieldSpec, i: int, j: int, c: int = 1) -> BiPoly:
        c = int(c)
        if not c:
            return cls.zero(field)
        rows = [()] * j + [(0,) * i + (c,)]
        return cls._raw(field, rows)

    @classmethod
    def from_terms(cls, field: FieldSpec, terms: Iterable) -> BiPoly:
        """Build from (i, j, c) triples; repeated monomials are summed."""
        acc: dict[int, list[int]] = {}
        for i, j, c in terms:
            c = int(c)
            if not c:
                continue
            row = acc.setdefault(j, [])
            if len(row) <= i:
                row.extend([0] * (i + 1 - len(row)))
            row[i] = field.add(row[i], c)
        if not acc:
            return cls.zero(field)
        rows = [trim(acc.get(j, [])) for j in range(max(acc) + 1)]
        return cls._raw(field, rows)

    @classmethod
    def from_dict(cls, field: FieldSpec, coeffs: dict) -> BiPoly:
        return cls.from_terms(field, ((i, j, c) for (i, j), c in coeffs.items()))

    # -- shape ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.rows

    @property
    def deg_y(self):
        return len(self.rows) - 1 if self.rows else -math.inf

    @property
    def deg_x(self):
        if not self.rows:
            return -math.inf
        return max(len(r) for r in self.rows) - 1

    def row(self, j: int) -> UniPoly:
        r = self.rows[j] if j < len(self.rows) else ()
        return UniPoly._raw(self.field, r)

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Nonzero terms (i, j, c), sorted by (j, i)."""
        for j, r in enumerate(self.rows):
            for i, c in enumerate(r):
                if c:
                    yield i, j, c

    def support(self) -> list[Monomial]:
        return [Monomial(i, j) for i, j, _ in self.terms()]

    def coeff(self, i: int, j: int) -> int:
        if j < len(self.rows) and i < len(self.rows[j]):
            return self.rows[j][i]
        return 0

    def to_dict(self) -> dict[Monomial, int]:
        return {Monomial(i, j): c for i, j, c in self.terms()}

    def __len__(self):
        return sum(1 for _ in self.terms())

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, g):
        if isinstance(g, BiPoly):
            self.field._check(g.field)
            return g
        if isinstance(g, UniPoly):
            self.field._check(g.field)
            return BiPoly._raw(self.field, [g.c])
        if isinstance(g, FieldElement):
            self.field._check(g.field)
            return BiPoly.monomial(self.field, 0, 0, g.value)
        if isinstance(g, int):
            return BiPoly.monomial(self.field, 0, 0, self.field.from_int(g))
        return NotImplemented

    def __add__(self, g):
        g = self._coerce(g)
        if g is NotImplemented:
            return g
        return add(self, g)

    __radd__ = __add__

    def __sub__(self, g):
        g = self._coerce(g)
        if g is NotImplemented:
            return g
        return sub(self, g)

    def __rsub__(self, g):
        g = self._coerce(g)
        if g is NotImplemented:
            return g
        return sub(g, self)

    def __neg__(self):
        F = self.field
        return BiPoly._raw(F, [[F.neg(c) for c in r] for r in self.rows])

    def __mul__(self, g):
        if isinstance(g, (int, FieldElement)) and not isinstance(g, bool):
            c = g.value if isinstance(g, FieldElement) else self.field.from_int(g)
            return scale(self, c)
        g = self._coerce(g)
        if g is NotImplemented:
            return g
        return mul(self, g)

    __rmul__ = __mul__

    def __call__(self, alpha, beta) -> FieldElement:
        return evaluate_naive(self, alpha, beta)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.field == other.field and self.rows == other.rows
        if isinstance(other, int) and not other:
            return not self.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        if not self.rows:
            return "0"
        out = []
        for i, j, c in sorted(self.terms(), key=lambda t: (t[1], t[0]), reverse=True):
            mono = repr(Monomial(i, j)).replace("x", "X").replace("y", "Y")
            if mono == "1":
                out.append(str(c))
            else:
                out.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(out)


# -- module-level operations ----------------------------------------------------


def weighted_degree(f: BiPoly, order: WeightedOrder) -> int:
    if f.is_zero():
        raise ValueError("weighted degree of the zero polynomial is undefined")
    a, b = order.a, order.b
    return max(a * (len(r) - 1) + b * j for j, r in enumerate(f.rows) if r)


def leading_monomial(f: BiPoly, order: WeightedOrder) -> Monomial:
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading monomial")
    a, b = order.a, order.b
    best = None
    for j, r in enumerate(f.rows):
        if r:
            k = (a * (len(r) - 1) + b * j, j)
            if best is None or k > best[0]:
                best = (k, Monomial(len(r) - 1, j))
    return best[1]


def leading_coefficient(f: BiPoly, order: WeightedOrder) -> int:
    i, j = leading_monomial(f, order)
    return f.rows[j][i]


def evaluate_naive(f: BiPoly, alpha, beta) -> FieldElement:
    """Horner in Y over Horner in X at a single point."""
    F = f.field
    x, y = int(alpha), int(beta)
    acc = 0
    for r in reversed(f.rows):
        acc = F.add(F.mul(acc, y), poly_eval(F, list(r), x))
    return FieldElement(F, acc)


def _rowwise(f: BiPoly, g: BiPoly, op) -> BiPoly:
    F = f.field
    F._check(g.field)
    n = max(len(f.rows), len(g.rows))
    rows = []
    for j in range(n):
        u = list(f.rows[j]) if j < len(f.rows) else []
        v = list(g.rows[j]) if j < len(g.rows) else []
        rows.append(op(F, u, v))
    return BiPoly._raw(F, rows)


def add(f: BiPoly, g: BiPoly) -> BiPoly:
    return _rowwise(f, g, poly_add)


def sub(f: BiPoly, g: BiPoly) -> BiPoly:
    return _rowwise(f, g, poly_sub)


def scale(f: BiPoly, c) -> BiPoly:
    c = int(c)
    return BiPoly._raw(f.field, [poly_scale(f.field, list(r), c) for r in f.rows])


def mul(f: BiPoly, g: BiPoly) -> BiPoly:
    F = f.field
    F._check(g.field)
    if f.is_zero() or g.is_zero():
        return BiPoly.zero(F)
    rows: list[list[int]] = [[] for _ in range(len(f.rows) + len(g.rows) - 1)]
    for j1, r1 in enumerate(f.rows):
        if not r1:
            continue
        for j2, r2 in enumerate(g.rows):
            if r2:
                rows[j1 + j2] = poly_add(F, rows[j1 + j2], poly_mul(F, list(r1), list(r2)))
    return BiPoly._raw(F, rows)


def mul_by_term(f: BiPoly, c, mono) -> BiPoly:
    """c * X^i * Y^j * f."""
    i, j = mono
    c = int(c)
    if not c or f.is_zero():
        return BiPoly.zero(f.field)
    pad = (0,) * i
    rows = [()] * j + [pad + tuple(poly_scale(f.field, list(r), c)) if r else () for r in f.rows]
    return BiPoly._raw(f.field, rows)


def partial_x(f: BiPoly) -> BiPoly:
    return BiPoly._raw(f.field, [poly_deriv(f.field, list(r)) for r in f.rows])


def partial_y(f: BiPoly) -> BiPoly:
    F = f.field
    return BiPoly._raw(F, [poly_scale(F, list(r), F.from_int(j)) for j, r in enumerate(f.rows) if j])
