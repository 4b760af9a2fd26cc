"""Dense univariate polynomials over a FieldSpec, and subproduct-tree algorithms.

The kernels (``poly_*``) work on plain lists of integer codes, lowest degree
first, with no trailing zeros; the empty list is the zero polynomial.
:class:`UniPoly` wraps an immutable tuple of codes for the public API.

Multiplication is schoolbook below ``KARATSUBA_CUTOFF`` coefficients and
Karatsuba above.  Long division switches to Newton iteration on the reversed
divisor above ``DIV_CUTOFF``, so remaindering down a subproduct tree costs
O(M(n) log n) rather than O(n^2).
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

from .field import FieldElement, FieldSpec

KARATSUBA_CUTOFF = 32
DIV_CUTOFF = 48
MPE_LEAF = 8

__all__ = [
    "PartitionTree",
    "UniPoly",
    "build_partition_tree",
    "formal_derivative",
    "mul",
    "poly_add",
    "poly_deriv",
    "poly_divmod",
    "poly_eval",
    "poly_mul",
    "poly_rem",
    "poly_scale",
    "poly_sub",
    "tree_vanish",
    "univariate_interp",
    "univariate_mpe",
]


def trim(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    return a


# -- coefficient kernels, one flavour per kind of field ------------------------


class _Char2Ops:
    # GF(2^m) with log tables: addition is xor
    def __init__(self, F: FieldSpec):
        self.exp, self.log = F.exp, F.log

    def school(self, a, b):
        exp, log = self.exp, self.log
        r = [0] * (len(a) + len(b) - 1)
        lb = [(j, log[y]) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                lx = log[x]
                for j, ly in lb:
                    r[i + j] ^= exp[lx + ly]
        return r

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        r = list(a)
        for i, y in enumerate(b):
            r[i] ^= y
        return r

    def add_into(self, r, a, shift):
        for i, y in enumerate(a, shift):
            r[i] ^= y

    sub_into = add_into

    def finish(self, r):
        return r

    def prep(self, b):
        log = self.log
        return [(t, log[y]) for t, y in enumerate(b) if y]

    def submul_into(self, r, c, pb, shift):
        exp = self.exp
        lc = self.log[c]
        for t, lt in pb:
            r[shift + t] ^= exp[lc + lt]


class _PrimeOps:
    # GF(p): accumulate over the integers, reduce once at the end
    def __init__(self, F: FieldSpec):
        self.p = F.p

    def school(self, a, b):
        r = [0] * (len(a) + len(b) - 1)
        nb = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                for j, y in nb:
                    r[i + j] += x * y
        return r

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        r = list(a)
        for i, y in enumerate(b):
            r[i] += y
        return r

    def add_into(self, r, a, shift):
        for i, y in enumerate(a, shift):
            r[i] += y

    def sub_into(self, r, a, shift):
        for i, y in enumerate(a, shift):
            r[i] -= y

    def finish(self, r):
        p = self.p
        return [x % p for x in r]

    def prep(self, b):
        return [(t, y) for t, y in enumerate(b) if y]

    def submul_into(self, r, c, pb, shift):
        p = self.p
        for t, y in pb:
            r[shift + t] = (r[shift + t] - c * y) % p


class _GenericOps:
    # anything else: go through the field's scalar methods
    def __init__(self, F: FieldSpec):
        self.F = F

    def school(self, a, b):
        F = self.F
        add, fmul = F.add, F.mul
        r = [0] * (len(a) + len(b) - 1)
        nb = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                for j, y in nb:
                    r[i + j] = add(r[i + j], fmul(x, y))
        return r

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        add = self.F.add
        r = list(a)
        for i, y in enumerate(b):
            r[i] = add(r[i], y)
        return r

    def add_into(self, r, a, shift):
        add = self.F.add
        for i, y in enumerate(a, shift):
            r[i] = add(r[i], y)

    def sub_into(self, r, a, shift):
        sub = self.F.sub
        for i, y in enumerate(a, shift):
            r[i] = sub(r[i], y)

    def finish(self, r):
        return r

    def prep(self, b):
        return [(t, y) for t, y in enumerate(b) if y]

    def submul_into(self, r, c, pb, shift):
        F = self.F
        sub, fmul = F.sub, F.mul
        for t, y in pb:
            r[shift + t] = sub(r[shift + t], fmul(c, y))


def _ops(F: FieldSpec):
    ops = F.__dict__.get("_poly_ops")
    if ops is None:
        if F.char2 and F.exp is not None:
            ops = _Char2Ops(F)
        elif F.prime:
            ops = _PrimeOps(F)
        else:
            ops = _GenericOps(F)
        F._poly_ops = ops
    return ops


def _kmul(ops, a, b):
    la, lb = len(a), len(b)
    if la > lb:
        a, b, la, lb = b, a, lb, la
    if la < KARATSUBA_CUTOFF:
        return ops.school(a, b)
    if 2 * la <= lb:
        r = [0] * (la + lb - 1)
        for s in range(0, lb, la):
            ops.add_into(r, _kmul(ops, a, b[s : s + la]), s)
        return r
    k = lb // 2
    a0, a1 = a[:k], a[k:]
    b0, b1 = b[:k], b[k:]
    z0 = _kmul(ops, a0, b0)
    z2 = _kmul(ops, a1, b1)
    z1 = _kmul(ops, ops.add(a0, a1), ops.add(b0, b1))
    r = [0] * (la + lb - 1)
    ops.add_into(r, z0, 0)
    ops.add_into(r, z2, 2 * k)
    ops.add_into(r, z1, k)
    ops.sub_into(r, z0, k)
    ops.sub_into(r, z2, k)
    return r


# -- list-level polynomial arithmetic -----------------------------------------


def poly_mul(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    ops = _ops(F)
    return trim(ops.finish(_kmul(ops, a, b)))


def poly_add(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    if F.char2:
        for i, y in enumerate(b):
            r[i] ^= y
    else:
        add = F.add
        for i, y in enumerate(b):
            r[i] = add(r[i], y)
    return trim(r)


def poly_sub(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    if F.char2:
        return poly_add(F, a, b)
    r = list(a) + [0] * (len(b) - len(a))
    sub = F.sub
    for i, y in enumerate(b):
        r[i] = sub(r[i], y)
    return trim(r)


def poly_scale(F: FieldSpec, a: list[int], c: int) -> list[int]:
    if not c:
        return []
    if c == 1:
        return list(a)
    fmul = F.mul
    return [fmul(c, x) for x in a]


def poly_eval(F: FieldSpec, a: list[int], x: int) -> int:
    """Horner evaluation of a at the code x."""
    if not x:
        return a[0] if a else 0
    if F.char2 and F.exp is not None:
        exp, log = F.exp, F.log
        lx = log[x]
        r = 0
        for c in reversed(a):
            r = (exp[log[r] + lx] if r else 0) ^ c
        return r
    add, fmul = F.add, F.mul
    r = 0
    for c in reversed(a):
        r = add(fmul(r, x), c)
    return r


def poly_deriv(F: FieldSpec, a: list[int]) -> list[int]:
    fmul, from_int = F.mul, F.from_int
    return trim([fmul(from_int(i), c) for i, c in enumerate(a) if i])


def _divmod_school(F: FieldSpec, a: list[int], b: list[int]):
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    ops = _ops(F)
    r = list(a)
    lead = b[-1]
    lead_inv = F.inv(lead) if lead != 1 else 1
    pb = ops.prep(b[:-1])
    qt = [0] * (len(a) - db)
    fmul = F.mul
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k]
        if c:
            if lead_inv != 1:
                c = fmul(c, lead_inv)
            qt[k - db] = c
            ops.submul_into(r, c, pb, k - db)
    return trim(qt), trim(r[:db])


def _inv_series(F: FieldSpec, g: list[int], k: int) -> list[int]:
    # h with g*h = 1 mod X^k, by Newton iteration; requires g[0] != 0
    h = [F.inv(g[0])]
    n = 1
    while n < k:
        n = min(2 * n, k)
        e = poly_mul(F, g[:n], h)[:n]
        e = e + [0] * (n - len(e))
        e[0] = F.sub(e[0], 1)
        corr = poly_mul(F, h, trim(e))[:n]
        h = poly_sub(F, h, corr)[:n]
    return h + [0] * (k - len(h))


def _divmod_newton(F: FieldSpec, a, b, binv):
    n, d = len(a) - 1, len(b) - 1
    k = n - d + 1
    qrev = poly_mul(F, a[::-1][:k], binv[:k])[:k]
    qrev = qrev + [0] * (k - len(qrev))
    qt = trim(qrev[::-1])
    r = poly_sub(F, a[:d], poly_mul(F, qt, b)[:d])
    return qt, r


def poly_divmod(F: FieldSpec, a: list[int], b: list[int]):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    d = len(b) - 1
    if len(a) <= d:
        return [], list(a)
    k = len(a) - d
    if d < DIV_CUTOFF or k < DIV_CUTOFF:
        return _divmod_school(F, a, b)
    return _divmod_newton(F, a, b, _inv_series(F, b[::-1], k))


def poly_rem(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    return poly_divmod(F, a, b)[1]


# -- public polynomial type ---------------------------------------------------


class UniPoly:
    """Immutable univariate polynomial; ``coeffs`` ascending, trailing-zero free."""

    __slots__ = ("field", "c")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        self.field = field
        self.c = tuple(trim([int(x) for x in coeffs]))

    @classmethod
    def _raw(cls, field, coeffs):
        obj = cls.__new__(cls)
        obj.field = field
        obj.c = tuple(coeffs)
        return obj

    @classmethod
    def from_roots(cls, field: FieldSpec, roots) -> UniPoly:
        acc = [1]
        for r in roots:
            acc = poly_mul(field, acc, [field.neg(int(r)), 1])
        return cls._raw(field, acc)

    @classmethod
    def x(cls, field: FieldSpec) -> UniPoly:
        return cls._raw(field, (0, 1))

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, x) for x in self.c)

    @property
    def degree(self):
        """Degree, with ``-math.inf`` for the zero polynomial."""
        return len(self.c) - 1 if self.c else -math.inf

    def is_zero(self) -> bool:
        return not self.c

    def _other(self, g) -> list[int]:
        if isinstance(g, UniPoly):
            self.field._check(g.field)
            return list(g.c)
        if isinstance(g, (int, FieldElement)):
            return trim([int(g) if isinstance(g, FieldElement) else self.field.from_int(g)])
        return NotImplemented

    def __add__(self, g):
        b = self._other(g)
        if b is NotImplemented:
            return b
        return UniPoly._raw(self.field, poly_add(self.field, list(self.c), b))

    __radd__ = __add__

    def __sub__(self, g):
        b = self._other(g)
        if b is NotImplemented:
            return b
        return UniPoly._raw(self.field, poly_sub(self.field, list(self.c), b))

    def __rsub__(self, g):
        b = self._other(g)
        if b is NotImplemented:
            return b
        return UniPoly._raw(self.field, poly_sub(self.field, b, list(self.c)))

    def __neg__(self):
        return UniPoly._raw(self.field, [self.field.neg(x) for x in self.c])

    def __mul__(self, g):
        b = self._other(g)
        if b is NotImplemented:
            return b
        return UniPoly._raw(self.field, poly_mul(self.field, list(self.c), b))

    __rmul__ = __mul__

    def __divmod__(self, g):
        b = self._other(g)
        if b is NotImplemented:
            return b
        qt, r = poly_divmod(self.field, list(self.c), b)
        return UniPoly._raw(self.field, qt), UniPoly._raw(self.field, r)

    def __floordiv__(self, g):
        return divmod(self, g)[0]

    def __mod__(self, g):
        return divmod(self, g)[1]

    def __call__(self, x) -> FieldElement:
        return FieldElement(self.field, poly_eval(self.field, list(self.c), int(x)))

    def derivative(self) -> UniPoly:
        return UniPoly._raw(self.field, poly_deriv(self.field, list(self.c)))

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.c == other.c
        if isinstance(other, int) and not other:
            return not self.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __len__(self):
        return len(self.c)

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i, x in enumerate(self.c):
            if not x:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if not mono:
                terms.append(str(x))
            else:
                terms.append(mono if x == 1 else f"{x}*{mono}")
        return " + ".join(reversed(terms))


def mul(f: UniPoly, g: UniPoly) -> UniPoly:
    return f * g


def formal_derivative(f: UniPoly) -> UniPoly:
    return f.derivative()


# -- balanced partition trees -------------------------------------------------


class TreeNode:
    __slots__ = ("points", "left", "right", "poly", "_inv")

    def __init__(self, points: tuple[int, ...]):
        self.points = points
        self.left = self.right = None
        self.poly = None
        self._inv = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def inverse(self, F: FieldSpec, k: int) -> list[int]:
        # power series inverse of the reversed vanishing polynomial, cached
        if self._inv is None or len(self._inv) < k:
            self._inv = _inv_series(F, self.poly[::-1], max(k, len(self.points) + 1))
        return self._inv

    def __repr__(self):
        return f"TreeNode({set(self.points)})"


class PartitionTree:
    """Balanced binary partition tree of a set of field elements.

    Each internal node is split into the first ``ceil(n/2)`` elements (in
    ascending code order) and the rest.  Nodes are identified by the tuple of
    their element codes.
    """

    def __init__(self, field: FieldSpec, elements: Iterable):
        pts = tuple(sorted({int(x) for x in elements}))
        if not pts:
            raise ValueError("cannot build a partition tree of the empty set")
        self.field = field
        self.root = self._build(pts)
        self._denoms = None
        self._index = {node.points: node for node in self.nodes()}

    @staticmethod
    def _build(pts):
        root = TreeNode(pts)
        stack = [root]
        while stack:
            node = stack.pop()
            n = len(node.points)
            if n > 1:
                h = (n + 1) // 2
                node.left = TreeNode(node.points[:h])
                node.right = TreeNode(node.points[h:])
                stack += [node.left, node.right]
        return root

    def nodes(self):
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if not node.is_leaf:
                stack += [node.right, node.left]

    def node(self, subset) -> TreeNode:
        key = tuple(sorted({int(x) for x in subset}))
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"{set(key)} is not a node of this partition tree") from None

    def __contains__(self, subset) -> bool:
        return tuple(sorted({int(x) for x in subset})) in self._index

    def children(self, subset) -> tuple[tuple[int, ...], tuple[int, ...]]:
        node = self.node(subset)
        if node.is_leaf:
            return ()
        return node.left.points, node.right.points

    @property
    def depth(self) -> int:
        d, node = 0, self.root
        while not node.is_leaf:
            node = node.left
            d += 1
        return d

    def __len__(self):
        return len(self._index)

    def ensure_vanishing(self) -> PartitionTree:
        """Fill in every node's vanishing polynomial, bottom-up."""
        if self.root.poly is not None:
            return self
        F = self.field
        order = list(self.nodes())
        for node in reversed(order):
            if node.is_leaf:
                node.poly = [F.neg(node.points[0]), 1]
            else:
                node.poly = poly_mul(F, node.left.poly, node.right.poly)
        return self

    @property
    def vanishing(self) -> list[int]:
        return self.ensure_vanishing().root.poly

    # -- algorithms -----------------------------------------------------------

    def evaluate(self, h: list[int]) -> dict[int, int]:
        """Values of the coefficient list h at every element of the root set."""
        self.ensure_vanishing()
        F = self.field
        out: dict[int, int] = {}
        if len(h) > len(self.root.points):
            h = _rem_node(F, h, self.root)
        _mpe_down(F, h, self.root, out)
        return out

    def denominators(self) -> dict[int, int]:
        """prod_{b != a}(a - b) for each a, read off the derivative of the root polynomial."""
        if self._denoms is None:
            self._denoms = self.evaluate(poly_deriv(self.field, self.vanishing))
        return self._denoms

    def interpolate(self, values: Mapping[int, int]) -> list[int]:
        """The unique polynomial of degree < |S| taking the given values."""
        F = self.field
        denom = self.denominators()
        weights = {x: [F.div(values[x], denom[x])] for x in self.root.points}
        rows = combine_rows(F, self.root, weights)
        return rows[0] if rows else []


def _rem_node(F: FieldSpec, h: list[int], node: TreeNode) -> list[int]:
    U = node.poly
    d = len(U) - 1
    if len(h) <= d:
        return h
    k = len(h) - d
    if d < DIV_CUTOFF or k < DIV_CUTOFF:
        return _divmod_school(F, h, U)[1]
    return _divmod_newton(F, h, U, node.inverse(F, k))[1]


def _mpe_down(F: FieldSpec, h: list[int], node: TreeNode, out: dict):
    pts = node.points
    if len(h) <= 1:
        c = h[0] if h else 0
        for x in pts:
            out[x] = c
        return
    if len(pts) <= MPE_LEAF:
        for x in pts:
            out[x] = poly_eval(F, h, x)
        return
    _mpe_down(F, _rem_node(F, h, node.left), node.left, out)
    _mpe_down(F, _rem_node(F, h, node.right), node.right, out)


def combine_rows(F: FieldSpec, node: TreeNode, V: Mapping[int, list[int]], U=None) -> list[list[int]]:
    """Sum over a in node of V[a](Y) * prod_{a' != a}(X - a'), as rows in Y.

    Row j of the result is the X-polynomial multiplying Y^j.  Child vanishing
    polynomials come from ``U`` (keyed by node tuple) when given, otherwise
    from the nodes themselves.
    """
    if node.is_leaf:
        return [[c] if c else [] for c in V[node.points[0]]]
    r1 = combine_rows(F, node.left, V, U)
    r2 = combine_rows(F, node.right, V, U)
    if U is None:
        u1, u2 = node.left.poly, node.right.poly
    else:
        u1, u2 = list(U[node.left.points].c), list(U[node.right.points].c)
    out = []
    for j in range(max(len(r1), len(r2))):
        s = poly_mul(F, r1[j], u2) if j < len(r1) else []
        t = poly_mul(F, r2[j], u1) if j < len(r2) else []
        out.append(poly_add(F, s, t))
    while out and not out[-1]:
        out.pop()
    return out


# -- public entry points ---------------------------------------------------


def build_partition_tree(S, field: FieldSpec | None = None) -> PartitionTree:
    S = list(S)
    if not S:
        raise ValueError("cannot build a partition tree of the empty set")
    if field is None:
        field = _field_of(S)
    return PartitionTree(field, S)


def tree_vanish(T: PartitionTree) -> dict[tuple[int, ...], UniPoly]:
    """Lookup from every node of T to prod_{a in node}(X - a)."""
    T.ensure_vanishing()
    return {node.points: UniPoly._raw(T.field, node.poly) for node in T.nodes()}


def univariate_mpe(h: UniPoly, S, tree: PartitionTree | None = None) -> dict[int, int]:
    """Evaluate h at every element of S by remaindering down a subproduct tree.

    Returns a dict keyed by element code.
    """
    if tree is None:
        tree = PartitionTree(h.field, S)
    return tree.evaluate(list(h.c))


def univariate_interp(S, values, field: FieldSpec | None = None) -> UniPoly:
    """Interpolate values on S; ``values`` is a mapping or a sequence aligned with S."""
    S = list(S)
    if field is None:
        field = _field_of(S + list(values.values() if isinstance(values, Mapping) else values))
    if not isinstance(values, Mapping):
        values = dict(zip((int(x) for x in S), values))
    values = {int(k): int(v) for k, v in values.items()}
    tree = PartitionTree(field, S)
    return UniPoly._raw(field, tree.interpolate(values))


def _field_of(items) -> FieldSpec:
    for x in items:
        if isinstance(x, FieldElement):
            return x.field
    raise TypeError("pass field= when elements are given as integer codes")
