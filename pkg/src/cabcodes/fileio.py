"""Plain-text formats.  Elements are written as decimal integer codes.

Blank lines and lines starting with ``#`` are ignored everywhere.

field line   ``field p m c_0 ... c_m``      modulus coefficients, ascending
curve file   field line, ``a b``, then one ``i j c`` line per term of H
points file  one ``x y`` line per point, in coordinate order
unipoly      ``deg c_0 ... c_deg`` (``-1`` for zero)
GB file      ``a b t``, then per element a term count followed by ``i j c`` lines
code file    ``curve <path>`` or ``curve inline`` ... ``end``;
             ``points <path>`` or ``points inline N`` + N point lines;
             ``m <int>``; ``bhat k`` + k ``i j`` lines; optional ``gb <path>``
vectors      whitespace-separated codes, one vector per line
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

from .bivar import BiPoly, Monomial, WeightedOrder
from .codec import CabCode, new_code
from .curve import CabCurve, validate_cab
from .errors import ParseError
from .field import FieldSpec, _gf_cached, is_prime
from .geometry import PointSet
from .upoly import UniPoly
from .vanish import GroebnerBasis

__all__ = [
    "format_bipoly_terms",
    "format_code",
    "format_curve",
    "format_field",
    "format_gb",
    "format_points",
    "format_unipoly",
    "format_vectors",
    "parse_code",
    "parse_curve",
    "parse_field",
    "parse_gb",
    "parse_points",
    "parse_unipoly",
    "parse_vectors",
    "read_code",
    "read_curve",
    "read_vectors",
]


class _Lines:
    # numbered, comment-free lines with a cursor
    def __init__(self, text: str, path: str | None = None, start: int = 1):
        self.items = []
        for k, raw in enumerate(text.splitlines(), start):
            s = raw.split("#", 1)[0].strip()
            if s:
                self.items.append((k, s))
        self.pos = 0
        self.path = path

    def error(self, msg: str, line: int | None = None):
        if line is None:
            line = self.items[min(self.pos, len(self.items) - 1)][0] if self.items else None
        return ParseError(msg, line, self.path)

    def next(self, what: str) -> tuple[int, list[str]]:
        if self.pos >= len(self.items):
            raise ParseError(f"unexpected end of input, expected {what}", None, self.path)
        k, s = self.items[self.pos]
        self.pos += 1
        return k, s.split()

    def ints(self, what: str, count: int | None = None) -> tuple[int, list[int]]:
        k, toks = self.next(what)
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"expected integers for {what}, got {' '.join(toks)!r}", k, self.path) from None
        if count is not None and len(vals) != count:
            raise ParseError(f"expected {count} integers for {what}, got {len(vals)}", k, self.path)
        return k, vals

    def done(self) -> bool:
        return self.pos >= len(self.items)


# -- field -------------------------------------------------------------------------


def format_field(F: FieldSpec) -> str:
    return "field {} {} {}".format(F.p, F.m, " ".join(map(str, F.modulus)))


def _field_from(lines: _Lines) -> FieldSpec:
    k, toks = lines.next("field line")
    if toks[0] != "field":
        raise ParseError("expected a 'field p m c_0 ... c_m' line", k, lines.path)
    try:
        vals = [int(t) for t in toks[1:]]
    except ValueError:
        raise ParseError("field line must contain integers", k, lines.path) from None
    if len(vals) < 2:
        raise ParseError("field line needs p and m", k, lines.path)
    p, m, mod = vals[0], vals[1], vals[2:]
    if not is_prime(p):
        raise ParseError(f"characteristic {p} is not prime", k, lines.path)
    if len(mod) != m + 1:
        raise ParseError(f"field line needs {m + 1} modulus coefficients, got {len(mod)}", k, lines.path)
    try:
        return _gf_cached(p, m, tuple(mod))
    except ValueError as exc:
        raise ParseError(str(exc), k, lines.path) from None


def parse_field(text: str) -> FieldSpec:
    return _field_from(_Lines(text))


def _element(lines: _Lines, F: FieldSpec, v: int, k: int) -> int:
    if not 0 <= v < F.q:
        raise ParseError(f"{v} is not an element code of GF({F.q})", k, lines.path)
    return v


# -- polynomials -------------------------------------------------------------------


def format_unipoly(f: UniPoly) -> str:
    return " ".join(map(str, [len(f.c) - 1, *f.c]))


def parse_unipoly(text: str, F: FieldSpec) -> UniPoly:
    lines = _Lines(text)
    k, vals = lines.ints("unipoly")
    if not vals or vals[0] < -1 or len(vals) != vals[0] + 2:
        raise ParseError("unipoly line must be 'deg c_0 ... c_deg'", k)
    coeffs = [_element(lines, F, v, k) for v in vals[1:]]
    if coeffs and not coeffs[-1]:
        raise ParseError("leading coefficient must be nonzero", k)
    return UniPoly(F, coeffs)


def format_bipoly_terms(f: BiPoly) -> list[str]:
    return [f"{i} {j} {c}" for i, j, c in f.terms()]


def _terms_from(lines: _Lines, F: FieldSpec, count: int | None) -> BiPoly:
    terms = []
    seen = set()
    while (count is None and not lines.done()) or (count is not None and len(terms) < count):
        k, (i, j, c) = lines.ints("term 'i j c'", 3)
        if i < 0 or j < 0:
            raise ParseError("exponents must be non-negative", k, lines.path)
        if (i, j) in seen:
            raise ParseError(f"repeated monomial X^{i} Y^{j}", k, lines.path)
        seen.add((i, j))
        terms.append((i, j, _element(lines, F, c, k)))
    return BiPoly.from_terms(F, terms)


# -- curves ------------------------------------------------------------------------


def format_curve(C: CabCurve) -> str:
    out = [format_field(C.field), f"{C.a} {C.b}", *format_bipoly_terms(C.H)]
    return "\n".join(out) + "\n"


def parse_curve(text: str, path: str | None = None, start: int = 1) -> CabCurve:
    """Parse and validate; raises ParseError for format problems and
    CurveError when H is not a C_ab polynomial."""
    lines = _Lines(text, path, start)
    F = _field_from(lines)
    k, (a, b) = lines.ints("'a b' line", 2)
    H = _terms_from(lines, F, None)
    if H.is_zero():
        raise ParseError("curve has no terms", k, path)
    if (H.deg_y, H.deg_x) != (a, b):
        raise ParseError(f"header says a={a} b={b} but H has deg_Y={H.deg_y}, deg_X={H.deg_x}", k, path)
    return validate_cab(H)


def read_curve(path: str) -> CabCurve:
    with open(path) as fh:
        return parse_curve(fh.read(), path)


# -- points ------------------------------------------------------------------------


def format_points(P: PointSet) -> str:
    return "".join(f"{x} {y}\n" for x, y in P.points)


def _points_from(lines: _Lines, F: FieldSpec, count: int | None) -> PointSet:
    pts, seen = [], set()
    while (count is None and not lines.done()) or (count is not None and len(pts) < count):
        k, (x, y) = lines.ints("point 'x y'", 2)
        pt = (_element(lines, F, x, k), _element(lines, F, y, k))
        if pt in seen:
            raise ParseError(f"duplicate point {pt}", k, lines.path)
        seen.add(pt)
        pts.append(pt)
    return PointSet(F, pts, keep_order=True)


def parse_points(text: str, F: FieldSpec, path: str | None = None) -> PointSet:
    return _points_from(_Lines(text, path), F, None)


# -- Groebner bases ----------------------------------------------------------------


def format_gb(G: GroebnerBasis) -> str:
    out = [f"{G.order.a} {G.order.b} {G.t}"]
    for g in G.elements:
        terms = format_bipoly_terms(g)
        out.append(str(len(terms)))
        out += terms
    return "\n".join(out) + "\n"


def parse_gb(text: str, F: FieldSpec, n_x: int, path: str | None = None) -> GroebnerBasis:
    lines = _Lines(text, path)
    k, (a, b, t) = lines.ints("'a b t' header", 3)
    if a < 1 or b < 1 or t < 1:
        raise ParseError("header values must be positive", k, path)
    elements = []
    for _ in range(t):
        k, (cnt,) = lines.ints("term count", 1)
        g = _terms_from(lines, F, cnt)
        if g.is_zero():
            raise ParseError("basis element is zero", k, path)
        elements.append(g)
    if not lines.done():
        raise lines.error("trailing content after the last basis element")
    return GroebnerBasis(WeightedOrder(a, b), tuple(elements), n_x)


# -- codes -------------------------------------------------------------------------


def format_code(code: CabCode, gb_path: str | None = None) -> str:
    out = ["curve inline", format_curve(code.curve).rstrip("\n"), "end"]
    out.append(f"points inline {code.n}")
    out.append(format_points(code.points).rstrip("\n"))
    out.append(f"m {code.m}")
    out.append(f"bhat {code.k}")
    out += [f"{i} {j}" for i, j in code.Bhat]
    if gb_path is not None:
        out.append(f"gb {gb_path}")
    return "\n".join(x for x in out if x) + "\n"


def parse_code(text: str, path: str | None = None, load_gb: bool = True) -> CabCode:
    """Parse a code file.  Relative paths inside it resolve against its directory."""
    base = os.path.dirname(os.path.abspath(path)) if path else os.getcwd()
    lines = _Lines(text, path)
    raw = text.splitlines()
    curve = points = m = bhat = None
    gb_path = None

    def resolve(p):
        return p if os.path.isabs(p) else os.path.join(base, p)

    def slurp(p, k):
        try:
            with open(resolve(p)) as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {p}: {exc.strerror}", k, path) from None

    while not lines.done():
        k, toks = lines.next("code entry")
        key = toks[0]
        if key == "curve" and len(toks) == 2 and toks[1] == "inline":
            start = lines.pos
            while True:
                if lines.done():
                    raise ParseError("'curve inline' block has no 'end'", k, path)
                k2, t2 = lines.next("end")
                if t2 == ["end"]:
                    break
            first, last = lines.items[start][0], k2
            body = "\n".join(raw[first - 1 : last - 1])
            curve = parse_curve(body, path, first)
        elif key == "curve" and len(toks) == 2:
            curve = parse_curve(slurp(toks[1], k), resolve(toks[1]))
        elif key == "points":
            if curve is None:
                raise ParseError("'points' must come after 'curve'", k, path)
            if len(toks) == 3 and toks[1] == "inline":
                try:
                    cnt = int(toks[2])
                except ValueError:
                    raise ParseError("point count must be an integer", k, path) from None
                points = _points_from(lines, curve.field, cnt)
            elif len(toks) == 2:
                points = parse_points(slurp(toks[1], k), curve.field, resolve(toks[1]))
            else:
                raise ParseError("expected 'points <path>' or 'points inline N'", k, path)
        elif key == "m" and len(toks) == 2:
            try:
                m = int(toks[1])
            except ValueError:
                raise ParseError("m must be an integer", k, path) from None
        elif key == "bhat" and len(toks) == 2:
            try:
                cnt = int(toks[1])
            except ValueError:
                raise ParseError("bhat count must be an integer", k, path) from None
            bhat = []
            for _ in range(cnt):
                k2, (i, j) = lines.ints("monomial 'i j'", 2)
                bhat.append(Monomial(i, j))
        elif key == "gb" and len(toks) == 2:
            gb_path = toks[1]
            gb_line = k
        else:
            raise ParseError(f"unknown code entry {' '.join(toks)!r}", k, path)
    for name, val in (("curve", curve), ("points", points), ("m", m), ("bhat", bhat)):
        if val is None:
            raise ParseError(f"code file has no '{name}' entry", None, path)
    code = new_code(curve, points, m)
    if list(code.Bhat) != bhat:
        raise ParseError("bhat block does not match the information set of this code", None, path)
    if gb_path is not None and load_gb:
        code.attach_gb(parse_gb(slurp(gb_path, gb_line), curve.field, points.n_x, resolve(gb_path)))
    return code


def read_code(path: str, load_gb: bool = True) -> CabCode:
    with open(path) as fh:
        return parse_code(fh.read(), path, load_gb)


# -- vectors -----------------------------------------------------------------------


def format_vectors(vectors: Iterable[Sequence[int]]) -> str:
    return "".join(" ".join(map(str, v)) + "\n" for v in vectors)


def parse_vectors(text: str, length: int, q: int, path: str | None = None) -> list[list[int]]:
    out = []
    for k, s in _Lines(text, path).items:
        try:
            v = [int(t) for t in s.split()]
        except ValueError:
            raise ParseError("vector entries must be integers", k, path) from None
        if len(v) != length:
            raise ParseError(f"vector has length {len(v)}, expected {length}", k, path)
        if any(not 0 <= c < q for c in v):
            raise ParseError(f"vector entries must be element codes in [0, {q})", k, path)
        out.append(v)
    return out


def read_vectors(path: str, length: int, q: int) -> list[list[int]]:
    with open(path) as fh:
        return parse_vectors(fh.read(), length, q, path)
