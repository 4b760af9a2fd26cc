"""Arithmetic in GF(p^m), polynomial-basis representation.

An element with basis coefficients (c_0, ..., c_{m-1}) is encoded as the
integer ``c_0 + c_1 p + ... + c_{m-1} p^(m-1)``.  Polynomials, point sets and
codewords elsewhere in the package store these integer codes directly and
call into the owning :class:`FieldSpec` for arithmetic; :class:`FieldElement`
is a thin wrapper for scalar work and for printing.

Fields with q <= 2**16 get exponential/logarithm tables on construction, so
multiplication and inversion are two list lookups.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

__all__ = [
    "CONWAY",
    "FieldElement",
    "FieldSpec",
    "GF",
    "enumerate_field",
    "is_prime",
    "prime_power",
]

# Conway polynomials, coefficients ascending (constant term first).
CONWAY = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1),
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
}

TABLE_LIMIT = 1 << 16
ADD_TABLE_LIMIT = 1 << 10


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p**m, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


def _gfp_poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    # remainder of a by b over GF(p); b has nonzero leading coefficient
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv_lead % p
        if c:
            for t in range(db + 1):
                a[k - db + t] = (a[k - db + t] - c * b[t]) % p
    r = a[:db]
    while r and r[-1] == 0:
        r.pop()
    return r


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    # trial division by every monic polynomial of degree 1..m//2
    m = len(modulus) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _gfp_poly_rem(list(modulus), list(low) + [1], p):
                return False
    return True


class FieldSpec:
    """The finite field GF(p^m) with an explicit monic irreducible modulus.

    Arithmetic methods take and return integer codes in ``range(q)``.
    Build instances through :func:`GF` to share tables between callers.
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = CONWAY.get((p, m)) or _first_irreducible(p, m)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if any(not 0 <= c < p for c in modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {p})")
        if not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self.char2 = p == 2
        self.prime = m == 1
        self._mod_bits = _bits(modulus)
        self._pows = [p**s for s in range(m + 1)]
        self.exp = self.log = None
        self.add_table = None
        self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _mulmod(self, x: int, y: int) -> int:
        # schoolbook product of basis polynomials, reduced by the modulus
        if self.prime:
            return x * y % self.p
        p, m = self.p, self.m
        if self.char2:
            r = 0
            while y:
                if y & 1:
                    r ^= x
                y >>= 1
                x <<= 1
                if x >> m & 1:
                    x ^= self._mod_bits
            return r
        a, b = self.digits(x), self.digits(y)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        prod = [c % p for c in prod]
        return self.from_digits(_gfp_poly_rem(prod, list(self.modulus), p))

    def _build_tables(self):
        q = self.q
        if q > TABLE_LIMIT:
            return
        g = self._find_generator()
        exp = [0] * (2 * q)
        log = [0] * q
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._mulmod(x, g)
        for k in range(q - 1, 2 * q):
            exp[k] = exp[k - (q - 1)]
        self.exp, self.log, self.generator = exp, log, g
        self.np_exp = np.array(exp, dtype=np.int64)
        self.np_log = np.array(log, dtype=np.int64)
        self.neg_table = [self.neg(x) for x in range(q)]
        if not self.char2 and not self.prime and q <= ADD_TABLE_LIMIT:
            self.add_table = [[self._add_digits(x, y) for y in range(q)] for x in range(q)]

    def _find_generator(self) -> int:
        q = self.q
        if q == 2:
            return 1
        factors = _prime_factors(q - 1)
        for g in range(2, q):
            if all(self._pow_slow(g, (q - 1) // f) != 1 for f in factors):
                return g
        raise AssertionError("no generator found")  # pragma: no cover

    def _pow_slow(self, x: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mulmod(r, x)
            x = self._mulmod(x, x)
            e >>= 1
        return r

    # -- encoding -------------------------------------------------------------

    def digits(self, x: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            x, d = divmod(x, p)
            out.append(d)
        return out

    def from_digits(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError(f"expected at most {self.m} coefficients")
        return sum((c % self.p) * self._pows[s] for s, c in enumerate(coeffs))

    def __call__(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            self._check(x.field)
            return x
        x = int(x)
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not the code of an element of GF({self.q})")
        return FieldElement(self, x)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, x) for x in range(self.q)]

    def _check(self, other: FieldSpec):
        if other is not self and other != self:
            raise TypeError(f"field mismatch: {self} vs {other}")

    # -- arithmetic on integer codes -------------------------------------------

    def _add_digits(self, x: int, y: int) -> int:
        p = self.p
        r, s = 0, 1
        while x or y:
            x, dx = divmod(x, p)
            y, dy = divmod(y, p)
            r += (dx + dy) % p * s
            s *= p
        return r

    def add(self, x: int, y: int) -> int:
        if self.char2:
            return x ^ y
        if self.prime:
            return (x + y) % self.p
        if self.add_table is not None:
            return self.add_table[x][y]
        return self._add_digits(x, y)

    def neg(self, x: int) -> int:
        if self.char2:
            return x
        if self.prime:
            return -x % self.p
        p = self.p
        r, s = 0, 1
        while x:
            x, d = divmod(x, p)
            r += -d % p * s
            s *= p
        return r

    def sub(self, x: int, y: int) -> int:
        if self.char2:
            return x ^ y
        if self.prime:
            return (x - y) % self.p
        return self.add(x, self.neg_table[y] if self.exp is not None else self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if not x or not y:
            return 0
        if self.exp is not None:
            return self.exp[self.log[x] + self.log[y]]
        return self._mulmod(x, y)

    def inv(self, x: int) -> int:
        if not x:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.exp is not None:
            return self.exp[self.q - 1 - self.log[x]]
        return self._pow_slow(x, self.q - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        if not x:
            return 0 if e else 1
        if self.exp is not None:
            return self.exp[self.log[x] * e % (self.q - 1)]
        return self._pow_slow(x, e)

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(p) -> GF(q)."""
        return n % self.p

    # -- vectorised helpers (numpy int64 arrays of codes) ---------------------

    def vadd(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        if self.char2:
            return u ^ v
        if self.prime:
            return (u + v) % self.p
        r = np.zeros_like(u)
        for s in self._pows[:-1]:
            r += ((u // s % self.p + v // s % self.p) % self.p) * s
        return r

    def vneg(self, u: np.ndarray) -> np.ndarray:
        if self.char2:
            return u
        if self.prime:
            return -u % self.p
        r = np.zeros_like(u)
        for s in self._pows[:-1]:
            r += (-(u // s % self.p) % self.p) * s
        return r

    def vscale(self, c: int, u: np.ndarray) -> np.ndarray:
        if not c:
            return np.zeros_like(u)
        if self.exp is not None:
            r = self.np_exp[self.np_log[u] + self.log[c]]
            r[u == 0] = 0
            return r
        return np.array([self._mulmod(c, int(x)) for x in u], dtype=np.int64)

    def vmul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        if self.exp is not None:
            r = self.np_exp[self.np_log[u] + self.np_log[v]]
            r[(u == 0) | (v == 0)] = 0
            return r
        return np.array([self.mul(int(x), int(y)) for x, y in zip(u, v)], dtype=np.int64)

    # -- dunder -----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        # any monic linear modulus gives the same prime field
        return (self.p, self.m, self.modulus if self.m > 1 else None)

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


def _bits(coeffs) -> int:
    return sum(1 << s for s, c in enumerate(coeffs) if c)


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@functools.lru_cache(maxsize=None)
def _first_irreducible(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=m):
        cand = tuple(low) + (1,)
        if cand[0] and _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@functools.lru_cache(maxsize=None)
def _gf_cached(p: int, m: int, modulus) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def GF(q: int, modulus=None) -> FieldSpec:
    """Field with q elements, using the built-in Conway modulus when known.

    >>> F = GF(4)
    >>> F.mul(2, 2)     # w * w = w + 1
    3
    """
    p, m = prime_power(q)
    if modulus is None:
        modulus = CONWAY.get((p, m)) or _first_irreducible(p, m)
    return _gf_cached(p, m, tuple(int(c) for c in modulus))


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    """All q elements in ascending integer-code order."""
    return spec.elements()


@functools.total_ordering
class FieldElement:
    """An element of a :class:`FieldSpec`, with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.digits(self.value))

    def to_int(self) -> int:
        return self.value

    def __int__(self):
        return self.value

    __index__ = __int__

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            self.field._check(other.field)
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.field, self.field.add(self.value, y))

    __radd__ = __add__

    def __sub__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.field, self.field.sub(self.value, y))

    def __rsub__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.field, self.field.sub(y, self.value))

    def __mul__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.field, self.field.mul(self.value, y))

    __rmul__ = __mul__

    def __truediv__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.field, self.field.div(self.value, y))

    def __rtruediv__(self, other):
        y = self._coerce(other)
        if y is NotImplemented:
            return y
        return FieldElement(self.field, self.field.div(y, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        return self.value < int(other)

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"{self.field}({self.value})"
