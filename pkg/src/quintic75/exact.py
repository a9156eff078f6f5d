"""Exact scalars: rationals, finite fields F_{p^e}, the quartic field Q(b), and
integer helpers (trial-division factoring, square classes, resultants).

Every field object exposes ``zero``, ``one``, ``char`` and is callable to
coerce integers/Fractions.  Elements support ``+ - * / **`` and compare equal
to plain integers, so generic code can write ``x == 0``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

__all__ = [
    "DivisionByZero", "FieldMismatch", "FieldTooLarge", "ZeroInput", "ZeroPolynomial",
    "RationalField", "QQ", "FinField", "FFElement", "NumberField", "NFElement", "QB",
    "B_MODULUS", "SquareClass", "square_class", "factorize", "prime_factors",
    "is_prime", "resultant", "resultant_int", "roots_univariate", "to_fraction",
    "field_arithmetic", "factor_mod_p",
]


class DivisionByZero(ZeroDivisionError):
    pass


class FieldMismatch(TypeError):
    pass


class FieldTooLarge(ValueError):
    pass


class ZeroInput(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


# ---------------------------------------------------------------------------
# Rationals


class RationalField:
    """Q, backed by :class:`fractions.Fraction`."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, (FFElement, NFElement)):
            raise FieldMismatch(f"cannot coerce {x!r} into QQ")
        return Fraction(x)

    def is_square(self, x) -> bool:
        x = Fraction(x)
        if x < 0:
            return False
        return _is_square_int(x.numerator) and _is_square_int(x.denominator)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


def to_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _is_square_int(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


# ---------------------------------------------------------------------------
# Finite fields


def _poly_mulmod_p(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Product of coefficient lists (low degree first) reduced by a monic modulus."""
    e = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k] % p
        if c:
            for j in range(e):
                prod[k - e + j] -= c * mod[j]
        prod[k] = 0
    out = [c % p for c in prod[:e]]
    return out + [0] * (e - len(out))


def _polymod_p(a: list[int], mod: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    e = len(mod) - 1
    inv_lc = pow(mod[-1], -1, p)
    for k in range(len(a) - 1, e - 1, -1):
        c = a[k] * inv_lc % p
        if c:
            for j in range(e + 1):
                a[k - e + j] = (a[k - e + j] - c * mod[j]) % p
    return _trim(a[:e] if len(a) > e else a)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polygcd_p(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _polymod_p(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _x_power_mod(exponent: int, mod: Sequence[int], p: int) -> list[int]:
    e = len(mod) - 1
    result = [1] + [0] * (e - 1)
    base = _polymod_p([0, 1], mod, p)
    base = base + [0] * (e - len(base))
    while exponent:
        if exponent & 1:
            result = _poly_mulmod_p(result, base, mod, p)
        base = _poly_mulmod_p(base, base, mod, p)
        exponent >>= 1
    return result


def is_irreducible_mod_p(mod: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p (coefficients low degree first)."""
    n = len(mod) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    if mod[0] % p == 0:
        return False
    xq = _x_power_mod(p**n, mod, p)
    if _trim([c % p for c in _sub_lists(xq, [0, 1])]):
        return False
    for r in prime_factors(n):
        h = _x_power_mod(p ** (n // r), mod, p)
        g = _polygcd_p(_sub_lists(h, [0, 1]), list(mod), p)
        if len(g) > 1:
            return False
    return True


def _sub_lists(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over F_p.

    Order: compare (c_{e-1}, ..., c_0) lexicographically.
    """
    if e == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=e):
        coeffs = tuple(reversed(tail)) + (1,)
        if is_irreducible_mod_p(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")


def _polymul_p(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _polydiv_p(a, b, p):
    """Quotient of a by b over F_p (remainder discarded)."""
    a = [c % p for c in a]
    b = _trim([c % p for c in b])
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] = (a[k + j] - c * y) % p
    return _trim(q)


def _monic_p(a, p):
    a = _trim([c % p for c in a])
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def factor_mod_p(f: Sequence[int], p: int, seed: int = 0) -> list[tuple[int, ...]]:
    """Distinct monic irreducible factors of an integer polynomial over F_p.

    Distinct-degree factorisation followed by Cantor-Zassenhaus splitting
    (trace map in characteristic 2).  Multiplicities are not reported.
    """
    f = _monic_p(list(f), p)
    if len(f) <= 1:
        return []
    df = _trim([(k * c) % p for k, c in enumerate(f)][1:])
    if df:
        g = _polygcd_p(f, df, p)
        if len(g) > 1:
            # every irreducible factor of f divides f / gcd(f, f') or gcd(f, f')
            parts = factor_mod_p(_polydiv_p(f, g, p), p, seed) + factor_mod_p(g, p, seed)
            return sorted(set(parts), key=lambda t: (len(t), t[::-1]))
    else:
        # f is a p-th power: take the p-th root coefficientwise
        return factor_mod_p([f[k] for k in range(0, len(f), p)], p, seed)
    rng = random.Random(seed * 1000003 + p)
    out = []
    rest = f
    d = 0
    while 2 * (d + 1) <= len(rest) - 1:
        d += 1
        h = _x_power_mod(p**d, rest, p)
        g = _polygcd_p(_sub_lists(h, [0, 1]), rest, p)
        if len(g) > 1:
            out.extend(_equal_degree(g, d, p, rng))
            rest = _monic_p(_polydiv_p(rest, g, p), p)
    if len(rest) > 1:
        out.append(tuple(rest))
    return sorted(set(out), key=lambda t: (len(t), t[::-1]))


def _equal_degree(g, d, p, rng) -> list[tuple[int, ...]]:
    n = len(g) - 1
    if n == d:
        return [tuple(g)]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        if not _trim(list(a)):
            continue
        if p == 2:
            t = _polymod_p(a, g, p)
            acc = list(t)
            # trace a + a^2 + ... + a^(2^(d-1)) splits g in characteristic 2
            for _ in range(d - 1):
                t = _poly_mulmod_p(t, t, g, p)
                acc = _sub_lists(acc, [-c for c in t])
            cand = _trim([c % p for c in acc])
        else:
            e = (p**d - 1) // 2
            r = [1] + [0] * (n - 1)
            base = _polymod_p(a, g, p)
            base = base + [0] * (n - len(base))
            while e:
                if e & 1:
                    r = _poly_mulmod_p(r, base, g, p)
                base = _poly_mulmod_p(base, base, g, p)
                e >>= 1
            cand = _trim([c % p for c in _sub_lists(r, [1])])
        if not cand:
            continue
        h = _polygcd_p(cand, g, p)
        if 1 < len(h) < len(g):
            other = _monic_p(_polydiv_p(g, h, p), p)
            return _equal_degree(h, d, p, rng) + _equal_degree(other, d, p, rng)


class FinField:
    """F_{p^e} = F_p[x]/(modulus).

    Elements are encoded as integers n = sum c_i p^i (c_i the coefficients
    of the residue polynomial), wrapped in :class:`FFElement`.
    """

    _cache: dict = {}

    def __new__(cls, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if modulus is not None:
            modulus = tuple(int(c) % p for c in modulus)
            e = len(modulus) - 1
        key = (p, e, modulus)
        if key in cls._cache:
            return cls._cache[key]
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be positive")
        if modulus is None:
            modulus = smallest_irreducible(p, e)
        else:
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if not is_irreducible_mod_p(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        canonical = (p, e, modulus)
        if canonical in cls._cache:
            cls._cache[key] = cls._cache[canonical]
            return cls._cache[canonical]
        self = super().__new__(cls)
        cls._cache[canonical] = self
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self.char = p
        self._log = None
        self._exp = None
        cls._cache[key] = self
        self.zero = FFElement(self, 0)
        self.one = FFElement(self, 1)
        return self

    def __reduce__(self):
        return (FinField, (self.p, self.e, self.modulus))

    # -- encoding ---------------------------------------------------------
    def digits(self, n: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.e):
            n, r = divmod(n, p)
            out.append(r)
        return out

    def encode(self, coeffs: Sequence[int]) -> int:
        n = 0
        for c in reversed(list(coeffs)):
            n = n * self.p + (c % self.p)
        return n

    def gen(self) -> "FFElement":
        """The class of x in F_p[x]/(modulus)."""
        if self.e == 1:
            return FFElement(self, (-self.modulus[0]) % self.p)
        return FFElement(self, self.p)

    def __call__(self, x) -> "FFElement":
        if isinstance(x, FFElement):
            if x.field is self:
                return x
            return self.embed(x)
        if isinstance(x, NFElement):
            raise FieldMismatch("use reduce_nf to map Q(b) into a finite field")
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {x} vanishes mod {self.p}")
            return FFElement(self, x.numerator % self.p) * FFElement(self, x.denominator % self.p).inverse()
        return FFElement(self, int(x) % self.p)

    def embed(self, x: "FFElement") -> "FFElement":
        """Embed an element of the prime subfield (only) into this field."""
        if x.field.p != self.p:
            raise FieldMismatch("different characteristics")
        if x.field.e == 1:
            return FFElement(self, x.n)
        if x.field == self:
            return FFElement(self, x.n)
        raise FieldMismatch("embedding of non-prime subfields needs an explicit map")

    def elements(self) -> Iterable["FFElement"]:
        for n in range(self.q):
            yield FFElement(self, n)

    def __iter__(self):
        return iter(self.elements())

    def __len__(self):
        return self.q

    # -- raw integer-coded arithmetic --------------------------------------
    def add_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self.encode([x + y for x, y in zip(da, db)])

    def neg_raw(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        return self.encode([-x for x in self.digits(a)])

    def mul_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self.encode(_poly_mulmod_p(self.digits(a), self.digits(b), self.modulus, self.p))

    def inv_raw(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.e == 1:
            return pow(a, -1, self.p)
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self.pow_raw(a, self.q - 2)

    def pow_raw(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv_raw(a), -k
        if self.e == 1:
            return pow(a, k, self.p)
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul_raw(result, base)
            base = self.mul_raw(base, base)
            k >>= 1
        return result

    def build_log_tables(self):
        """Discrete log/antilog tables (used for vectorised work on small fields)."""
        if self._log is not None:
            return self._log, self._exp
        q = self.q
        order_factors = prime_factors(q - 1)
        g = 1
        for g in range(2, q):
            if all(self.pow_raw(g, (q - 1) // r) != 1 for r in order_factors):
                break
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self.mul_raw(x, g)
        self._exp, self._log = exp, log
        return log, exp

    def is_square(self, x) -> bool:
        x = self(x)
        if x.n == 0 or self.p == 2:
            return True
        return self.pow_raw(x.n, (self.q - 1) // 2) == 1

    def sqrt(self, x) -> "FFElement | None":
        x = self(x)
        if not self.is_square(x):
            return None
        for y in self.elements():
            if y * y == x:
                return y
        return None

    def primitive_root_of_unity(self, n: int) -> "FFElement":
        """An element of exact multiplicative order n (requires n | q-1)."""
        if (self.q - 1) % n:
            raise ValueError(f"F_{self.q} has no primitive {n}-th root of unity")
        factors = prime_factors(n)
        for g in range(1, self.q):
            z = self.pow_raw(g, (self.q - 1) // n)
            if all(self.pow_raw(z, n // r) != 1 for r in factors):
                return FFElement(self, z)
        raise AssertionError

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"


class FFElement:
    __slots__ = ("field", "n")

    def __init__(self, field: FinField, n: int):
        self.field = field
        self.n = n

    def _coerce(self, other) -> int:
        if isinstance(other, FFElement):
            if other.field is not self.field:
                if other.field.p == self.field.p and other.field.e == 1:
                    return other.n
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.n
        if isinstance(other, (int, Fraction)):
            return self.field(other).n
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field, self.field.add_raw(self.n, o))

    __radd__ = __add__

    def __neg__(self):
        return FFElement(self.field, self.field.neg_raw(self.n))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field, self.field.add_raw(self.n, self.field.neg_raw(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field, self.field.mul_raw(self.n, o))

    __rmul__ = __mul__

    def inverse(self):
        return FFElement(self.field, self.field.inv_raw(self.n))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field, self.field.mul_raw(self.n, self.field.inv_raw(o)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        return FFElement(self.field, self.field.pow_raw(self.n, k))

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.field.p == other.field.p and self._coerce(other) == self.n
        if isinstance(other, (int, Fraction)):
            try:
                return self.field(other).n == self.n
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.n))

    def __bool__(self):
        return self.n != 0

    def coeffs(self) -> list[int]:
        return self.field.digits(self.n)

    def __int__(self):
        if self.field.e != 1:
            raise TypeError("only prime-field elements convert to int")
        return self.n

    def __repr__(self):
        if self.field.e == 1:
            return f"{self.n}"
        terms = [f"{c}*x^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs()) if c]
        return "(" + (" + ".join(terms) or "0") + ")"


# ---------------------------------------------------------------------------
# Q(b), b^4 - b^3 + 1 = 0

B_MODULUS = (1, 0, 0, -1, 1)  # 1 - b^3 + b^4, low degree first


class NumberField:
    """Q[b]/(modulus) for a monic integer modulus; used here only with b^4 - b^3 + 1."""

    def __init__(self, modulus: Sequence[int] = B_MODULUS, name: str = "b"):
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.modulus = tuple(int(c) for c in modulus)
        self.degree = len(modulus) - 1
        self.name = name
        self.char = 0
        self.zero = NFElement(self, (Fraction(0),) * self.degree)
        self.one = self(1)

    def __call__(self, x) -> "NFElement":
        if isinstance(x, NFElement):
            if x.field is not self:
                raise FieldMismatch("different number fields")
            return x
        if isinstance(x, FFElement):
            raise FieldMismatch("cannot coerce a finite field element into Q(b)")
        return NFElement(self, (Fraction(x),) + (Fraction(0),) * (self.degree - 1))

    def gen(self) -> "NFElement":
        c = [Fraction(0)] * self.degree
        c[1] = Fraction(1)
        return NFElement(self, tuple(c))

    def from_coeffs(self, coeffs: Sequence) -> "NFElement":
        c = [Fraction(x) for x in coeffs]
        return NFElement(self, tuple(_reduce_nf_coeffs(c, self.modulus)))

    def is_square(self, x) -> bool:
        from .nfsqrt import nf_is_square

        return nf_is_square(self(x))

    def __repr__(self):
        return f"Q({self.name})"

    def __reduce__(self):
        return (NumberField, (self.modulus, self.name))


def _reduce_nf_coeffs(c: list, mod: Sequence[int]) -> list:
    d = len(mod) - 1
    c = list(c) + [Fraction(0)] * max(0, d - len(c))
    for k in range(len(c) - 1, d - 1, -1):
        lead = c[k]
        if lead:
            for j in range(d):
                c[k - d + j] -= lead * mod[j]
        c[k] = Fraction(0)
    return c[:d]


class NFElement:
    __slots__ = ("field", "c")

    def __init__(self, field: NumberField, c: tuple):
        self.field = field
        self.c = c

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field:
                raise FieldMismatch("different number fields")
            return other.c
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + (Fraction(0),) * (self.field.degree - 1)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(x + y for x, y in zip(self.c, o)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-x for x in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(x - y for x, y in zip(self.c, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(x * other for x in self.c))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o):
                    if b:
                        prod[i + j] += a * b
        return NFElement(self.field, tuple(_reduce_nf_coeffs(prod, self.field.modulus)))

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.c):
            raise DivisionByZero("inverse of zero in Q(b)")
        # solve self * y = 1 through the multiplication matrix
        d = self.field.degree
        b = self.field.gen()
        cols = []
        basis = self.field.one
        for _ in range(d):
            cols.append((self * basis).c)
            basis = basis * b
        mat = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        sol = _solve_square_fraction(mat)
        return NFElement(self.field, tuple(sol))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return NFElement(self.field, tuple(x / other for x in self.c))
        o = self.field(other) if not isinstance(other, NFElement) else other
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, FFElement) else None
        if o is None:
            return NotImplemented if not isinstance(other, FFElement) else False
        return self.c == tuple(o)

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def norm(self) -> Fraction:
        """Field norm to Q (determinant of the multiplication matrix)."""
        d = self.field.degree
        b = self.field.gen()
        rows, basis = [], self.field.one
        for _ in range(d):
            rows.append(list((self * basis).c))
            basis = basis * b
        return _det_fraction(rows)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.c):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*{self.field.name}" + (f"^{i}" if i > 1 else ""))
        return "(" + (" + ".join(terms) or "0") + ")"


def _solve_square_fraction(aug: list[list[Fraction]]) -> list[Fraction]:
    n = len(aug)
    m = [row[:] for row in aug]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


QB = NumberField()


def reduce_nf(x: NFElement, F: FinField, root: FFElement) -> FFElement:
    """Image of x in F under b -> root (root must satisfy the modulus in F)."""
    acc = F.zero
    for c in reversed(x.c):
        acc = acc * root + F(c)
    return acc


# ---------------------------------------------------------------------------
# Generic dispatch


def field_arithmetic(x, y, op: str):
    """add/mul/inv/pow on two scalars of the same field (y unused for inv; an int for pow)."""
    if op == "add":
        _same_field(x, y)
        return x + y
    if op == "mul":
        _same_field(x, y)
        return x * y
    if op == "inv":
        if x == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(x) if isinstance(x, (int, Fraction)) else x.inverse()
    if op == "pow":
        return x**y
    raise ValueError(f"unknown op {op!r}")


def _same_field(x, y):
    fx = getattr(x, "field", QQ)
    fy = getattr(y, "field", QQ)
    if isinstance(x, (int, Fraction)) or isinstance(y, (int, Fraction)):
        return
    if fx is not fy:
        raise FieldMismatch(f"{fx} vs {fy}")


# ---------------------------------------------------------------------------
# Integers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    if n < 289:
        return True
    if n < 10**12:
        return all(n % d and n % (d + 2) for d in range(5, isqrt(n) + 1, 6))
    # deterministic Miller-Rabin; these bases are exact below 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    if n >= 3317044064679887385961981:
        raise FieldTooLarge(f"primality of {n} outside the deterministic range")
    return True


def factorize(n: int, bound: int | None = None) -> dict[int, int]:
    """Prime factorization of |n| by trial division.

    With ``bound`` set, stops dividing at that bound and returns any leftover
    cofactor > 1 under its own key (check it with :func:`is_prime`).
    """
    if n == 0:
        raise ZeroInput("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    limit = isqrt(n) if bound is None else min(isqrt(n), bound)
    while d <= limit:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        limit = isqrt(n) if bound is None else min(isqrt(n), bound)
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


@dataclass(frozen=True, order=True)
class SquareClass:
    """Class of a nonzero rational modulo squares: sign * squarefree."""

    sign: int
    squarefree: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.squarefree <= 0 or any(k > 1 for k in factorize(self.squarefree).values()):
            raise ValueError(f"{self.squarefree} is not squarefree")

    @property
    def value(self) -> int:
        return self.sign * self.squarefree

    def __neg__(self) -> "SquareClass":
        return SquareClass(-self.sign, self.squarefree)

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        g = gcd(self.squarefree, other.squarefree)
        return SquareClass(self.sign * other.sign, (self.squarefree // g) * (other.squarefree // g))

    def factors(self) -> list[int]:
        return prime_factors(self.squarefree) if self.squarefree > 1 else []

    def __str__(self):
        parts = "·".join(map(str, self.factors())) or "1"
        return ("-" if self.sign < 0 else "") + parts


def square_class(n) -> SquareClass:
    """Square class of a nonzero integer (or Fraction: class of num*den)."""
    if isinstance(n, Fraction):
        n = n.numerator * n.denominator
    if n == 0:
        raise ZeroInput("square class of 0 is undefined")
    sf = 1
    for p, k in factorize(n).items():
        if k % 2:
            sf *= p
    return SquareClass(1 if n > 0 else -1, sf)


# ---------------------------------------------------------------------------
# Resultants over Q


def _strip(c: list) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def resultant(f: Sequence, g: Sequence, field=QQ):
    """Res(f, g) of coefficient lists (low degree first) over a field.

    Euclidean algorithm; equals the Sylvester determinant, i.e.
    Res(f,g) = (-1)^(deg f deg g) lc(g)^deg f * prod f(roots of g).
    """
    f, g = _strip([field(c) for c in f]), _strip([field(c) for c in g])
    if not f or not g:
        raise ZeroPolynomial("resultant with the zero polynomial")
    res = field.one
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            return res * g[0] ** df
        if df < dg:
            if (df * dg) % 2:
                res = -res
            f, g = g, f
            continue
        # f = q g + r ; Res(f,g) = (-1)^{df dg} lc(g)^{df - deg r} Res(g, r)
        r = list(f)
        lcg = g[-1]
        for k in range(df - dg, -1, -1):
            coef = r[k + dg] / lcg
            if coef != 0:
                for j in range(dg + 1):
                    r[k + j] = r[k + j] - coef * g[j]
        r = _strip(r[:dg])
        if not r:
            return field.zero
        dr = len(r) - 1
        if (df * dg) % 2:
            res = -res
        res = res * lcg ** (df - dr)
        f, g = g, r


def resultant_int(f: Sequence[int], g: Sequence[int]) -> int:
    """Integer resultant of integer coefficient lists (low degree first)."""
    r = resultant([Fraction(c) for c in f], [Fraction(c) for c in g])
    if r.denominator != 1:
        raise AssertionError("resultant of integer polynomials must be an integer")
    return r.numerator


def roots_univariate(f: Sequence, F: FinField, limit: int = 10**6) -> list:
    """All roots of f (coefficients low degree first, coercible into F) by exhaustive scan."""
    if F.q > limit:
        raise FieldTooLarge(f"{F} has more than {limit} elements")
    coeffs = _strip([F(c) for c in f])
    if not coeffs:
        raise ZeroPolynomial("every element is a root of 0")
    out = []
    for x in F.elements():
        acc = F.zero
        for c in reversed(coeffs):
            acc = acc * x + c
        if acc == 0:
            out.append(x)
    return out
