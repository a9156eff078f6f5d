"""Univariate and sparse multivariate polynomials over the exact fields."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .exact import FinField, ZeroPolynomial, resultant

__all__ = ["UPoly", "MultiPoly"]


class UPoly:
    """Dense univariate polynomial, coefficients low degree first."""

    __slots__ = ("field", "c")

    def __init__(self, field, coeffs: Iterable = ()):
        self.field = field
        c = [field(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = c

    @classmethod
    def x(cls, field) -> "UPoly":
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field, a) -> "UPoly":
        return cls(field, [a])

    # -- basic --------------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def lc(self):
        return self.c[-1] if self.c else self.field.zero

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def coeff(self, k: int):
        return self.c[k] if 0 <= k < len(self.c) else self.field.zero

    def _wrap(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            return other
        return UPoly(self.field, [other])

    def __add__(self, other):
        o = self._wrap(other)
        n = max(len(self.c), len(o.c))
        return UPoly(self.field, [self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.field, [-a for a in self.c])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            a = self.field(other)
            return UPoly(self.field, [x * a for x in self.c])
        if not self.c or not other.c:
            return UPoly(self.field)
        out = [self.field.zero] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(other.c):
                out[i + j] = out[i + j] + a * b
        return UPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result, base = UPoly(self.field, [1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            other = self._wrap(other)
        return len(self.c) == len(other.c) and all(a == b for a, b in zip(self.c, other.c))

    def __hash__(self):
        return hash(tuple(map(hash, self.c)))

    def __call__(self, x):
        acc = self.field.zero
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def __divmod__(self, other: "UPoly"):
        if not other.c:
            raise ZeroPolynomial("division by the zero polynomial")
        r = list(self.c)
        dq = len(r) - len(other.c)
        if dq < 0:
            return UPoly(self.field), self
        qt = [self.field.zero] * (dq + 1)
        inv = self.field.one / other.lc()
        dg = other.degree
        for k in range(dq, -1, -1):
            coef = r[k + dg] * inv
            qt[k] = coef
            if coef != 0:
                for j, b in enumerate(other.c):
                    r[k + j] = r[k + j] - coef * b
        return UPoly(self.field, qt), UPoly(self.field, r[:dg])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UPoly":
        if not self.c:
            return self
        inv = self.field.one / self.lc()
        return self * inv

    def derivative(self) -> "UPoly":
        return UPoly(self.field, [a * k for k, a in enumerate(self.c)][1:])

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def resultant(self, other: "UPoly"):
        return resultant(self.c, other.c, self.field)

    def discriminant(self):
        """disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)."""
        n = self.degree
        if n < 1:
            raise ZeroPolynomial("discriminant of a constant")
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return sign * self.resultant(self.derivative()) / self.lc()

    def map(self, fn: Callable, field) -> "UPoly":
        return UPoly(field, [fn(a) for a in self.c])

    def reverse_weighted(self, weight: int) -> "UPoly":
        """s^weight * f(1/s) (requires degree <= weight)."""
        if self.degree > weight:
            raise ValueError("degree exceeds weight")
        c = list(self.c) + [self.field.zero] * (weight + 1 - len(self.c))
        return UPoly(self.field, list(reversed(c)))

    def valuation(self) -> int:
        """Order of vanishing at 0 (infinity for the zero polynomial)."""
        for k, a in enumerate(self.c):
            if a != 0:
                return k
        return 10**9

    # -- squarefree decomposition -----------------------------------------
    def squarefree_decomposition(self) -> dict[int, "UPoly"]:
        """{multiplicity: monic squarefree factor}; the factors are pairwise coprime."""
        if not self.c:
            raise ZeroPolynomial("squarefree decomposition of 0")
        out: dict[int, UPoly] = {}
        _sqf(self.monic(), 1, out)
        return {k: v for k, v in sorted(out.items()) if v.degree > 0}

    def roots(self, limit: int = 10**6) -> list:
        """Roots in a finite coefficient field (exhaustive scan)."""
        from .exact import roots_univariate

        if not isinstance(self.field, FinField):
            raise TypeError("roots() only for finite fields")
        return roots_univariate(self.c, self.field, limit)

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for k, a in enumerate(self.c):
            if a != 0:
                terms.append(f"{a}" if k == 0 else f"{a}*t^{k}")
        return " + ".join(terms)


def _pth_root(f: UPoly) -> UPoly:
    F = f.field
    p = F.char
    out = []
    for k in range(0, len(f.c), p):
        a = f.c[k]
        out.append(a ** (p ** (F.e - 1)) if F.e > 1 else a)
    return UPoly(F, out)


def _sqf(f: UPoly, scale: int, out: dict):
    if f.degree < 1:
        return
    df = f.derivative()
    c = f.gcd(df)
    w = f.exact_div(c)
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w.exact_div(y)
        if z.degree > 0:
            k = i * scale
            out[k] = out[k] * z if k in out else z
        i += 1
        w = y
        c = c.exact_div(y)
    if c.degree > 0:
        # remaining factor is a p-th power (only in positive characteristic)
        if f.field.char == 0:
            raise AssertionError("non-trivial cofactor in characteristic 0")
        _sqf(_pth_root(c), scale * f.field.char, out)


class MultiPoly:
    """Sparse multivariate polynomial {exponent tuple: coefficient}."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars: int, terms: Mapping | None = None):
        self.field = field
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = field(c)
                if c != 0:
                    self.terms[tuple(e)] = c

    @classmethod
    def var(cls, field, nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): 1})

    @classmethod
    def const(cls, field, nvars: int, a) -> "MultiPoly":
        return cls(field, nvars, {(0,) * nvars: a})

    def gens(self) -> list["MultiPoly"]:
        return [MultiPoly.var(self.field, self.nvars, i) for i in range(self.nvars)]

    def _wrap(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(self.field, self.nvars, other)

    def __add__(self, other):
        o = self._wrap(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            s = t.get(e)
            s = c if s is None else s + c
            if s == 0:
                t.pop(e, None)
            else:
                t[e] = s
        return _raw(self.field, self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.field, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            a = self.field(other)
            if a == 0:
                return _raw(self.field, self.nvars, {})
            return _raw(self.field, self.nvars, {e: c * a for e, c in self.terms.items()})
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e)
                t[e] = c1 * c2 if s is None else s + c1 * c2
        return _raw(self.field, self.nvars, {e: c for e, c in t.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MultiPoly.const(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._wrap(other)
        return self.nvars == o.nvars and (self - o).is_zero()

    def __hash__(self):
        return hash(frozenset((e, hash(c)) for e, c in self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def derivative(self, i: int) -> "MultiPoly":
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                t[tuple(ne)] = c * e[i]
        return MultiPoly(self.field, self.nvars, t)

    def __call__(self, *point):
        """Evaluate at a point (Horner-free; fine at the sizes used here)."""
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        acc = self.field.zero
        powers = [_powers(x, max((e[i] for e in self.terms), default=0)) for i, x in enumerate(point)]
        for e, c in self.terms.items():
            m = c
            for i, k in enumerate(e):
                if k:
                    m = m * powers[i][k]
            acc = acc + m
        return acc

    def substitute(self, images: Sequence["MultiPoly"], nvars: int | None = None) -> "MultiPoly":
        """Replace variable i by images[i] (MultiPolys in a common ring)."""
        nv = nvars if nvars is not None else images[0].nvars
        out = MultiPoly(self.field, nv)
        cache: dict = {}
        for e, c in self.terms.items():
            m = MultiPoly.const(self.field, nv, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    m = m * cache[key]
            out = out + m
        return out

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Rename variable i -> perm[i]."""
        t = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, k in enumerate(e):
                ne[perm[i]] = k
            t[tuple(ne)] = c
        return _raw(self.field, self.nvars, t)

    def map_coeffs(self, fn: Callable, field) -> "MultiPoly":
        return MultiPoly(field, self.nvars, {e: fn(c) for e, c in self.terms.items()})

    def to_upoly(self, var: int) -> UPoly:
        """For a polynomial in a single variable."""
        deg = max((e[var] for e in self.terms), default=0)
        c = [self.field.zero] * (deg + 1)
        for e, a in self.terms.items():
            if any(k for j, k in enumerate(e) if j != var):
                raise ValueError("polynomial involves other variables")
            c[e[var]] = a
        return UPoly(self.field, c)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _raw(field, nvars, terms) -> MultiPoly:
    p = MultiPoly.__new__(MultiPoly)
    p.field = field
    p.nvars = nvars
    p.terms = terms
    return p


def _powers(x, k: int) -> list:
    out = [None, x]
    for _ in range(k - 1):
        out.append(out[-1] * x)
    return out
