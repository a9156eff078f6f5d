"""Square roots in Q(b) via a totally split prime and p-adic lifting.

A non-square is certified by a split prime p at which some embedding of x
is a non-residue; a square is certified by exhibiting y with y*y == x.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import isqrt

from .exact import FinField, NFElement, is_prime, roots_univariate


def _rational_reconstruct(a: int, m: int) -> Fraction | None:
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        qt = r0 // r1
        r0, r1 = r1, r0 - qt * r1
        s0, s1 = s1, s0 - qt * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def _mulmod(a, b, mod, m):
    d = len(mod) - 1
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for j in range(d):
                prod[k - d + j] -= c * mod[j]
    return [c % m for c in prod[:d]]


def _interpolate(roots, values, p):
    """Coefficients of the degree < n polynomial through (roots[i], values[i]) mod p."""
    n = len(roots)
    out = [0] * n
    for i, (ri, vi) in enumerate(zip(roots, values)):
        basis = [1]
        denom = 1
        for j, rj in enumerate(roots):
            if j == i:
                continue
            basis = [(a - rj * b) % p for a, b in zip([0] + basis, basis + [0])]
            denom = denom * (ri - rj) % p
        scale = vi * pow(denom, -1, p) % p
        out = [(o + scale * c) % p for o, c in zip(out, basis)]
    return out


def _split_primes(mod, start=3, count=40):
    p = start
    found = 0
    while found < count:
        p += 1
        if not is_prime(p):
            continue
        rts = roots_univariate(mod, FinField(p))
        if len(rts) == len(mod) - 1:
            found += 1
            yield p, [r.n for r in rts]


def nf_sqrt(x: NFElement, max_primes: int = 40) -> NFElement | None:
    """A square root of x in its number field, or None if x is not a square."""
    K = x.field
    if not x:
        return K.zero
    mod = K.modulus
    den = 1
    for c in x.c:
        den = den * c.denominator // _gcd(den, c.denominator)
    num = [int(c * den) for c in x.c]
    for p, rts in _split_primes(mod, count=max_primes):
        if den % p == 0:
            continue
        F = FinField(p)
        xp = [sum(n * pow(r, k, p) for k, n in enumerate(num)) * pow(den, -1, p) % p for r in rts]
        if any(v == 0 for v in xp):
            continue
        if any(not F.is_square(v) for v in xp):
            return None
        roots = [F.sqrt(v).n for v in xp]
        for signs in product((1, -1), repeat=len(rts) - 1):
            y0 = _interpolate(rts, [roots[0]] + [s * r % p for s, r in zip(signs, roots[1:])], p)
            cand = _lift(num, den, y0, rts, p, mod, K)
            if cand is not None:
                return cand
        # every sign pattern failed to reconstruct: x is not a square
        return None
    raise ArithmeticError("no usable split prime found")


def nf_is_square(x: NFElement) -> bool:
    return nf_sqrt(x) is not None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _lift(num, den, y0, rts, p, mod, K, max_bits=4096):
    # Newton iteration y <- y - (y^2 - x) * z, z ~ (2y)^{-1}, both lifted together
    m = p
    inv2y = _interpolate(rts, [pow(2 * sum(c * pow(r, k, p) for k, c in enumerate(y0)), -1, p) for r in rts], p)
    y, z = list(y0), inv2y
    while m.bit_length() < max_bits:
        m = m * m
        xm = [n * pow(den, -1, m) % m for n in num]
        y2 = _mulmod(y, y, mod, m)
        err = [(a - b) % m for a, b in zip(y2, xm)]
        y = [(a - b) % m for a, b in zip(y, _mulmod(err, z, mod, m))]
        two_y = [2 * c % m for c in y]
        corr = _mulmod(two_y, z, mod, m)
        corr = [(-c) % m for c in corr]
        corr[0] = (corr[0] + 2) % m
        z = _mulmod(z, corr, mod, m)
        coeffs = [_rational_reconstruct(c, m) for c in y]
        if all(c is not None for c in coeffs):
            cand = K.from_coeffs(coeffs)
            if cand * cand == K.from_coeffs([Fraction(n, den) for n in num]):
                return cand
    return None
