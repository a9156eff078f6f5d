"""Vectorised F_q arithmetic on integer-coded elements (numpy arrays).

Used by the enumeration routines; scalar code lives in :mod:`quintic75.exact`.
"""

from __future__ import annotations

import numpy as np

from .exact import FinField

_ADD_TABLE_LIMIT = 2500


class VecField:
    """Element-wise add/mul/neg on int64 arrays of codes of a FinField."""

    def __init__(self, F: FinField):
        self.F = F
        self.p, self.e, self.q = F.p, F.e, F.q
        if self.e > 1:
            log, exp = F.build_log_tables()
            self.log = np.asarray(log, dtype=np.int64)
            self.exp = np.asarray(exp + exp, dtype=np.int64)
            codes = np.arange(self.q, dtype=np.int64)
            self.digits = [(codes // self.p**i) % self.p for i in range(self.e)]
            self.neg_table = np.zeros(self.q, dtype=np.int64)
            for i in range(self.e):
                self.neg_table += ((-self.digits[i]) % self.p) * self.p**i
            if self.q <= _ADD_TABLE_LIMIT:
                a = codes[:, None]
                b = codes[None, :]
                tab = np.zeros((self.q, self.q), dtype=np.int64)
                for i in range(self.e):
                    tab += (((a // self.p**i) + (b // self.p**i)) % self.p) * self.p**i
                self.add_table = tab
            else:
                self.add_table = None

    def const(self, x) -> int:
        return self.F(x).n

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        if self.add_table is not None:
            return self.add_table[a, b]
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for i in range(self.e):
            pi = self.p**i
            out += (((a // pi) + (b // pi)) % self.p) * pi
        return out

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        return self.neg_table[a]

    def mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        a = np.asarray(a)
        b = np.asarray(b)
        res = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, res)

    def mul_const(self, a, c: int):
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a
        if self.e == 1:
            return (a * c) % self.p
        res = self.exp[self.log[a] + self.log[c]]
        return np.where(a == 0, 0, res)

    def pow_table(self, k: int):
        """codes -> codes of x^k, as a lookup table."""
        F = self.F
        return np.asarray([F.pow_raw(x, k) for x in range(self.q)], dtype=np.int64)


def eval_multipoly(V: VecField, poly, arrays):
    """Evaluate a MultiPoly (coefficients in V.F) at broadcastable code arrays."""
    shape = np.broadcast(*arrays).shape if arrays else ()
    acc = np.zeros(shape, dtype=np.int64)
    tables: dict = {}
    for expo, coeff in poly.terms.items():
        term = np.full(shape, V.const(coeff), dtype=np.int64)
        for i, k in enumerate(expo):
            if k == 0:
                continue
            if k == 1:
                factor = arrays[i]
            else:
                if k not in tables:
                    tables[k] = V.pow_table(k)
                factor = tables[k][arrays[i]]
            term = V.mul(term, factor)
        acc = V.add(acc, term)
    return acc


def univariate_coeff_arrays(V: VecField, poly, grid, last: int):
    """Coefficient arrays of poly as a polynomial in variable ``last``.

    ``grid`` holds code arrays for every other variable (None at ``last``).
    Returns a list indexed by degree in the last variable.
    """
    from .poly import MultiPoly

    split: dict[int, dict] = {}
    for expo, c in poly.terms.items():
        k = expo[last]
        e2 = list(expo)
        e2[last] = 0
        split.setdefault(k, {})[tuple(e2)] = c
    deg = max(split) if split else 0
    shape = np.broadcast(*[g for g in grid if g is not None]).shape
    out = []
    for k in range(deg + 1):
        if k in split:
            sub = MultiPoly(poly.field, poly.nvars, split[k])
            arrs = [g if g is not None else np.zeros(1, dtype=np.int64) for g in grid]
            out.append(np.broadcast_to(eval_multipoly(V, sub, arrs), shape).copy())
        else:
            out.append(np.zeros(shape, dtype=np.int64))
    return out


def horner(V: VecField, coeffs, x: int):
    acc = coeffs[-1].copy()
    for c in reversed(coeffs[:-1]):
        acc = V.add(V.mul_const(acc, x), c)
    return acc
