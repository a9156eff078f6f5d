"""Enumeration of the F_q-points of a projective hypersurface in P^3."""

from __future__ import annotations

import numpy as np

from .exact import FinField
from .ffvec import VecField, horner, univariate_coeff_arrays

# normalized representatives (1,*,*,*), (0,1,*,*), (0,0,1,*), (0,0,0,1)
CHARTS = ((1, None, None, None), (0, 1, None, None), (0, 0, 1, None), (0, 0, 0, 1))


def _chart_grid(q: int, fixed, x1_range=None):
    """Code arrays for the free variables of a chart, except the last (Horner) one."""
    free = [i for i, v in enumerate(fixed) if v is None]
    grid = [None] * 4
    for i, v in enumerate(fixed):
        if v is not None:
            grid[i] = np.array([v], dtype=np.int64)
    if not free:
        return grid, None
    last = free[-1]
    inner = free[:-1]
    if len(inner) == 2:
        lo, hi = x1_range if x1_range is not None else (0, q)
        a = np.arange(lo, hi, dtype=np.int64)
        b = np.arange(q, dtype=np.int64)
        grid[inner[0]] = np.repeat(a, q)
        grid[inner[1]] = np.tile(b, hi - lo)
    elif len(inner) == 1:
        grid[inner[0]] = np.arange(q, dtype=np.int64)
    return grid, last


def projective_zeros(F: FinField, poly, collect: bool = False, chunks: int = 1):
    """Number of zeros of a homogeneous 4-variable MultiPoly over F in P^3(F).

    With ``collect`` also returns the zero set as tuples of codes.  ``chunks``
    partitions the big chart into disjoint ranges; the count does not depend on it.
    """
    V = VecField(F)
    q = F.q
    total = 0
    points = []
    for fixed in CHARTS:
        free = [i for i, v in enumerate(fixed) if v is None]
        ranges = [None]
        if len(free) == 3 and chunks > 1:
            edges = np.linspace(0, q, chunks + 1).astype(int)
            ranges = [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]
        for rng in ranges:
            grid, last = _chart_grid(q, fixed, rng)
            if last is None:
                from .ffvec import eval_multipoly

                val = eval_multipoly(V, poly, grid)
                hits = np.flatnonzero(val == 0)
                total += len(hits)
                if collect and len(hits):
                    points.append(tuple(fixed))
                continue
            coeffs = univariate_coeff_arrays(V, poly, grid, last)
            for x in range(q):
                val = horner(V, coeffs, x)
                hits = np.flatnonzero(val == 0)
                total += len(hits)
                if collect and len(hits):
                    for h in hits:
                        pt = []
                        for i in range(4):
                            if i == last:
                                pt.append(x)
                            elif fixed[i] is not None:
                                pt.append(fixed[i])
                            else:
                                pt.append(int(grid[i][h]))
                        points.append(tuple(pt))
    if collect:
        return total, points
    return total


def projective_points_count(q: int) -> int:
    return q**3 + q**2 + q + 1
