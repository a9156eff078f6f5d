"""Exact integer linear algebra: Bareiss rank/determinant, Hermite and Smith
normal forms with unimodular transforms, saturated kernels, and the
discriminant of the lattice spanned by a set of generators given their Gram
matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

Matrix = list[list[int]]


def _copy(A) -> list[list]:
    return [list(r) for r in A]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A) -> list[list]:
    return [list(r) for r in zip(*A)] if A else []


def matmul(A, B) -> list[list]:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col) if a and b) for col in Bt] for row in A]


def _integerize(A) -> Matrix:
    """Scale each row of a rational matrix to integers (rank is unchanged)."""
    out = []
    for row in A:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def bareiss(A) -> tuple[int, int]:
    """Fraction-free elimination; returns (rank, signed product of pivots data).

    The second value is the determinant when A is square of full rank, else 0.
    """
    M = _integerize(A)
    n = len(M)
    if n == 0:
        return 0, 1
    m = len(M[0])
    prev = 1
    sign = 1
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if M[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            M[r], M[piv] = M[piv], M[r]
            sign = -sign
        pr = M[r]
        pv = pr[c]
        for i in range(r + 1, n):
            row = M[i]
            f = row[c]
            if f == 0:
                M[i] = [(x * pv) // prev for x in row] if prev != 1 or pv != 1 else row
                # (x*pv - 0*y)/prev is exact by Sylvester's identity
                continue
            M[i] = [(row[k] * pv - f * pr[k]) // prev if k >= c else 0 for k in range(m)]
        prev = pv
        r += 1
        if r == n:
            break
    det = sign * prev if (r == n == m) else 0
    return r, det


def rank_exact(A) -> int:
    return bareiss(A)[0]


def det_exact(A) -> int:
    if len(A) != (len(A[0]) if A else 0):
        raise ValueError("determinant of a non-square matrix")
    if not A:
        return 1
    r, d = bareiss(A)
    return d if r == len(A) else 0


def rank_mod_p(A, p: int) -> int:
    M = [[x % p for x in row] for row in _integerize(A)]
    n = len(M)
    m = len(M[0]) if n else 0
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(n):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        r += 1
    return r


# ---------------------------------------------------------------------------
# Hermite / Smith normal forms


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        qt = a // b
        a, b = b, a - qt * b
        x0, x1 = x1, x0 - qt * x1
        y0, y1 = y1, y0 - qt * y1
    return a, x0, y0


def hnf(A, with_inverse: bool = False):
    """Row-style Hermite normal form: U A = H, U unimodular.

    H is in row echelon form with positive pivots and entries above each pivot
    reduced into [0, pivot).  Returns (H, U) or (H, U, U^{-1}).
    """
    H = _copy(A)
    n = len(H)
    m = len(H[0]) if n else 0
    U = identity(n)
    Ui = identity(n) if with_inverse else None
    r = 0
    for c in range(m):
        if r == n:
            break
        for i in range(r + 1, n):
            if H[i][c] == 0:
                continue
            a, b = H[r][c], H[i][c]
            g, x, y = _xgcd(a, b)
            # [[x, y], [-b/g, a/g]] has determinant 1
            u, v = -b // g, a // g
            _row_op(H, r, i, x, y, u, v)
            _row_op(U, r, i, x, y, u, v)
            if Ui is not None:
                # inverse acts on columns: [[v, -y], [-u, x]]
                _col_op(Ui, r, i, v, -y, -u, x)
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
            if Ui is not None:
                for row in Ui:
                    row[r] = -row[r]
        pv = H[r][c]
        for i in range(r):
            f = H[i][c] // pv
            if f:
                H[i] = [x - f * y for x, y in zip(H[i], H[r])]
                U[i] = [x - f * y for x, y in zip(U[i], U[r])]
                if Ui is not None:
                    for row in Ui:
                        row[r] += f * row[i]
        r += 1
    if with_inverse:
        return H, U, Ui
    return H, U


def _row_op(M, r, i, x, y, u, v):
    Rr, Ri = M[r], M[i]
    M[r] = [x * a + y * b for a, b in zip(Rr, Ri)]
    M[i] = [u * a + v * b for a, b in zip(Rr, Ri)]


def _col_op(M, r, i, a11, a12, a21, a22):
    # columns (c_r, c_i) <- (c_r, c_i) [[a11, a12], [a21, a22]]
    for row in M:
        cr, ci = row[r], row[i]
        row[r] = cr * a11 + ci * a21
        row[i] = cr * a12 + ci * a22


@dataclass
class SmithForm:
    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def snf(A) -> SmithForm:
    """Smith normal form U A V = D with d_1 | d_2 | ... and d_i >= 0."""
    D = _copy(A)
    n = len(D)
    m = len(D[0]) if n else 0
    U = identity(n)
    V = identity(m)
    t = 0
    while t < min(n, m):
        # choose a nonzero pivot of minimal absolute value in the remaining block
        entries = [(abs(D[i][j]), i, j) for i in range(t, n) for j in range(t, m) if D[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        D[t], D[pi] = D[pi], D[t]
        U[t], U[pi] = U[pi], U[t]
        for row in D:
            row[t], row[pj] = row[pj], row[t]
        for row in V:
            row[t], row[pj] = row[pj], row[t]
        done = False
        while not done:
            done = True
            for i in range(t + 1, n):
                if D[i][t]:
                    a, b = D[t][t], D[i][t]
                    # plain elimination when the pivot divides, else the xgcd may swap forever
                    g, x, y = (a, 1, 0) if b % a == 0 else _xgcd(a, b)
                    _row_op(D, t, i, x, y, -b // g, a // g)
                    _row_op(U, t, i, x, y, -b // g, a // g)
            for j in range(t + 1, m):
                if D[t][j]:
                    a, b = D[t][t], D[t][j]
                    g, x, y = (a, 1, 0) if b % a == 0 else _xgcd(a, b)
                    _col_op(D, t, j, x, -b // g, y, a // g)
                    _col_op(V, t, j, x, -b // g, y, a // g)
                    done = False
            if any(D[i][t] for i in range(t + 1, n)):
                done = False
                continue
            # divisibility: fold a non-divisible entry into the pivot row
            pv = D[t][t]
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, m) if D[i][j] % pv), None)
            if bad is not None:
                i = bad[0]
                D[t] = [a + b for a, b in zip(D[t], D[i])]
                U[t] = [a + b for a, b in zip(U[t], U[i])]
                done = False
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return SmithForm(D, U, V)


def normal_forms(A):
    """(HNF, its transform U, SmithForm) of an integer matrix."""
    H, U = hnf(A)
    return H, U, snf(A)


# ---------------------------------------------------------------------------
# kernels and lattices


def rational_kernel(A) -> list[list[Fraction]]:
    """Basis of {v : A v = 0} over Q (vectors as lists)."""
    M = [[Fraction(x) for x in row] for row in A]
    n = len(M)
    m = len(M[0]) if n else 0
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(n):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m
        v[f] = Fraction(1)
        for row, pc in zip(M, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def _saturate_with_complement(vectors: list[list[int]], n: int) -> tuple[Matrix, Matrix]:
    """(saturated basis of span_Q(vectors) & Z^n, a basis of a complement), as row lists."""
    k = len(vectors)
    if k == 0:
        return [], identity(n)
    K = transpose(vectors)  # n x k
    H, U, Ui = hnf(K, with_inverse=True)
    r = sum(1 for row in H if any(row))
    cols = transpose(Ui)
    return cols[:r], cols[r:]


def kernel_saturated(G) -> Matrix:
    """Primitive Z-basis of {v in Z^n : G v = 0}."""
    n = len(G)
    ker = [_integerize([v])[0] for v in rational_kernel(G)]
    sat, _ = _saturate_with_complement(ker, n)
    return sat


@dataclass
class LatticeReport:
    n: int
    rank: int
    disc: int
    kernel_dim: int
    complement: Matrix = field(default_factory=list, repr=False)

    def as_dict(self) -> dict:
        return {"generators": self.n, "rank": self.rank, "disc": self.disc, "kernel_dim": self.kernel_dim}


def image_lattice(G, complement_transform=None) -> LatticeReport:
    """Rank and discriminant of Z^n / radical under the pairing G.

    The saturated radical is completed to a basis of Z^n through the HNF
    transform; the pairing restricted to the complementary basis vectors has
    determinant ``disc``.  ``complement_transform`` (a callable on the
    complement rows) is used by tests to show the result is independent of the
    completion.
    """
    n = len(G)
    ker = [_integerize([v])[0] for v in rational_kernel(G)]
    sat, comp = _saturate_with_complement(ker, n)
    if complement_transform is not None:
        comp = complement_transform(comp, sat)
    B = transpose(comp)  # n x r
    if not comp:
        return LatticeReport(n, 0, 1, len(sat), comp)
    restricted = matmul(matmul(comp, G), B)
    return LatticeReport(n, len(comp), det_exact(restricted), len(sat), comp)


def image_lattice_by_pivots(G) -> tuple[int, Fraction]:
    """Independent route to (rank, disc): a pivot sublattice and its index.

    With P a set of independent generators, every generator has rational
    coordinates C = G_PP^{-1} G_P* ; the lattice they span has basis L and
    disc = det(G_PP) * det(L)^2.
    """
    n = len(G)
    M = [[Fraction(x) for x in row] for row in G]
    # pivot rows via elimination on a copy
    rk = 0
    P = []
    W = [row[:] for row in M]
    for c in range(n):
        piv = next((i for i in range(rk, n) if W[i][c] != 0), None)
        if piv is None:
            continue
        W[rk], W[piv] = W[piv], W[rk]
        for i in range(rk + 1, n):
            if W[i][c] != 0:
                f = W[i][c] / W[rk][c]
                W[i] = [x - f * y for x, y in zip(W[i], W[rk])]
        P.append(c)
        rk += 1
    if rk == 0:
        return 0, Fraction(1)
    GPP = [[M[i][j] for j in P] for i in P]
    # solve GPP X = G_P*  (columns are coordinates of each generator)
    aug = [GPP[i] + [M[P[i]][j] for j in range(n)] for i in range(rk)]
    for c in range(rk):
        piv = next(i for i in range(c, rk) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(rk):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    C = [row[rk:] for row in aug]  # rk x n
    den = 1
    for row in C:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    Ci = [[int(x * den) for x in row] for row in C]
    # column lattice of Ci: HNF of the transpose (rows = generators)
    H, _ = hnf(transpose(Ci))
    basis = [row for row in H if any(row)][:rk]
    detL = Fraction(det_exact(basis), den**rk)
    detG = Fraction(det_exact(_integerize(GPP)))
    return rk, detG * detL * detL
