import random

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from quintic75.zlinalg import (
    det_exact,
    hnf,
    image_lattice,
    image_lattice_by_pivots,
    kernel_saturated,
    matmul,
    normal_forms,
    rank_exact,
    rank_mod_p,
    snf,
    transpose,
)

int_matrix = st.integers(1, 6).flatmap(
    lambda n: st.integers(1, 6).flatmap(
        lambda m: st.lists(st.lists(st.integers(-20, 20), min_size=m, max_size=m), min_size=n, max_size=n)
    )
)


def test_rank_examples(gram75, gram135):
    assert rank_exact([[2, 1], [4, 2]]) == 1
    assert rank_exact(gram75) == 40
    assert rank_exact(gram135) == 53


def test_snf_examples():
    assert snf([[2, 0], [0, 3]]).diagonal == [1, 6]
    assert snf([[1, 0], [0, 1]]).diagonal == [1, 1]


@given(int_matrix)
def test_rank_and_det_against_sympy(A):
    M = sympy.Matrix(A)
    assert rank_exact(A) == M.rank()
    if len(A) == len(A[0]):
        assert det_exact(A) == M.det()


@given(int_matrix)
def test_hnf_transform(A):
    H, U, Ui = hnf(A, with_inverse=True)
    assert matmul(U, A) == H
    n = len(A)
    assert matmul(U, Ui) == [[int(i == j) for j in range(n)] for i in range(n)]
    # echelon with positive pivots, reduced above
    last = -1
    for i, row in enumerate(H):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            assert all(not any(r) for r in H[i:])
            break
        j = nz[0]
        assert j > last and row[j] > 0
        assert all(0 <= H[k][j] < row[j] for k in range(i))
        last = j


@given(int_matrix)
def test_snf_transform_and_divisibility(A):
    S = snf(A)
    assert matmul(matmul(S.U, A), S.V) == S.D
    assert abs(sympy.Matrix(S.U).det()) == 1 and abs(sympy.Matrix(S.V).det()) == 1
    d = S.diagonal
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert d == nz + [0] * (len(d) - len(nz))
    off = [S.D[i][j] for i in range(len(A)) for j in range(len(A[0])) if i != j]
    assert not any(off)


def test_snf_terminates_when_pivot_divides():
    # the extended gcd of (3, -3) is a swap; the reduction must still terminate
    A = [[0, 6, 3, 3, -4], [-1, 0, 6, -1, 4], [-9, 1, 0, 6, 0], [-5, 6, -9, -6, 5], [-2, 0, -8, -5, 3]]
    S = snf(A)
    assert matmul(matmul(S.U, A), S.V) == S.D
    prod = 1
    for x in S.diagonal:
        prod *= x
    assert prod == abs(sympy.Matrix(A).det())


def test_snf_product_is_determinant():
    rng = random.Random(5)
    for _ in range(25):
        A = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
        d = sympy.Matrix(A).det()
        prod = 1
        for x in normal_forms(A)[2].diagonal:
            prod *= x
        assert prod == abs(d)


def test_kernel_examples(gram75):
    K0 = kernel_saturated([[0] * 3] * 3)
    assert len(K0) == 3 and abs(sympy.Matrix(K0).det()) == 1
    assert kernel_saturated([[2, 1], [1, 1]]) == []
    K = kernel_saturated(gram75)
    assert len(K) == 35
    assert not any(any(row) for row in matmul(gram75, transpose(K)))


def test_kernel_is_saturated():
    G = [[2, 4], [4, 8]]
    K = kernel_saturated(G)
    assert K == [[-2, 1]] or K == [[2, -1]]


def _random_unimodular_move(G, rng):
    """Apply a random generator move (swap, negate, add) to the Gram matrix."""
    n = len(G)
    T = [[int(i == j) for j in range(n)] for i in range(n)]
    kind = rng.choice(["swap", "neg", "add"])
    i, j = rng.sample(range(n), 2)
    if kind == "swap":
        T[i], T[j] = T[j], T[i]
    elif kind == "neg":
        T[i][i] = -1
    else:
        T[i][j] = rng.choice([-2, -1, 1, 2])
    return matmul(matmul(T, G), transpose(T))


def test_image_lattice_invariant_under_generator_moves(gram75):
    from quintic75.quotient import godeaux_gram

    rng = random.Random(2024)
    fixtures = [godeaux_gram()[0], [row[:30] for row in gram75[:30]]]
    base = [image_lattice(G) for G in fixtures]
    for trial in range(100):
        k = trial % len(fixtures)
        G = fixtures[k]
        for _ in range(3):
            G = _random_unimodular_move(G, rng)
        rep = image_lattice(G)
        assert (rep.rank, rep.disc) == (base[k].rank, base[k].disc)


def test_image_lattice_two_routes(gram75):
    rep = image_lattice(gram75)
    assert image_lattice_by_pivots(gram75) == (rep.rank, rep.disc)


def test_image_lattice_independent_of_completion():
    from quintic75.quotient import godeaux_gram

    G = godeaux_gram()[0]
    ref = image_lattice(G)

    def shear(comp, sat):
        # add kernel vectors to complement vectors: still a completion
        out = [list(r) for r in comp]
        for i, r in enumerate(out):
            v = sat[i % len(sat)]
            out[i] = [a + 3 * b for a, b in zip(r, v)]
        return out

    assert image_lattice(G, complement_transform=shear).disc == ref.disc


@settings(deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_nonsingular_gram_gives_determinant(B):
    G = matmul(B, transpose(B))
    d = det_exact(G)
    rep = image_lattice(G)
    if d != 0:
        assert (rep.rank, rep.disc) == (len(G), d)
    assert image_lattice_by_pivots(G) == (rep.rank, rep.disc)


def test_rank_mod_p_consistency(gram75):
    for p in (10007, 65537):
        assert rank_mod_p(gram75, p) == 40

