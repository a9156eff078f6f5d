import pytest

from quintic75.exact import FinField
from quintic75.lines import (
    b_roots,
    base_lines,
    char2_model,
    frobenius_permutation,
    meet,
    reduce_lines,
    surface_a,
)


def test_75_distinct_lines_on_surface(lines_qb):
    assert len(lines_qb) == 75 and len(set(lines_qb)) == 75
    model = surface_a()
    assert all(L.lies_on(model) for L in lines_qb)


def test_base_lines_lie_on_every_member():
    from quintic75.pencil import build_pencil

    base = base_lines()
    assert len(set(base)) == 15
    for lam in (0, 1, 7):
        m = build_pencil(lam)
        assert all(L.lies_on(m) for L in base)


def test_gram_entries(gram75):
    n = len(gram75)
    assert all(gram75[i][i] == -3 for i in range(n))
    assert all(gram75[i][j] == gram75[j][i] in (0, 1) for i in range(n) for j in range(n) if i != j)


def test_intersection_counts_are_uniform(gram75):
    # the S_5 action is transitive on each family, so row sums agree within families
    deg = [sum(1 for x in row if x == 1) for row in gram75]
    assert len(set(deg[:15])) == 1 and len(set(deg[15:])) == 1


def test_meet_matches_point_incidence():
    # oracle: two coordinate lines x_i = x_j + x_k = x_l + x_m = 0 meet iff a common kernel exists
    base = base_lines()
    for L1 in base[:5]:
        for L2 in base:
            if L1 == L2:
                continue
            from quintic75.zlinalg import rank_exact

            rows = [list(p[:4]) for p in L1.points + L2.points]
            assert meet(L1, L2) == (rank_exact(rows) < 4)


def test_char2_lines(char2, lines135):
    assert len(lines135) == 135 and len(set(lines135)) == 135
    assert char2["family_sizes"] == (20, 40) and char2["family_overlap"] == 0
    model = char2_model()
    assert all(L.lies_on(model) for L in lines135)


@pytest.mark.parametrize("p", [19, 23])
def test_frobenius_fixes_lines_over_prime_field(lines_qb, p):
    F = FinField(p)
    for r in b_roots(p):
        red = reduce_lines(lines_qb, F, r)
        assert len(set(red)) == 75
        assert frobenius_permutation(red, p) == list(range(75))


def test_frobenius_on_char2_lines(lines135):
    # the model is defined over F_16, where x -> x^16 is the identity
    assert frobenius_permutation(lines135, 16) == list(range(135))
