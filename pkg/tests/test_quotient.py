import pytest

from quintic75.lines import pair
from quintic75.quotient import (
    godeaux_gram,
    godeaux_lattice,
    quotient_pairing,
    r_fixed_point_check,
    r_orbit,
    r_orbits,
    rotate,
)
from quintic75.zlinalg import image_lattice


def test_orbits(lines_qb):
    orbits = r_orbits(lines_qb)
    assert len(orbits) == 15
    assert all(len(o) == 5 for o in orbits)
    assert sorted(i for o in orbits for i in o) == list(range(75))


def test_rotation_has_order_5(lines_qb):
    for L in lines_qb[::7]:
        assert rotate(L, 5) == L and rotate(L, 1) != L


def test_godeaux_lattice():
    rep = godeaux_lattice()
    assert (rep.rank, rep.disc) == (8, -2)


def test_pairing_independent_of_representative(lines_qb):
    orbits = r_orbits(lines_qb)
    for o1 in orbits[::3]:
        for o2 in orbits[::4]:
            vals = {quotient_pairing(lines_qb[i], lines_qb[j]) for i in o1 for j in o2}
            assert len(vals) == 1


def test_self_pairing(lines_qb):
    G, classes = godeaux_gram(lines_qb)
    for k, c in enumerate(classes):
        L = c.representative
        assert G[k][k] == -3 + sum(pair(L, rotate(L, i)) for i in range(1, 5))
    assert all(G[i][j] == G[j][i] for i in range(15) for j in range(15))


def test_gram_independent_of_line_order(lines_qb):
    rep = image_lattice(godeaux_gram(list(reversed(lines_qb)))[0])
    assert (rep.rank, rep.disc) == (8, -2)


@pytest.mark.parametrize("p", [5, 11, 19])
def test_rotation_acts_freely(p):
    rep = r_fixed_point_check(p)
    assert rep.ok, rep.checks


def test_fixed_point_value_in_char_5():
    rep = r_fixed_point_check(5)
    assert rep.checks["model_value_at_(1,1,1,1,1)"] == 1


def test_d2_lattices(d2_result):
    r = d2_result
    assert (r.n_prime.rank, r.n_prime.disc) == (9, 1)
    assert (r.m_prime.rank, r.m_prime.disc) == (41, 2**8 * 3**4 * 5 * 11**4)
    assert (r.m2.rank, r.m2.disc) == (53, 2**16 * 5**2)
    assert len(r.extra_labels) == 12


def test_d2_selection_not_steered_by_target(d2_result):
    # the greedy pick reaches the discriminant without the target-driven swap
    from quintic75.quotient import d2_lattices

    assert d2_result.strategy == "greedy"
    free = d2_lattices(target_m2_disc=None)
    assert free.extra_labels == d2_result.extra_labels and free.m2.disc == d2_result.m2.disc


def test_d2_orbit(char2):
    l2 = char2["seeds"][1]
    orbit = r_orbit(l2)
    assert len(set(orbit)) == 5


def test_discriminant_signs(d2_result):
    # hyperbolic lattices of signature (1, r-1): the sign of the discriminant is (-1)^(r-1)
    for rep in (godeaux_lattice(), d2_result.n_prime, d2_result.m_prime, d2_result.m2):
        assert (rep.disc > 0) == ((rep.rank - 1) % 2 == 0)
