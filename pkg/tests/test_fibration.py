from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quintic75.counting import k3_trace_candidates, resolve_trace
from quintic75.exact import FinField, is_prime, resultant_int
from quintic75.fibration import (
    _affine_counts,
    _weierstrass_check_general,
    a_root_in,
    bad_primes_k3,
    bad_primes_quintic,
    candidate_norms,
    classify_fibers,
    classify_prime,
    generic_config,
    k3_point_count,
    kodaira_type,
    quintic_resultants,
    weierstrass_AB,
)
from quintic75.lines import b_roots


def _A(lam, t):
    return (
        lam**2 * t**4
        - (4 + 8 * lam + 2 * lam**2) * t**3
        - (24 * lam + 12 + 11 * lam**2) * t**2
        - 4 * (2 * lam + 3) * (1 + lam) * t
        - 4 * (1 + lam) ** 2
    )


def _B(lam, t):
    inner = (2 * lam + 1) * (t**4 + t**3) + (3 * lam + 2) * t**2 + (2 * lam + 2) * t + 1 + lam
    return 16 * t * (t + 1) * (1 + lam) ** 2 * inner


def _ev(f, x):
    return sum(c * x**i for i, c in enumerate(f.c))


@pytest.mark.parametrize("lam", [Fraction(1), Fraction(-2, 7), Fraction(5, 3)])
def test_weierstrass_coefficients(lam):
    m = weierstrass_AB(lam)
    assert m.A.degree == 4 and m.B.degree == 6
    for t in (Fraction(0), Fraction(-1), Fraction(2), Fraction(-3, 5)):
        assert _ev(m.A, t) == _A(lam, t)
        assert _ev(m.B, t) == _B(lam, t)


def test_weierstrass_general_form():
    assert _weierstrass_check_general()


def test_kodaira_types():
    assert kodaira_type(1, 0)[0] == "I1"
    assert kodaira_type(4, 0)[0] == "I4"
    assert kodaira_type(3, 1)[0] == "III"


def test_generic_configuration():
    cfg = classify_fibers(Fraction(1))
    assert cfg.describe() == "8xI1 + 6xI2 + 1xI4"
    assert cfg.euler_sum == 24
    inf = cfg.infinity()
    assert inf.kind == "I4" and inf.split


def test_configuration_of_x_a():
    cfg = generic_config()
    assert cfg.describe() == "4xI1 + 8xI2 + 1xI4"
    assert cfg.euler_sum == 24
    assert cfg.infinity().kind == "I4" and cfg.infinity().split


@settings(max_examples=15, deadline=None)
@given(st.fractions(min_value=-20, max_value=20, max_denominator=30))
def test_euler_sum_is_24(lam):
    if lam in (0, -1, Fraction(-1, 2), Fraction(-2, 3)):
        return
    cfg = classify_fibers(lam)
    assert cfg.euler_sum == 24
    assert cfg.infinity().kind == "I4"


@pytest.mark.parametrize("p", [83, 151])
def test_merge_primes(p):
    v = classify_prime(p)
    assert v.status == "merge"
    assert "III" in " ".join(v.configs)


def test_good_prime_229():
    assert classify_prime(229).status == "good"


def test_k3_bad_primes():
    bad, merge = bad_primes_k3()
    assert bad == {2, 3, 5, 11, 17, 433}
    assert merge == {83, 151}


def test_candidate_primes_divide_a_norm():
    norms = candidate_norms()
    bad, merge = bad_primes_k3()
    for p in (bad | merge) - {2}:
        assert any(v.numerator % p == 0 or v.denominator % p == 0 for v in norms.values())


def test_quintic_bad_primes():
    assert bad_primes_quintic() == {3, 5, 11, 17, 433}


def _sylvester(f, g):
    """Res(f, g) as a Sylvester determinant (coefficients low to high)."""
    import sympy

    m, n = len(f) - 1, len(g) - 1
    F, G = list(reversed(f)), list(reversed(g))
    rows = [[0] * i + F + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + G + [0] * (m - 1 - i) for i in range(m)]
    return sympy.Matrix(rows).det()


def test_quintic_resultants_against_sylvester():
    res = quintic_resultants()
    assert res == {"-1": 1, "-3/2": 121, "-51/50": 6765625, "-13/25": 180625, "-1/2": 9, "inf": 25}
    from quintic75.exact import B_MODULUS

    assert abs(_sylvester(list(B_MODULUS), [-2 * 2 - 2 * -3, 3])) == 121
    assert abs(resultant_int(list(B_MODULUS), [2, 1])) == abs(_sylvester(list(B_MODULUS), [2, 1]))


def test_k3_counts():
    counts19 = {k3_point_count(a_root_in(FinField(19), r)).count for r in b_roots(19)}
    counts23 = {k3_point_count(a_root_in(FinField(23), r)).count for r in b_roots(23)}
    assert 676 in counts19
    assert 924 in counts23


@pytest.mark.parametrize("p", [19, 23])
def test_split_decisions_do_not_change_count_mod_q(p):
    F = FinField(p)
    for r in b_roots(p):
        a = a_root_in(F, r)
        assert (k3_point_count(a, F).count - k3_point_count(a, F, force_split=True).count) % p == 0


@pytest.mark.parametrize("p,s_count,x_count", [(19, 915, 676), (23, 1255, 924)])
def test_resolved_trace_is_a_candidate(p, s_count, x_count):
    res = resolve_trace(s_count, x_count, p)
    assert len(res) == 1
    assert res[0] in k3_trace_candidates(x_count, p)


@pytest.mark.parametrize("p", [7, 13])
def test_affine_counts_against_naive(p):
    F = FinField(p)
    import numpy as np

    A = np.arange(p, dtype=np.int64)
    B = (3 * np.arange(p, dtype=np.int64) + 1) % p
    got = _affine_counts(F, A, B)
    for i in range(p):
        a, b = int(A[i]), int(B[i])
        n = sum(1 for x in range(p) for u in range(p) if (u * u - x * (x * x + a * x + b)) % p == 0)
        assert got[i] == n


def test_affine_counts_over_f9():
    import numpy as np

    F = FinField(3, 2)
    els = list(F.elements())
    a, b = els[4], els[7]
    got = _affine_counts(F, np.array([a.n]), np.array([b.n]))[0]
    n = sum(1 for x in els for u in els if u * u == x * (x * x + a * x + b))
    assert got == n


def test_count_rejects_char_2():
    from quintic75.fibration import BadReduction

    F = FinField(2, 4)
    with pytest.raises(BadReduction):
        k3_point_count(F(3), F)


def test_is_prime_helper_consistent():
    assert all(is_prime(p) for p in bad_primes_quintic())
