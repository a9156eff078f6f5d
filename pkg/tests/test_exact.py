from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from quintic75.exact import (
    QB,
    QQ,
    DivisionByZero,
    FieldMismatch,
    FFElement,
    FieldTooLarge,
    FinField,
    SquareClass,
    ZeroInput,
    factor_mod_p,
    factorize,
    field_arithmetic,
    is_irreducible_mod_p,
    is_prime,
    resultant_int,
    roots_univariate,
    smallest_irreducible,
    square_class,
)
from quintic75.nfsqrt import nf_sqrt

B_POLY = [1, 0, 0, -1, 1]


def test_inverse_in_f7():
    F = FinField(7)
    assert field_arithmetic(F(3), None, "inv") == 5


def test_inverse_in_qb():
    b = QB.gen()
    assert field_arithmetic(b + 2, QB(-2) / (b + 2), "mul") == -2


def test_cube_root_of_unity_in_f4():
    F = FinField(2, 2)
    w = F.primitive_root_of_unity(3)
    assert w**3 == 1 and w != 1


def test_division_by_zero_and_mismatch():
    F = FinField(7)
    with pytest.raises(DivisionByZero):
        field_arithmetic(F(0), None, "inv")
    with pytest.raises(FieldMismatch):
        field_arithmetic(F(1), FinField(11)(1), "add")


def test_roots_examples():
    assert roots_univariate(B_POLY, FinField(5)) == [3]
    assert roots_univariate(B_POLY, FinField(2)) == []
    assert sorted(int(r) for r in roots_univariate([-1, 0, 1], FinField(7))) == [1, 6]
    # no roots over F_2 or F_4, four over F_16
    assert roots_univariate(B_POLY, FinField(2, 2)) == []
    assert len(roots_univariate(B_POLY, FinField(2, 4))) == 4


def test_roots_of_b_at_other_primes():
    for p in (19, 23, 83, 151):
        got = sorted(int(r) for r in roots_univariate(B_POLY, FinField(p)))
        # oracle: plain integer arithmetic
        assert got == [r for r in range(p) if (r**4 - r**3 + 1) % p == 0]
    assert [int(r) for r in roots_univariate(B_POLY, FinField(19))] == [9]
    assert sorted(int(r) for r in roots_univariate(B_POLY, FinField(23))) == [6, 14]


def test_field_too_large():
    with pytest.raises(FieldTooLarge):
        roots_univariate(B_POLY, FinField(433, 3), limit=10**6)


def test_square_class_examples():
    assert square_class(-603) == SquareClass(-1, 67)
    assert square_class(-1344) == SquareClass(-1, 21)
    assert square_class(9) == SquareClass(1, 1)
    with pytest.raises(ZeroInput):
        square_class(0)


def test_resultant_examples():
    assert resultant_int(B_POLY, [2, 3]) == 121
    assert resultant_int(B_POLY, [2, 1]) == 25
    assert resultant_int(B_POLY, [0, 1]) == 1


nonzero = st.integers(-10**6, 10**6).filter(lambda n: n != 0)


@given(nonzero, st.integers(1, 1000))
def test_square_class_invariant_under_squares(n, k):
    assert square_class(n * k * k) == square_class(n)
    assert square_class(n).value * n > 0


small_poly = st.lists(st.integers(-9, 9), min_size=2, max_size=5).filter(lambda c: c[-1] != 0)


@given(small_poly, small_poly)
def test_resultant_antisymmetry_and_sympy(f, g):
    df, dg = len(f) - 1, len(g) - 1
    assert resultant_int(f, g) == (-1) ** (df * dg) * resultant_int(g, f)
    assert resultant_int(f, g) == _sylvester_det(f, g)


def _sylvester_det(f, g):
    # oracle: determinant of the Sylvester matrix (sympy.resultant itself
    # returns the wrong sign on inputs such as (x, x^3 + 1))
    df, dg = len(f) - 1, len(g) - 1
    n = df + dg
    rows = []
    for i in range(dg):
        rows.append([0] * i + list(reversed(f)) + [0] * (n - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + list(reversed(g)) + [0] * (n - dg - 1 - i))
    return sympy.Matrix(rows).det()


@given(small_poly, st.integers(1, 9), st.integers(-9, 9))
def test_resultant_with_linear(f, c, d):
    # Res(f, c x - d) = (-c)^deg f * f(d/c)
    val = sum(Fraction(a) * Fraction(d, c) ** i for i, a in enumerate(f))
    assert resultant_int(f, [-d, c]) == (-c) ** (len(f) - 1) * val


rationals = st.fractions(max_denominator=1000)


@given(rationals, rationals.filter(lambda y: y != 0))
def test_rational_field_inverse(x, y):
    assert (x * y) * field_arithmetic(y, None, "inv") == x


@settings(max_examples=30)
@given(st.sampled_from([(2, 4), (3, 3), (5, 2), (7, 2), (19, 2)]), st.lists(st.integers(0, 10**6), min_size=7, max_size=7))
def test_frobenius_fixes_everything(pe, codes):
    F = FinField(*pe)
    for n in codes:
        x = FFElement(F, n % F.q)
        assert x**F.q == x


@given(st.sampled_from([(2, 4), (3, 2), (7, 2), (11, 1)]), st.integers(0, 10**6), st.integers(1, 10**6))
def test_finite_field_axioms(pe, a, b):
    F = FinField(*pe)
    x, y = FFElement(F, a % F.q), FFElement(F, b % F.q)
    assert x + y == y + x and x * y == y * x
    if y != 0:
        assert (x * y) / y == x


def test_smallest_irreducible_moduli():
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert smallest_irreducible(2, 4) == (1, 1, 0, 0, 1)  # x^4 + x + 1
    for p, e in [(3, 2), (5, 3), (2, 5)]:
        m = smallest_irreducible(p, e)
        x = sympy.symbols("x")
        assert sympy.Poly(sum(c * x**i for i, c in enumerate(m)), x, modulus=p).is_irreducible
        assert is_irreducible_mod_p(m, p)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19, 23, 83, 151, 229, 433])
def test_factor_mod_p_against_sympy(p):
    x = sympy.symbols("x")
    _, facs = sympy.factor_list(x**4 - x**3 + 1, modulus=p)
    ref = sorted(tuple(int(c) % p for c in reversed(sympy.Poly(f, x, modulus=p).all_coeffs())) for f, _ in facs)
    assert sorted(factor_mod_p(B_POLY, p)) == ref


def test_is_prime_and_factorize_agree_with_sympy():
    for n in list(range(2, 2000)) + [2**61 - 1, 10**12 + 39]:
        assert is_prime(n) == sympy.isprime(n)
    for n in [6765625, 180625, 607191552, 1517978880]:
        assert factorize(n) == sympy.factorint(n)


def test_number_field_square_roots():
    b = QB.gen()
    y = b * b + 3 * b - Fraction(1, 2)
    r = nf_sqrt(y * y)
    assert r is not None and r * r == y * y
    assert nf_sqrt(QB(-1)) is None
    assert nf_sqrt(QB(2)) is None
    assert not QB.is_square(b)
    a = QB(-2) / (b + 2)
    assert QB.is_square(a * a)
    assert QQ.is_square(Fraction(9, 4)) and not QQ.is_square(-4)
