from fractions import Fraction

from hypothesis import given, strategies as st

from primrep.scalars import (
    Approx,
    Gaussian,
    RootOfUnity,
    error_bound,
    format_scalar,
    is_exact,
    scalar_equal,
    to_complex,
)


def test_root_normalization_and_simplify():
    assert RootOfUnity(2, 4) == RootOfUnity(1, 2)
    assert RootOfUnity(3, 6).simplify() == -1
    assert RootOfUnity(0, 5).simplify() == 1


def test_order_four_roots_stay_exact():
    i = RootOfUnity(1, 4)
    s = i + 1
    assert isinstance(s, Gaussian) and s == Gaussian(1, 1)
    assert i * i == -1
    assert is_exact(i - Fraction(1, 2))


def test_other_roots_drop_to_approx_with_bound():
    w = RootOfUnity(1, 3)
    s = w + w.conjugate()
    assert isinstance(s, Approx)
    assert scalar_equal(s, -1, tol=1e-12)
    assert error_bound(s) > 0


def test_products_of_roots_are_exact():
    w = RootOfUnity(1, 6)
    assert w**6 == 1
    assert w * w * w == -1


def test_format_scalar():
    assert format_scalar(Fraction(7, 2)) == "7/2"
    assert format_scalar(Gaussian(0, -1)) == "0-1i"


@given(st.integers(0, 23), st.integers(0, 23))
def test_root_multiplication_matches_complex(a, b):
    x, y = RootOfUnity(a, 24), RootOfUnity(b, 24)
    assert abs(to_complex(x * y) - complex(x) * complex(y)) < 1e-12


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50),
       st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_gaussian_field_ops_exact(a, b, c, d):
    x, y = Gaussian(a, b), Gaussian(c, d)
    assert (x + y) - y == x
    if c or d:
        assert (x * y) / y == x
