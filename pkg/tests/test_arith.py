import math

import pytest
from hypothesis import given, strategies as st

from oracles import naive_factor, naive_mobius, naive_sigma
from primrep.arith import (
    FactoredInteger,
    delta_divides,
    divisors,
    factorize,
    is_prime,
    mobius,
    ord_p,
    radical,
    sigma,
    square_divisor_roots,
)


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(12).as_dict() == {2: 2, 3: 1}
    assert factorize(9973).as_dict() == {9973: 1}


def test_factorize_large_semiprime_uses_rho():
    p, q = 1_000_000_007, 998_244_353
    assert factorize(p * q).as_dict() == {q: 1, p: 1}
    assert factorize(2**61 - 1).as_dict() == {2**61 - 1: 1}


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-4)


def test_factored_integer_validates():
    with pytest.raises(ValueError):
        FactoredInteger(12, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        FactoredInteger(6, ((3, 1), (2, 1)))


def test_mobius_examples():
    assert [mobius(n) for n in (1, 12, 30, 7)] == [1, 0, -1, -1]


def test_delta_divides():
    assert delta_divides(4, 12) == 1
    assert delta_divides(8, 12) == 0
    assert all(delta_divides(1, n) == 1 for n in range(1, 50))
    with pytest.raises(ValueError):
        delta_divides(0, 3)


def test_divisors_and_square_roots():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(13) == [1, 13]
    assert square_divisor_roots(12) == [1, 2]
    assert square_divisor_roots(30) == [1]
    assert square_divisor_roots(144) == [1, 2, 3, 4, 6, 12]


def test_ord_p():
    assert ord_p(2, 12) == 2
    assert ord_p(5, 12) == 0
    assert ord_p(3, 81) == 4
    with pytest.raises(ValueError):
        ord_p(4, 16)


def test_sigma_and_radical():
    assert sigma(1, 6) == 12
    assert sigma(0, 12) == 6
    assert radical(72) == 6


pos = st.integers(min_value=1, max_value=20000)


@given(pos)
def test_factorize_matches_trial_division(n):
    f = factorize(n)
    assert f.as_dict() == naive_factor(n)
    assert math.prod(p**e for p, e in f.factors) == n
    assert list(f.primes) == sorted(f.primes)


@given(pos)
def test_mobius_matches_naive(n):
    assert mobius(n) == naive_mobius(n)


@given(pos)
def test_mobius_sum_over_divisors(n):
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


@given(pos, pos)
def test_mobius_multiplicative_on_coprime(a, b):
    if math.gcd(a, b) == 1:
        assert mobius(a * b) == mobius(a) * mobius(b)


@given(pos)
def test_divisor_count_and_square_roots(n):
    f = factorize(n)
    ds = divisors(n)
    assert len(ds) == math.prod(e + 1 for _, e in f.factors)
    assert ds == sorted(set(ds))
    assert all(n % (d * d) == 0 for d in square_divisor_roots(n))
    assert [d for d in ds if n % (d * d) == 0] == square_divisor_roots(n)


@given(st.integers(min_value=0, max_value=3), st.integers(min_value=1, max_value=3000))
def test_sigma_matches_naive(h, n):
    assert sigma(h, n) == naive_sigma(h, n)


@given(st.integers(min_value=2, max_value=10**6))
def test_is_prime_agrees_with_factorize(n):
    assert is_prime(n) == (factorize(n).factors == ((n, 1),))
