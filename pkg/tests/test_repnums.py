import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_reps
from primrep.repnums import (
    DiagonalForm,
    count_primitive,
    count_representations,
    parse_form,
    primitive_by_inclusion_exclusion,
    primitive_from_rep,
    primitive_series,
    rep_from_primitive,
    rep_series,
)

# frozen from the box-scan oracle in oracles.py
R4 = [8, 24, 32, 24, 48, 96, 64, 24, 104, 144, 96, 96, 112, 192, 192, 24, 144, 312, 160, 144]
RP4 = [8, 24, 32, 16, 48, 96, 64, 0, 96, 144, 96, 64, 112, 192, 192, 0, 144, 288, 160, 96]
R6 = [12, 60, 160, 252, 312, 544, 960, 1020, 876, 1560, 2400, 2080]
RP6 = [12, 60, 160, 240, 312, 544, 960, 960, 864, 1560, 2400, 1920]
R1115 = [6, 12, 8, 6, 26, 36, 24, 28, 42, 72, 72, 8, 48, 108, 48, 54]
RP1115 = [6, 12, 8, 0, 26, 36, 24, 16, 36, 72, 72, 0, 48, 108, 48, 48]


def test_frozen_four_squares():
    assert [count_representations("1,1,1,1", n) for n in range(1, 21)] == R4
    assert [count_primitive("1,1,1,1", n) for n in range(1, 21)] == RP4
    assert [count_primitive("1,1,1,1", n, method="recursive") for n in range(1, 21)] == RP4
    assert count_representations("1,1,1,1", 0) == 1


def test_frozen_other_forms():
    assert [count_representations("1,1,1,1,1,1", n) for n in range(1, 13)] == R6
    assert [count_primitive("1,1,1,1,1,1", n) for n in range(1, 13)] == RP6
    assert [count_representations("1,1,1,5", n) for n in range(1, 17)] == R1115
    assert [count_primitive("1,1,1,5", n) for n in range(1, 17)] == RP1115


def test_series_matches_enumeration():
    for form in ("1,1,1,1", "1,2,4,6", "1,1,1,1,1,1,1,1", "3,5"):
        s = rep_series(form, 300)
        assert s.counts[0] == 1
        assert all(s[n] == count_representations(form, n) for n in range(301))


def test_four_squares_no_primitive_multiple_of_eight():
    assert all(count_primitive("1,1,1,1", 8 * m) == 0 for m in range(1, 60))


def test_primitive_methods_agree():
    for form in ("1,1,1,1", "1,2,4,6", "1,1,1,1,1,1", "2,3,3"):
        s = primitive_series(form, 500)
        assert s.counts[0] == 0
        assert all(s[n] == count_primitive(form, n, method="recursive") for n in range(1, 501))
    with pytest.raises(ValueError):
        count_primitive("1,1", 5, method="guess")


def test_form_parsing():
    assert parse_form("1, 1,2").coefficients == (1, 1, 2)
    assert parse_form([2, 3]) == DiagonalForm((2, 3))
    with pytest.raises(ValueError, match="malformed"):
        parse_form("1,x")
    with pytest.raises(ValueError):
        parse_form("1,0,2")
    with pytest.raises(ValueError):
        count_primitive("1,1", 0)


small_forms = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple)


@settings(max_examples=60, deadline=None)
@given(small_forms, st.integers(1, 40))
def test_enumeration_matches_box_scan(coeffs, n):
    assert count_representations(coeffs, n) == naive_reps(coeffs, n)
    assert count_primitive(coeffs, n) == naive_reps(coeffs, n, primitive=True)
    assert count_primitive(coeffs, n, method="recursive") == naive_reps(coeffs, n, primitive=True)


@settings(max_examples=60, deadline=None)
@given(small_forms, st.integers(1, 400))
def test_primitive_transforms_agree(coeffs, n):
    r = lambda k: count_representations(coeffs, k)  # noqa: E731
    rp = count_primitive(coeffs, n)
    assert primitive_from_rep(r, n) == rp
    assert primitive_by_inclusion_exclusion(r, n) == rp
    assert rep_from_primitive(lambda k: count_primitive(coeffs, k), n) == r(n)


@given(st.lists(st.integers(-1000, 1000), min_size=200, max_size=200), st.integers(1, 199))
def test_moebius_round_trip(values, n):
    f = lambda k: values[k]  # noqa: E731
    g = lambda k: primitive_from_rep(f, k)  # noqa: E731
    assert rep_from_primitive(g, n) == f(n)
    h = lambda k: rep_from_primitive(f, k)  # noqa: E731
    assert primitive_from_rep(h, n) == f(n)
