from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from primrep.linalg import row_reduce, solve_exact


def test_unique_solution():
    sol = solve_exact([[2, 1], [1, 3]], [3, 5])
    assert sol.unique and sol.particular == (Fraction(4, 5), Fraction(7, 5))


def test_inconsistent():
    sol = solve_exact([[1, 1], [2, 2]], [1, 3])
    assert not sol.consistent


def test_least_norm_and_kernel():
    sol = solve_exact([[1, 1]], [2])
    assert sol.particular == (1, 1)
    assert len(sol.kernel) == 1
    k = sol.kernel[0]
    assert k[0] + k[1] == 0


def test_rational_entries():
    sol = solve_exact([[Fraction(1, 2), Fraction(1, 3)], [1, -1]], [1, 0])
    assert sol.particular == (Fraction(6, 5), Fraction(6, 5))


def test_errors():
    with pytest.raises(ValueError):
        solve_exact([[1]], [1, 2])
    with pytest.raises(ValueError):
        solve_exact([], [])


def test_row_reduce_pivots():
    M, piv = row_reduce([[0, 2, 4], [1, 1, 1], [1, 3, 5]])
    assert piv == [0, 1]


mat = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.tuples(
            st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r),
            st.lists(st.fractions(max_denominator=7), min_size=c, max_size=c),
        )
    )
)


@settings(max_examples=200)
@given(mat)
def test_solution_solves_consistent_systems(data):
    A, x0 = data
    b = [sum(a * x for a, x in zip(row, x0)) for row in A]
    sol = solve_exact(A, b)
    assert sol.consistent
    for row, rhs in zip(A, b):
        assert sum(a * x for a, x in zip(row, sol.particular)) == rhs
        for v in sol.kernel:
            assert sum(a * x for a, x in zip(row, v)) == 0
    # least norm: orthogonal to the kernel
    for v in sol.kernel:
        assert sum(a * x for a, x in zip(v, sol.particular)) == 0
    assert sol.rank + len(sol.kernel) == len(x0)
