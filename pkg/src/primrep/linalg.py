"""Exact linear systems over the rationals.

Rows are scaled to integers and reduced fraction-free (cross-multiplication
followed by removing the row content), so entries never become Fractions
until the final back-substitution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LinearSolution:
    consistent: bool
    rank: int
    particular: tuple[Fraction, ...]
    kernel: tuple[tuple[Fraction, ...], ...]

    @property
    def unique(self) -> bool:
        return self.consistent and not self.kernel


def _integer_row(row: Sequence) -> list[int]:
    fr = [Fraction(x) for x in row]
    den = math.lcm(*(x.denominator for x in fr)) if fr else 1
    return [int(x * den) for x in fr]


def _primitive(row: list[int]) -> list[int]:
    g = math.gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Reduced echelon form with integer rows; returns (rows, pivot columns)."""
    M = [_primitive(_integer_row(r)) for r in rows]
    ncols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(M):
            break
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        if M[r][col] < 0:
            M[r] = [-x for x in M[r]]
        top = M[r]
        a = top[col]
        for i in range(len(M)):
            if i != r and M[i][col]:
                b = M[i][col]
                M[i] = _primitive([a * x - b * y for x, y in zip(M[i], top)])
        pivots.append(col)
        r += 1
    return M, pivots


def solve_exact(A: Sequence[Sequence], b: Sequence) -> LinearSolution:
    """All solutions of A x = b: least-norm particular solution plus a kernel basis."""
    if len(A) != len(b):
        raise ValueError("row count of A and length of b differ")
    if not A:
        raise ValueError("empty system")
    ncols = len(A[0])
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    M, pivots = row_reduce(aug)
    if ncols in pivots:
        return LinearSolution(False, len(pivots) - 1, (), ())
    rank = len(pivots)
    free = [c for c in range(ncols) if c not in pivots]
    x = [Fraction(0)] * ncols
    for row, col in zip(M, pivots):
        x[col] = Fraction(row[ncols], row[col])
    kernel = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, col in zip(M, pivots):
            v[col] = Fraction(-row[f], row[col])
        kernel.append(v)
    if kernel:
        x = _least_norm(x, kernel)
    return LinearSolution(True, rank, tuple(x), tuple(tuple(v) for v in kernel))


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _least_norm(x, kernel):
    """Project x orthogonally off span(kernel): x - K (K^T K)^-1 K^T x."""
    gram = [[_dot(u, v) for v in kernel] for u in kernel]
    rhs = [_dot(u, x) for u in kernel]
    coeffs = solve_exact(gram, rhs).particular  # Gram matrix is nonsingular
    out = list(x)
    for c, v in zip(coeffs, kernel):
        for i, vi in enumerate(v):
            out[i] -= c * vi
    return out
