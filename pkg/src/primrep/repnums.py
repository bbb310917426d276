"""Representation numbers of diagonal forms a1*x1^2 + ... + ak*xk^2.

Two independent oracles: memoized nested enumeration (``count_*``) and
truncated theta-series convolution (``rep_series``).  The Moebius
transforms relate r(n) and the primitive count r^p(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from .arith import as_factored, mobius, radical, square_divisor_roots


@dataclass(frozen=True)
class DiagonalForm:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coefficients)
        if not coeffs or any(a < 1 for a in coeffs):
            raise ValueError(f"form coefficients must be positive integers, got {self.coefficients!r}")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def __str__(self):
        return ",".join(map(str, self.coefficients))


def parse_form(text: str | Sequence[int] | DiagonalForm) -> DiagonalForm:
    """``"1,1,2"`` -> DiagonalForm((1, 1, 2))."""
    if isinstance(text, DiagonalForm):
        return text
    if isinstance(text, str):
        try:
            coeffs = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
        except ValueError:
            raise ValueError(f"malformed form {text!r}; expected a1,a2,...") from None
        return DiagonalForm(coeffs)
    return DiagonalForm(tuple(text))


@lru_cache(maxsize=None)
def _count(coeffs: tuple[int, ...], m: int) -> int:
    a, rest = coeffs[0], coeffs[1:]
    if not rest:
        if m % a:
            return 0
        q = m // a
        r = math.isqrt(q)
        if r * r != q:
            return 0
        return 1 if q == 0 else 2
    total = _count(rest, m)
    x = 1
    while a * x * x <= m:
        total += 2 * _count(rest, m - a * x * x)
        x += 1
    return total


@lru_cache(maxsize=None)
def _count_primitive(coeffs: tuple[int, ...], m: int, g: int) -> int:
    # g: radical of the gcd of the entries chosen so far (0 while all zero)
    if g == 1:
        return _count(coeffs, m) if coeffs else int(m == 0)
    if not coeffs:
        return 0
    a, rest = coeffs[0], coeffs[1:]
    if not rest:
        # last variable: a*y^2 = m, primitive iff gcd(g, y) == 1
        if m % a:
            return 0
        y = math.isqrt(m // a)
        if y == 0 or y * y != m // a:
            return 0
        g2 = radical(y) if g == 0 else math.gcd(g, y)
        return 2 if g2 == 1 else 0
    total = _count_primitive(rest, m, g)
    x = 1
    while a * x * x <= m:
        g2 = radical(x) if g == 0 else math.gcd(g, x)
        total += 2 * _count_primitive(rest, m - a * x * x, g2)
        x += 1
    return total


def count_representations(form: DiagonalForm | str, n: int) -> int:
    """Number of x in Z^k with sum a_i x_i^2 = n, by nested enumeration."""
    form = parse_form(form)
    if n < 0:
        return 0
    return _count(form.coefficients, n)


def count_primitive(form: DiagonalForm | str, n: int, method: str = "series") -> int:
    """Solutions with gcd(x_1, ..., x_k) = 1; the zero vector is never primitive.

    ``method="series"`` reads a cached ``primitive_series`` (grown by doubling);
    ``method="recursive"`` walks the variables one at a time for this n only.
    """
    form = parse_form(form)
    if n < 1:
        raise ValueError("count_primitive needs n >= 1")
    if method == "recursive":
        return _count_primitive(form.coefficients, n, 0)
    if method != "series":
        raise ValueError(f"unknown method {method!r}")
    cached = _PRIMITIVE_CACHE.get(form)
    if cached is None or cached.bound < n:
        bound = max(n, 2 * cached.bound if cached else 256)
        cached = _PRIMITIVE_CACHE[form] = primitive_series(form, bound)
    return cached.counts[n]


_PRIMITIVE_CACHE: dict[DiagonalForm, "RepSeries"] = {}


@dataclass(frozen=True)
class RepSeries:
    form: DiagonalForm
    bound: int
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]


def rep_series(form: DiagonalForm | str, bound: int) -> RepSeries:
    """Theta-series coefficients r(0..bound) by truncated convolution."""
    form = parse_form(form)
    if bound < 0:
        raise ValueError("bound must be >= 0")
    B = bound
    worst = (2 * math.isqrt(B) + 1) ** form.rank
    dtype = np.int64 if worst < 2**62 else object
    acc = np.zeros(B + 1, dtype=dtype)
    acc[0] = 1
    for a in form.coefficients:
        nxt = acc.copy()
        x = 1
        while a * x * x <= B:
            s = a * x * x
            nxt[s:] += 2 * acc[: B + 1 - s]
            x += 1
        acc = nxt
    return RepSeries(form, B, tuple(int(c) for c in acc))


def primitive_series(form: DiagonalForm | str, bound: int) -> RepSeries:
    """Primitive counts for 0..bound by enumeration, one variable at a time.

    The state after each variable is a truncated series per value of the
    radical of the gcd of the entries so far (0 while they are all zero);
    only the class with radical 1 survives at the end.
    """
    form = parse_form(form)
    if bound < 0:
        raise ValueError("bound must be >= 0")
    B = bound
    worst = (2 * math.isqrt(B) + 1) ** form.rank
    dtype = np.int64 if worst < 2**62 else object
    start = np.zeros(B + 1, dtype=dtype)
    start[0] = 1
    state = {0: start}
    for a in form.coefficients:
        nxt: dict[int, np.ndarray] = {}
        for g, acc in state.items():
            x = 0
            while a * x * x <= B:
                s = a * x * x
                if x == 0:
                    g2, mult = g, 1
                else:
                    g2, mult = (radical(x) if g == 0 else math.gcd(g, x)), 2
                out = nxt.get(g2)
                if out is None:
                    out = nxt[g2] = np.zeros(B + 1, dtype=dtype)
                out[s:] += mult * acc[: B + 1 - s]
                x += 1
        state = nxt
    final = state.get(1)
    counts = tuple(int(c) for c in final) if final is not None else (0,) * (B + 1)
    return RepSeries(form, B, counts)


def primitive_from_rep(r: Callable[[int], int], n: int):
    """sum_{d^2 | n} mu(d) r(n / d^2)."""
    f = as_factored(n)
    return sum(mobius(d) * r(f.value // (d * d)) for d in square_divisor_roots(f))


def rep_from_primitive(rp: Callable[[int], int], n: int):
    """sum_{d^2 | n} rp(n / d^2)."""
    f = as_factored(n)
    return sum(rp(f.value // (d * d)) for d in square_divisor_roots(f))


def primitive_by_inclusion_exclusion(r: Callable[[int], int], n: int):
    """sum over prime subsets S of (-1)^|S| r(n / prod_{p in S} p^2).

    Subsets whose squared product does not divide n are skipped.
    """
    f = as_factored(n)
    primes = f.primes
    total = 0
    for size in range(len(primes) + 1):
        for subset in combinations(primes, size):
            sq = math.prod(p * p for p in subset)
            if f.value % sq == 0:
                total += (-1) ** size * r(f.value // sq)
    return total
