"""Deliberately naive reference implementations, independent of the package."""

from __future__ import annotations

import math
from itertools import product


def naive_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_mobius(n: int) -> int:
    f = naive_factor(n)
    if any(e > 1 for e in f.values()):
        return 0
    return (-1) ** len(f)


def naive_sigma(h: int, n: int) -> int:
    return sum(m**h for m in range(1, n + 1) if n % m == 0)


def naive_reps(coeffs, n: int, primitive: bool = False) -> int:
    """Count integer vectors by scanning a box."""
    bounds = [math.isqrt(n // a) for a in coeffs]
    count = 0
    for x in product(*(range(-b, b + 1) for b in bounds)):
        if sum(a * v * v for a, v in zip(coeffs, x)) == n:
            if not primitive or math.gcd(*x) == 1:
                count += 1
    return count


def legendre(a: int, p: int) -> int:
    """Euler's criterion for odd primes p."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def jacobi_via_legendre(a: int, m: int) -> int:
    out = 1
    for p, e in naive_factor(m).items():
        out *= legendre(a, p) ** e
    return out


def naive_twisted(psi, phi, h: int, n: int):
    return sum(psi(n // m) * phi(m) * m**h for m in range(1, n + 1) if n % m == 0)


def naive_mobius_weighted(psi, phi, h: int, n: int):
    total = 0
    d = 1
    while d * d <= n:
        if n % (d * d) == 0:
            total += naive_mobius(d) * naive_twisted(psi, phi, h, n // (d * d))
        d += 1
    return total
