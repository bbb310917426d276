"""Integer arithmetic: factorization, divisors, the Moebius function."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

TRIAL_LIMIT = 1 << 20

# Deterministic Miller-Rabin witnesses for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL = _small_primes(1000)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact below 3.3e24, probable beyond)."""
    if n < 2:
        return False
    for p in _SMALL[:13]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Return a nontrivial factor of the odd composite n (Brent's variant)."""
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    f = _pollard_rho(n)
    _split_large(f, out)
    _split_large(n // f, out)


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer with its canonical prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("FactoredInteger requires a positive value")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"non-canonical factorization {self.factors!r}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors {self.factors!r} do not multiply to {self.value}")

    def __int__(self) -> int:
        return self.value

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __truediv__(self, other: FactoredInteger | int) -> FactoredInteger:
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        other = as_factored(other)
        exps = self.as_dict()
        for p, e in other.factors:
            if exps.get(p, 0) < e:
                raise ValueError(f"{other.value} does not divide {self.value}")
            exps[p] -= e
        return FactoredInteger(
            self.value // other.value, tuple((p, e) for p, e in sorted(exps.items()) if e)
        )


@lru_cache(maxsize=1 << 16)
def _factorize_cached(n: int) -> FactoredInteger:
    out: dict[int, int] = {}
    m = n
    for p in _SMALL:
        if p * p > m:
            break
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    else:
        p = _SMALL[-1] + 2
        while p < TRIAL_LIMIT and p * p <= m:
            while m % p == 0:
                out[p] = out.get(p, 0) + 1
                m //= p
            p += 2
        if m > 1 and p * p <= m:
            _split_large(m, out)
            m = 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return FactoredInteger(n, tuple(sorted(out.items())))


def factorize(n: int) -> FactoredInteger:
    """Factor ``n >= 1``: trial division up to 2**20, then Pollard rho."""
    if isinstance(n, FactoredInteger):
        return n
    n = int(n)
    if n < 1:
        raise ValueError(f"cannot factorize {n}: need n >= 1")
    return _factorize_cached(n)


def as_factored(n: int | FactoredInteger) -> FactoredInteger:
    return n if isinstance(n, FactoredInteger) else factorize(n)


def mobius(n: int | FactoredInteger) -> int:
    f = as_factored(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def delta_divides(d: int, n: int) -> int:
    """1 if d divides n, else 0."""
    if d < 1:
        raise ValueError("delta_divides needs d >= 1")
    return 1 if n % d == 0 else 0


def _divisors_from(factors) -> list[int]:
    divs = [1]
    for p, e in factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def divisors(n: int | FactoredInteger) -> list[int]:
    return _divisors_from(as_factored(n).factors)


def square_divisor_roots(n: int | FactoredInteger) -> list[int]:
    """All d >= 1 with d**2 dividing n, ascending."""
    return _divisors_from((p, e // 2) for p, e in as_factored(n).factors if e >= 2)


def squarefree_square_divisors(n: int | FactoredInteger) -> Iterator[tuple[int, int]]:
    """Yield ``(d, mu(d))`` for squarefree d with d**2 | n (the nonzero terms)."""
    primes = [p for p, e in as_factored(n).factors if e >= 2]
    for mask in product((0, 1), repeat=len(primes)):
        d, sign = 1, 1
        for p, bit in zip(primes, mask):
            if bit:
                d *= p
                sign = -sign
        yield d, sign


def ord_p(p: int, n: int | FactoredInteger) -> int:
    """p-adic valuation of n."""
    if not is_prime(p):
        raise ValueError(f"ord_p needs a prime, got {p}")
    if isinstance(n, FactoredInteger):
        return n.exponent(p)
    if n < 1:
        raise ValueError("ord_p needs n >= 1")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def sigma(h: int, n: int) -> int:
    """Plain divisor power sum sum_{m | n} m**h."""
    return sum(m**h for m in divisors(n))


def radical(n: int | FactoredInteger) -> int:
    return math.prod(as_factored(n).primes)
