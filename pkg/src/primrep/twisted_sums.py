"""Twisted divisor sums and their Moebius-weighted averages.

``sigma_twisted(psi, phi, h, n) = sum_{m | n} psi(n/m) phi(m) m^h``.  The
weighted average ``sum_{d^2 | n} mu(d) sigma_twisted(n / d^2)`` has a closed
form as a product of per-prime factors.  The factor helpers below only use
``+ - * / **`` and ``.conjugate()``, so they accept exact scalars (pass the
prime as a Fraction) as well as numpy arrays of character values (pass the
prime as a float); the vectorized sweeps rely on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import FactoredInteger, as_factored, divisors, factorize, mobius, square_divisor_roots
from .characters import DirichletCharacter
from .scalars import RootOfUnity


@dataclass(frozen=True)
class NSplit:
    """n split by the primes of N (psi's modulus) and M (phi's modulus).

    u: primes of gcd(N, M); p: primes of N only; q: primes of M only.
    Exponents may be 0 for primes of N*M that do not divide n.
    """

    n: FactoredInteger
    u_part: tuple[tuple[int, int], ...]
    p_part: tuple[tuple[int, int], ...]
    q_part: tuple[tuple[int, int], ...]
    n1: FactoredInteger
    n2: FactoredInteger
    n3: FactoredInteger

    @property
    def r_part(self) -> tuple[tuple[int, int], ...]:
        return self.n1.factors


def split(n: int | FactoredInteger, N: int, M: int) -> NSplit:
    f = as_factored(n)
    primes_N = set(factorize(N).primes)
    primes_M = set(factorize(M).primes)
    u = tuple((p, f.exponent(p)) for p in sorted(primes_N & primes_M))
    p_ = tuple((p, f.exponent(p)) for p in sorted(primes_N - primes_M))
    q = tuple((p, f.exponent(p)) for p in sorted(primes_M - primes_N))
    bad = primes_N | primes_M
    n1 = FactoredInteger(
        f.value // _prod(f.factors, bad),
        tuple((p, e) for p, e in f.factors if p not in bad),
    )
    n3 = f / _prod(u, None)
    n2 = n3 / _prod(q, None)
    return NSplit(f, u, p_, q, n1, n2, n3)


def _prod(factors, only) -> int:
    out = 1
    for p, e in factors:
        if only is None or p in only:
            out *= p**e
    return out


def _exact(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, RootOfUnity):
        return x.simplify()
    return x


def _conj(x):
    return x.conjugate()


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _scaled(x, p, h: int):
    """x * p**h, leaving x untouched when h == 0 (keeps roots of unity exact)."""
    return x if h == 0 else x * p**h


# --- per-prime factors of the closed form --------------------------------


def u_factor(c: int) -> int:
    """Prime dividing both moduli, exponent c in n."""
    return 1 - (c >= 1) - (c >= 2) + (c >= 3)


def p_factor(p, gamma: int, phi_p, h: int):
    """Prime of N only, exponent gamma >= 0; 1 unless p^2 | n."""
    if gamma < 2:
        return 1
    return 1 - _conj(phi_p) ** 2 / p ** (2 * h)


def q_factor(nu: int, psi_q):
    """Prime of M only, exponent nu >= 0 (psi(q^0) = 1)."""
    lead = 1 - _conj(psi_q) ** 2 if nu >= 2 else 1
    return lead * psi_q**nu if nu else lead


def _geometric_quotient(x, k: int):
    """(1 - x^k) / (1 - x); equals k where x == 1."""
    if isinstance(x, np.ndarray):
        den = 1 - x
        degenerate = np.abs(den) < 1e-12
        safe = np.where(degenerate, 1, den)
        return np.where(degenerate, k, (1 - x**k) / safe)
    if x == 1:
        return k
    return _div(1 - x**k, 1 - x)


def r_factor(r, lam: int, psi_r, phi_r, h: int):
    """Prime coprime to N*M with exponent lam >= 1."""
    tail = 1 + _scaled(psi_r * _conj(phi_r), 1 / r, h)
    if lam < 2:
        return tail
    x = _scaled(phi_r * _conj(psi_r), r, h)
    unit = (phi_r * _conj(psi_r)) ** lam
    head = _div(1 - _conj(psi_r) ** 2, _scaled(unit, r, h * lam))
    return head * _geometric_quotient(x, lam - 1) + tail


def prefactor_local(p, e: int, phi_p, h: int):
    """Contribution p^(e h) phi(p)^e of a prime of n_2 to n_2^h phi(n_2)."""
    return _scaled(phi_p**e, p, h * e)


def local_factor(p, e: int, h: int, psi_p, phi_p, in_N: bool, in_M: bool):
    """Full closed-form contribution of the prime p appearing to exponent e in n."""
    if in_N and in_M:
        return u_factor(e)
    if in_N:
        return prefactor_local(p, e, phi_p, h) * p_factor(p, e, phi_p, h)
    if in_M:
        return q_factor(e, psi_p)
    return prefactor_local(p, e, phi_p, h) * r_factor(p, e, psi_p, phi_p, h)


# real-psi variant


def q_factor_real(nu: int, psi_q):
    return (1 - (nu >= 2)) * psi_q**nu if nu else 1


def p_factor_real(p, gamma: int, phi_p, h: int):
    if gamma < 2:
        return 1
    return 1 - _conj(phi_p**2) / p ** (2 * h)


def r_factor_real(r, psi_r, phi_r, h: int):
    return 1 + _scaled(psi_r * _conj(phi_r), 1 / r, h)


def local_factor_real(p, e: int, h: int, psi_p, phi_p, in_N: bool, in_M: bool):
    """Per-prime piece of c(n) * n_2^h * prod_{r | n} (1 + psi(r) conj(phi(r)) / r^h)."""
    if in_N and in_M:
        return u_factor(e)
    if in_N:
        return prefactor_local(p, e, phi_p, h) * p_factor_real(p, e, phi_p, h)
    if in_M:
        return q_factor_real(e, psi_p)
    return prefactor_local(p, e, phi_p, h) * r_factor_real(p, psi_p, phi_p, h)


# --- sums -----------------------------------------------------------------


def sigma_twisted(psi: DirichletCharacter, phi: DirichletCharacter, h: int, n: int):
    """sum_{m | n} psi(n/m) phi(m) m^h."""
    if n < 1:
        raise ValueError("sigma_twisted needs n >= 1")
    total = 0
    for m in divisors(n):
        a, b = psi(n // m), phi(m)
        if a == 0 or b == 0:
            continue
        total = total + (a * b) * m**h
    return _exact(total)


def mobius_weighted_sum_bruteforce(psi, phi, h: int, n: int):
    """sum_{d^2 | n} mu(d) sum_{m | n/d^2} psi(n/(m d^2)) phi(m) m^h, term by term."""
    f = as_factored(n)
    total = 0
    for d in square_divisor_roots(f):
        mu = mobius(d)
        if mu == 0:
            continue
        k = f.value // (d * d)
        for m in divisors(k):
            a, b = psi(k // m), phi(m)
            if a == 0 or b == 0:
                continue
            total = total + mu * (a * b) * m**h
    return _exact(total)


def mobius_weighted_sum_closed(psi, phi, h: int, n: int):
    """Closed form: n2^h phi(n2) times the u-, p-, q- and r-factors."""
    s = split(n, psi.modulus, phi.modulus)
    n2 = s.n2.value
    out = phi(n2)
    if out == 0:
        return 0
    out = _scaled(out, n2, h)
    for _, c in s.u_part:
        out = out * u_factor(c)
    for p, gamma in s.p_part:
        out = out * p_factor(Fraction(p), gamma, phi(p), h)
    for q, nu in s.q_part:
        out = out * q_factor(nu, psi(q))
    for r, lam in s.r_part:
        out = out * r_factor(Fraction(r), lam, psi(r), phi(r), h)
    return _exact(out)


def mobius_weighted_sum_real(psi, phi, h: int, n: int):
    """c(n) n2^h prod_{r | n} (1 + psi(r) conj(phi(r)) / r^h), for real psi."""
    if not psi.is_real:
        raise ValueError(f"{psi.syntax} is not a real character")
    s = split(n, psi.modulus, phi.modulus)
    n2 = s.n2.value
    c = phi(n2)
    if c == 0:
        return 0
    for _, cs in s.u_part:
        c = c * u_factor(cs)
    for q, nu in s.q_part:
        c = c * q_factor_real(nu, psi(q))
    for p, gamma in s.p_part:
        c = c * p_factor_real(Fraction(p), gamma, phi(p), h)
    out = _scaled(c, n2, h)
    for r in s.n.primes:
        out = out * r_factor_real(Fraction(r), psi(r), phi(r), h)
    return _exact(out)


def primitive_dilated_sum(psi, phi, h: int, t: int, n: int):
    """sum_{d^2 | n} mu(d) [t | n/d^2] sigma_twisted(n / (t d^2)).

    Nonzero terms need d^2 | n/t, so this is [t | n] times the closed form at n/t.
    """
    if t < 1:
        raise ValueError("dilation must be >= 1")
    if n % t:
        return 0
    return mobius_weighted_sum_closed(psi, phi, h, n // t)


def primitive_dilated_sum_bruteforce(psi, phi, h: int, t: int, n: int):
    total = 0
    for d in square_divisor_roots(n):
        k = n // (d * d)
        if k % t == 0:
            total = total + mobius(d) * sigma_twisted(psi, phi, h, k // t)
    return _exact(total)
