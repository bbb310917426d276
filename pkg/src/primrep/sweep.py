"""Vectorized checks of the Moebius-weighted twisted-sum closed forms.

For a block of characters psi and every character phi, the brute-force sum
at each n is one matrix product over the pairs (a, b, d) with a*b*d^2 = n.
The closed form is multiplicative in n, so it is a product of per-prime-power
tables, each built once per (p, e).

Pairs of real characters run in exact int64 arithmetic (the per-prime
tables are computed with Fractions and must be integral); anything else
runs in complex128 and is compared with absolute tolerance tol * n^h.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import factorize, mobius
from .characters import DirichletCharacter, characters_mod
from .twisted_sums import local_factor, local_factor_real

LOCAL_FORMS = {"general": local_factor, "real": local_factor_real}


@dataclass
class SweepReport:
    label: str
    exact: bool
    pairs: int
    hs: tuple[int, ...]
    nmax: int
    checks: int = 0
    max_error: float = 0.0
    failures: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "exact": self.exact,
            "pairs": self.pairs,
            "h": list(self.hs),
            "n_max": self.nmax,
            "checks": self.checks,
            "max_error": self.max_error,
            "failures": self.failures[:20],
            "passed": self.passed,
            "seconds": round(self.seconds, 2),
        }


def all_characters(modulus_bound: int) -> list[DirichletCharacter]:
    return [chi for N in range(1, modulus_bound + 1) for chi in characters_mod(N)]


def _value_table(chars, nmax: int, dtype) -> np.ndarray:
    out = np.empty((len(chars), nmax + 1), dtype=dtype)
    idx = np.arange(nmax + 1)
    for i, chi in enumerate(chars):
        vals = np.array(chi.values_complex() if dtype is complex else chi.table, dtype=dtype)
        out[i] = vals[idx % chi.modulus]
    return out


def _triples(nmax: int):
    """For each n, arrays (a, b, mu(d)) over a*b*d^2 = n with mu(d) != 0."""
    A = [[] for _ in range(nmax + 1)]
    B = [[] for _ in range(nmax + 1)]
    C = [[] for _ in range(nmax + 1)]
    d = 1
    while d * d <= nmax:
        mu = mobius(d)
        if mu:
            for a in range(1, nmax // (d * d) + 1):
                for b in range(1, nmax // (d * d * a) + 1):
                    n = a * b * d * d
                    A[n].append(a)
                    B[n].append(b)
                    C[n].append(mu)
        d += 1
    return [(np.array(A[n]), np.array(B[n]), np.array(C[n])) for n in range(nmax + 1)]


@lru_cache(maxsize=None)
def _exact_local(form: str, p: int, e: int, h: int, a: int, b: int, in_N: bool, in_M: bool) -> int:
    val = Fraction(LOCAL_FORMS[form](Fraction(p), e, h, a, b, in_N, in_M))
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral local factor at p={p}, e={e}")
    return val.numerator


def _exact_table(form, p, e, h, psi_vals, phi_vals, psi_in, phi_in) -> np.ndarray:
    # codes: 3 * inModulus + (value + 1)
    cp = 3 * psi_in + (psi_vals + 1)
    cf = 3 * phi_in + (phi_vals + 1)
    lut = np.zeros((6, 6), dtype=np.int64)
    for i in range(6):
        for j in range(6):
            # a character value is 0 exactly when p divides its modulus
            if (i >= 3) != (i % 3 == 1) or (j >= 3) != (j % 3 == 1):
                continue
            lut[i, j] = _exact_local(form, p, e, h, i % 3 - 1, j % 3 - 1, i >= 3, j >= 3)
    return lut[cp[:, None], cf[None, :]]


def _complex_table(form, p, e, h, psi_vals, phi_vals, psi_in, phi_in) -> np.ndarray:
    fn = LOCAL_FORMS[form]
    psi = psi_vals[:, None]
    phi = phi_vals[None, :]
    shape = (len(psi_vals), len(phi_vals))
    pf = float(p)
    with np.errstate(all="ignore"):
        r = np.broadcast_to(fn(pf, e, h, psi, phi, False, False), shape)
        if not (psi_in.any() or phi_in.any()):
            return np.array(r, dtype=complex)
        pN = np.broadcast_to(fn(pf, e, h, psi, phi, True, False), shape)
        qM = np.broadcast_to(fn(pf, e, h, psi, phi, False, True), shape)
        u = fn(pf, e, h, psi, phi, True, True)
    inN = psi_in[:, None]
    inM = phi_in[None, :]
    return np.where(inN & inM, u, np.where(inN, pN, np.where(inM, qM, r))).astype(complex)


def sweep(
    psis: list[DirichletCharacter],
    phis: list[DirichletCharacter],
    hs=(0, 1, 2, 3),
    nmax: int = 3000,
    forms=("general",),
    exact: bool | None = None,
    tol: float = 1e-9,
    chunk: int = 48,
    label: str = "sweep",
) -> SweepReport:
    """Compare brute force with each closed form in ``forms`` for all psi x phi pairs."""
    if exact is None:
        exact = all(c.is_real for c in psis + phis)
    if exact and not all(c.is_real for c in psis + phis):
        raise ValueError("exact sweep needs real characters")
    dtype = np.int64 if exact else complex
    report = SweepReport(label, exact, len(psis) * len(phis), tuple(hs), nmax)
    if not psis or not phis:
        return report
    t0 = time.perf_counter()
    triples = _triples(nmax)
    facts = [factorize(n).factors for n in range(1, nmax + 1)]
    phiV = _value_table(phis, nmax, dtype)
    phi_mod = np.array([c.modulus for c in phis])
    powers = np.arange(nmax + 1, dtype=np.int64 if exact else float)
    build = _exact_table if exact else _complex_table

    for start in range(0, len(psis), chunk):
        block = psis[start : start + chunk]
        psiV = _value_table(block, nmax, dtype)
        psi_mod = np.array([c.modulus for c in block])
        for h in hs:
            W = phiV * powers**h
            tables = {form: {} for form in forms}
            for n in range(1, nmax + 1):
                a, b, c = triples[n]
                brute = (psiV[:, a] * c) @ W[:, b].T
                bound = 0.0 if exact else tol * float(n) ** h
                for form in forms:
                    cache = tables[form]
                    closed = None
                    for p, e in facts[n - 1]:
                        key = (p, e)
                        if key not in cache:
                            cache[key] = build(
                                form, p, e, h, psiV[:, p],
                                phiV[:, p], psi_mod % p == 0, phi_mod % p == 0,
                            )
                        closed = cache[key] if closed is None else closed * cache[key]
                    if closed is None:
                        closed = np.ones_like(brute)
                    report.checks += brute.size
                    if exact:
                        bad = np.argwhere(closed != brute)
                    else:
                        err = np.abs(closed - brute)
                        report.max_error = max(report.max_error, float(err.max()) / max(1.0, float(n) ** h))
                        bad = np.argwhere(~(err <= bound))
                    for i, j in bad[: max(0, 20 - len(report.failures))]:
                        report.failures.append({
                            "form": form,
                            "psi": block[i].syntax,
                            "phi": phis[j].syntax,
                            "h": h,
                            "n": n,
                            "brute": str(brute[i, j]),
                            "closed": str(closed[i, j]),
                        })
    report.seconds = time.perf_counter() - t0
    return report


def closed_form_sweeps(modulus_bound: int = 36, hs=(0, 1, 2, 3), nmax: int = 3000) -> list[SweepReport]:
    """Full closed form over all pairs, and the real-psi form over every real psi."""
    chars = all_characters(modulus_bound)
    real = [c for c in chars if c.is_real]
    general = [c for c in chars if not c.is_real]
    return [
        sweep(real, real, hs, nmax, ("general", "real"), exact=True, label="real x real (exact)"),
        sweep(real, general, hs, nmax, ("general", "real"), exact=False, label="real x general"),
        sweep(general, chars, hs, nmax, ("general",), exact=False, label="general x all"),
    ]
