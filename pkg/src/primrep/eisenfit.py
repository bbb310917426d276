"""Fit a theta series by a rational combination of Eisenstein coefficients.

The basis at level N and weight k is indexed by triples (psi, phi, t) with
psi, phi primitive of conductors u, v, (psi phi)(-1) = (-1)^k and t*u*v | N.
Coefficients are the bare dilated twisted sums; constant terms and the
usual normalizing constants are absorbed into the fitted rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .arith import divisors
from .catalog import FormulaSpec, FormulaTerm, spec_to_dict
from .characters import (
    TRIVIAL,
    DirichletCharacter,
    characters_mod,
    fundamental_discriminants,
    kron,
)
from .linalg import solve_exact
from .repnums import DiagonalForm, RepSeries, parse_form
from .twisted_sums import sigma_twisted


class FitError(ValueError):
    pass


@dataclass(frozen=True)
class BasisTriple:
    psi: DirichletCharacter
    phi: DirichletCharacter
    t: int
    k: int

    @property
    def special(self) -> bool:
        """Weight 2 with both characters trivial: sigma(n) - t sigma(n/t)."""
        return self.k == 2 and self.psi.is_trivial and self.phi.is_trivial

    @property
    def label(self) -> str:
        return f"({self.psi.syntax}, {self.phi.syntax}, {self.t})"

    def __str__(self):
        return self.label


def _primitive_characters(N: int, real_only: bool) -> list[DirichletCharacter]:
    if real_only:
        return [TRIVIAL] + [kron(D) for D in fundamental_discriminants(N) if N % abs(D) == 0]
    out = [TRIVIAL]
    for u in divisors(N):
        if u > 1:
            out.extend(c for c in characters_mod(u) if c.is_primitive)
    return out


def _char_order_key(chi: DirichletCharacter):
    return (chi.conductor, chi.discriminant or 0, chi.exponents or ())


def enumerate_triples(N: int, k: int, real_only: bool = True) -> list[BasisTriple]:
    """Admissible triples, ordered by conductor of psi, conductor of phi, then t."""
    if N < 1:
        raise ValueError("level must be >= 1")
    if k < 2:
        raise ValueError("weight must be >= 2")
    chars = sorted(_primitive_characters(N, real_only), key=_char_order_key)
    sign = (-1) ** k
    out = []
    for psi in chars:
        for phi in chars:
            if psi.parity * phi.parity != sign:
                continue
            uv = psi.conductor * phi.conductor
            if N % uv:
                continue
            for t in divisors(N // uv):
                if k == 2 and uv * t == 1:
                    continue
                out.append(BasisTriple(psi, phi, t, k))
    out.sort(key=lambda tr: (tr.psi.conductor, tr.phi.conductor, tr.t,
                             _char_order_key(tr.psi), _char_order_key(tr.phi)))
    return out


def basis_coefficient(triple: BasisTriple, n: int):
    """q^n coefficient of the basis element, up to the uniform factor 2."""
    if n < 1:
        raise ValueError("basis_coefficient needs n >= 1")
    h = triple.k - 1
    dilated = sigma_twisted(triple.psi, triple.phi, h, n // triple.t) if n % triple.t == 0 else 0
    if triple.special:
        return sigma_twisted(TRIVIAL, TRIVIAL, 1, n) - triple.t * dilated
    return dilated


def infer_level(form: DiagonalForm | str) -> int:
    """Default candidate level 4 * lcm(a_i); a heuristic, callers may override."""
    form = parse_form(form)
    return 4 * math.lcm(*form.coefficients)


def weight_of(form: DiagonalForm | str) -> int:
    form = parse_form(form)
    if form.rank % 2:
        raise FitError(f"even rank required, form {form} has rank {form.rank}")
    if form.rank < 4:
        raise FitError(f"weight rank/2 must be >= 2, form {form} has rank {form.rank}")
    return form.rank // 2


@dataclass
class FitResult:
    form: DiagonalForm | None
    level: int
    weight: int
    triples: list[BasisTriple]
    values: list[Fraction]
    residual_ok: bool
    status: str
    train: tuple[int, int]
    validated_range: tuple[int, int]
    kernel: list[list[Fraction]] = field(default_factory=list)
    message: str = ""

    @property
    def coefficients(self) -> list[tuple[BasisTriple, Fraction]]:
        return list(zip(self.triples, self.values))

    def nonzero(self) -> list[tuple[BasisTriple, Fraction]]:
        return [(tr, c) for tr, c in self.coefficients if c]

    def to_formula_spec(self, label: str | None = None) -> FormulaSpec:
        h = self.weight - 1
        merged: dict[tuple, Fraction] = {}
        chars: dict[tuple, tuple] = {}

        def add(c, psi, phi, t):
            key = (psi.syntax, phi.syntax, t)
            merged[key] = merged.get(key, Fraction(0)) + c
            chars[key] = (psi, phi)

        for tr, c in self.nonzero():
            if tr.special:
                add(c, TRIVIAL, TRIVIAL, 1)
                add(-c * tr.t, TRIVIAL, TRIVIAL, tr.t)
            else:
                add(c, tr.psi, tr.phi, tr.t)
        terms = [
            FormulaTerm(c, *chars[key], h, key[2]) for key, c in merged.items() if c
        ]
        if not terms:
            terms = [FormulaTerm(Fraction(0), TRIVIAL, TRIVIAL, h, 1)]
        if label is None:
            label = f"fit {self.form}" if self.form is not None else "fit"
        return FormulaSpec(label, tuple(terms), self.form)

    def as_json_dict(self, label: str | None = None) -> dict:
        return spec_to_dict(self.to_formula_spec(label), self.level)

    def __call__(self, n: int):
        total = sum((c * basis_coefficient(tr, n) for tr, c in self.nonzero()), Fraction(0))
        return total.numerator if total.denominator == 1 else total


def _target_fn(target) -> Callable[[int], int]:
    if isinstance(target, RepSeries):
        return lambda n: target.counts[n]
    if callable(target):
        return target
    seq: Sequence = target
    return lambda n: seq[n]


def _rows(triples, ns):
    return [[basis_coefficient(tr, n) for tr in triples] for n in ns]


def _matches(triples, values, target, ns) -> int | None:
    """First n where the combination misses the target, or None."""
    for n in ns:
        if sum(c * basis_coefficient(tr, n) for tr, c in zip(triples, values) if c) != target(n):
            return n
    return None


def fit(
    target,
    N: int | None = None,
    k: int | None = None,
    train: tuple[int, int] = (1, 10),
    validate: tuple[int, int] = (11, 200),
    real_only: bool = True,
    form: DiagonalForm | str | None = None,
) -> FitResult:
    """Solve sum_i c_i basis_i(n) = target(n) exactly on ``train``, then check ``validate``.

    ``target`` is a RepSeries, a callable n -> value, or an indexable sequence.
    An inconsistent or unvalidated system gives ``residual_ok = False``.
    """
    if isinstance(target, RepSeries):
        form = target.form
    form = parse_form(form) if form is not None else None
    if form is not None:
        wk = weight_of(form)
        if k is not None and k != wk:
            raise FitError(f"weight {k} does not match rank {form.rank}")
        k = wk
        N = N if N is not None else infer_level(form)
    if k is None or N is None:
        raise FitError("level and weight are required when no form is given")
    if k < 2:
        raise FitError("weight must be >= 2")
    lo, hi = train
    vlo, vhi = validate
    if lo < 1 or hi < lo:
        raise FitError(f"bad training range {lo}..{hi}")
    f = _target_fn(target)
    triples = enumerate_triples(N, k, real_only)
    result = FitResult(form, N, k, triples, [], False, "", train, validate)
    if not triples:
        result.status, result.message = "empty_basis", f"no admissible triples at level {N}"
        return result
    if hi - lo + 1 < len(triples):
        raise FitError(
            f"training range has {hi - lo + 1} equations for {len(triples)} unknowns"
        )
    train_ns = range(lo, hi + 1)
    val_ns = range(vlo, vhi + 1) if vhi >= vlo else range(0)
    sol = solve_exact(_rows(triples, train_ns), [f(n) for n in train_ns])
    if not sol.consistent:
        result.status = "inconsistent"
        result.message = "no exact solution on the training range (cusp part or wrong level)"
        return result
    if sol.kernel and len(val_ns):
        ns = list(train_ns) + list(val_ns)
        sol = solve_exact(_rows(triples, ns), [f(n) for n in ns])
        if not sol.consistent:
            result.status = "validation_failed"
            result.message = "no member of the training solution set fits the validation range"
            return result
    result.values = list(sol.particular)
    result.kernel = [list(v) for v in sol.kernel]
    miss = _matches(triples, result.values, f, val_ns)
    if miss is not None:
        result.status = "validation_failed"
        result.message = f"fitted combination misses the target at n={miss}"
        return result
    result.residual_ok = True
    if sol.kernel:
        result.status = "underdetermined"
        result.message = f"solution set has a {len(sol.kernel)}-dimensional kernel; least-norm member reported"
    else:
        result.status = "ok"
    return result
