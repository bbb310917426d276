"""Closed formulas for r(n) and r^p(n) of specific diagonal forms.

A ``FormulaSpec`` is a rational combination of dilated twisted divisor sums
``c * [t | n] * sigma_h^{psi,phi}(n / t)``.  Each catalog entry pairs one
with a closed form for the primitive count, written case by case exactly as
stated (not re-derived), so that misstatements show up under verification.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .arith import FactoredInteger, as_factored, mobius, square_divisor_roots
from .characters import TRIVIAL, CharacterError, DirichletCharacter, kron, parse_character
from .repnums import DiagonalForm, parse_form
from .twisted_sums import primitive_dilated_sum, sigma_twisted


class FormulaSpecError(ValueError):
    pass


@dataclass(frozen=True)
class FormulaTerm:
    coefficient: Fraction
    psi: DirichletCharacter
    phi: DirichletCharacter
    h: int
    t: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.t < 1:
            raise FormulaSpecError("dilation must be >= 1")
        if self.h < 0:
            raise FormulaSpecError("weight exponent h must be >= 0")

    def value(self, n: int):
        if n % self.t:
            return 0
        return self.coefficient * sigma_twisted(self.psi, self.phi, self.h, n // self.t)


@dataclass(frozen=True)
class FormulaSpec:
    label: str
    terms: tuple[FormulaTerm, ...]
    form: DiagonalForm | None = None

    def __post_init__(self):
        if not self.terms:
            raise FormulaSpecError("a formula needs at least one term")
        if len({term.h for term in self.terms}) > 1:
            raise FormulaSpecError("mixed weight: all terms must share the same h")

    @property
    def h(self) -> int:
        return self.terms[0].h

    def __call__(self, n: int):
        return evaluate_formula(self, n)


def _int_if_whole(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def evaluate_formula(spec: FormulaSpec, n: int):
    """sum over terms of c * [t | n] * sigma_h^{psi,phi}(n / t)."""
    if n < 1:
        raise ValueError("evaluate_formula needs n >= 1")
    total = 0
    for term in spec.terms:
        total = total + term.value(n)
    return _int_if_whole(total)


def primitive_eisenstein_part(spec: FormulaSpec, n: int):
    """Termwise Moebius-weighted closed forms: sum_{d^2|n} mu(d) spec(n/d^2)."""
    total = 0
    for term in spec.terms:
        total = total + term.coefficient * primitive_dilated_sum(
            term.psi, term.phi, term.h, term.t, n
        )
    return _int_if_whole(total)


def primitive_by_definition(spec: FormulaSpec, n: int):
    f = as_factored(n)
    total = 0
    for d in square_divisor_roots(f):
        mu = mobius(d)
        if mu:
            total = total + mu * evaluate_formula(spec, f.value // (d * d))
    return _int_if_whole(total)


# JSON -----------------------------------------------------------------------


def _parse_coeff(raw) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise FormulaSpecError(f"schema violation: coeff must be a 'p/q' string, got {raw!r}")
    try:
        return Fraction(str(raw).strip())
    except (ValueError, ZeroDivisionError):
        raise FormulaSpecError(f"schema violation: bad rational {raw!r}") from None


def _char(raw) -> DirichletCharacter:
    if not isinstance(raw, str):
        raise FormulaSpecError(f"schema violation: character must be a string, got {raw!r}")
    try:
        return parse_character(raw)
    except CharacterError as exc:
        if "fundamental" in str(exc):
            raise FormulaSpecError(f"non-fundamental discriminant: {exc}") from None
        raise FormulaSpecError(f"unknown character syntax: {exc}") from None


def _int_field(obj: dict, key: str, minimum: int, default=None) -> int:
    val = obj.get(key, default)
    if isinstance(val, bool) or not isinstance(val, int):
        raise FormulaSpecError(f"schema violation: {key!r} must be an integer")
    if val < minimum:
        if key == "t":
            raise FormulaSpecError("dilation must be >= 1")
        raise FormulaSpecError(f"schema violation: {key!r} must be >= {minimum}")
    return val


def spec_from_dict(doc: dict) -> FormulaSpec:
    if not isinstance(doc, dict):
        raise FormulaSpecError("schema violation: top level must be an object")
    unknown = set(doc) - {"label", "h", "form", "terms", "level"}
    if unknown:
        raise FormulaSpecError(f"schema violation: unknown keys {sorted(unknown)}")
    label = doc.get("label")
    if not isinstance(label, str) or not label:
        raise FormulaSpecError("schema violation: 'label' must be a nonempty string")
    h = _int_field(doc, "h", 0)
    terms_raw = doc.get("terms")
    if not isinstance(terms_raw, list) or not terms_raw:
        raise FormulaSpecError("schema violation: 'terms' must be a nonempty list")
    terms = []
    for raw in terms_raw:
        if not isinstance(raw, dict):
            raise FormulaSpecError("schema violation: each term must be an object")
        extra = set(raw) - {"coeff", "psi", "phi", "t", "h"}
        if extra or not {"coeff", "psi", "phi"} <= set(raw):
            raise FormulaSpecError(f"schema violation: bad term keys {sorted(raw)}")
        th = _int_field(raw, "h", 0, default=h)
        if th != h:
            raise FormulaSpecError(f"mixed weight: term has h={th}, spec has h={h}")
        terms.append(
            FormulaTerm(
                _parse_coeff(raw["coeff"]),
                _char(raw["psi"]),
                _char(raw["phi"]),
                h,
                _int_field(raw, "t", 1, default=1),
            )
        )
    form = None
    if doc.get("form") is not None:
        try:
            form = parse_form(doc["form"])
        except (ValueError, TypeError) as exc:
            raise FormulaSpecError(f"schema violation: form: {exc}") from None
    return FormulaSpec(label, tuple(terms), form)


def parse_formula_spec(text: str) -> FormulaSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormulaSpecError(f"schema violation: invalid JSON ({exc})") from None
    return spec_from_dict(doc)


def spec_to_dict(spec: FormulaSpec, level: int | None = None) -> dict:
    doc = {"label": spec.label, "h": spec.h}
    if spec.form is not None:
        doc["form"] = list(spec.form.coefficients)
    if level is not None:
        doc["level"] = level
    doc["terms"] = [
        {"coeff": str(t.coefficient), "psi": t.psi.syntax, "phi": t.phi.syntax, "t": t.t}
        for t in spec.terms
    ]
    return doc


def spec_to_json(spec: FormulaSpec, level: int | None = None) -> str:
    return json.dumps(spec_to_dict(spec, level), indent=2)


# Primitive closed forms, case by case -------------------------------------------------

F = Fraction
ONE = TRIVIAL
CHI_M4, CHI_M3, CHI_5, CHI_8, CHI_M8, CHI_12, CHI_24 = (
    kron(-4), kron(-3), kron(5), kron(8), kron(-8), kron(12), kron(24)
)


def _d(k: int, n: int) -> int:
    return 1 if n % k == 0 else 0


def _euler(f: FactoredInteger, chi: DirichletCharacter, power: int, exclude=()) -> Fraction:
    """prod over primes p | n, p not excluded, of (1 + chi(p) / p^power)."""
    out = F(1)
    for p in f.primes:
        if p not in exclude:
            out *= 1 + F(chi(p), p**power)
    return out


def _split_2_3(n: int):
    alpha = beta = 0
    m = n
    while m % 2 == 0:
        m //= 2
        alpha += 1
    while m % 3 == 0:
        m //= 3
        beta += 1
    return alpha, beta


def _two_part(n: int, chi_a: DirichletCharacter, chi_b: DirichletCharacter, alpha: int) -> Fraction:
    """2^-alpha chi_a(2^alpha) chi_b(n / 2^alpha)."""
    return F(chi_a(2**alpha) * chi_b(n >> alpha), 2**alpha)


def _three_part(n: int, chi_a: DirichletCharacter, chi_b: DirichletCharacter, beta: int) -> Fraction:
    """3^-beta chi_a(3^beta) chi_b(n / 3^beta)."""
    return F(chi_a(3**beta) * chi_b(n // 3**beta), 3**beta)


def rp_four_squares(f: FactoredInteger) -> Fraction:
    n = f.value
    return 8 * (1 + F(1, 2) * _d(2, n) - _d(4, n) - F(1, 2) * _d(8, n)) * n * _euler(f, ONE, 1, (2,))


def six_squares_d(n: int) -> int:
    """Case table for the six-squares prefactor."""
    if n % 4 == 1:
        return 12
    if n % 4 == 3:
        return 20
    if n % 8 in (0, 2, 4):
        return 15
    return 17


def six_squares_d_formula(n: int) -> Fraction:
    """16 - [4|n] - 4^(1-alpha) (1 - [4|n]) chi_-4(n / 2^alpha)."""
    alpha, _ = _split_2_3(n)
    return 16 - _d(4, n) - F(4) ** (1 - alpha) * (1 - _d(4, n)) * CHI_M4(n >> alpha)


def rp_six_squares(f: FactoredInteger) -> Fraction:
    n = f.value
    return six_squares_d(n) * n**2 * _euler(f, CHI_M4, 2)


def rp_eight_squares(f):
    n = f.value
    pre = 16 - 2 * _d(2, n) + F(7, 2) * _d(4, n) + F(1, 2) * _d(8, n)
    return pre * n**3 * _euler(f, ONE, 3, (2,))


def rp_1112(f):
    n = f.value
    if n % 2:
        d2 = -2 * CHI_8(n) + 8
    elif n % 4:
        d2 = -CHI_8(n // 2) + 8
    else:
        d2 = 6
    return d2 * n * _euler(f, CHI_8, 1)


def rp_1113(f):
    n = f.value
    alpha, beta = _split_2_3(n)
    A = 2 + _two_part(n, CHI_M3, CHI_M4, alpha)
    B = 3 - _three_part(n, CHI_M4, CHI_M3, beta)
    if alpha <= 1 and beta <= 1:
        d3 = A * B
    elif beta <= 1:
        d3 = F(3, 2) * B
    elif alpha <= 1:
        d3 = F(8, 3) * A
    else:
        d3 = F(4)
    return d3 * n * _euler(f, CHI_12, 1)


def rp_1114(f):
    n = f.value
    chi_n4 = CHI_M4(n // 4) if n % 4 == 0 else 0
    d4 = (
        (4 + 2 * CHI_M4(n))
        + 2 * _d(2, n)
        - (2 * CHI_M4(n) + F(1, 2) * chi_n4 + 5) * _d(4, n)
        + F(1, 2) * _d(8, n)
        - F(1, 2) * _d(16, n)
        - _d(32, n)
    )
    return d4 * n * _euler(f, ONE, 1, (2,))


def rp_1122(f):
    n = f.value
    return (4 + _d(4, n) - 3 * _d(8, n) - 2 * _d(16, n)) * n * _euler(f, ONE, 1, (2,))


def rp_1115(f):
    n = f.value
    if n % 5:
        d6 = CHI_5(n) + 5
    elif n % 25:
        d6 = F(1, 5) * CHI_5(n // 5) + 5
    else:
        d6 = F(24, 5)
    pre = 1 + F(1, 2) * _d(2, n) - F(3, 2) * _d(4, n) + _d(8, n)
    return d6 * pre * n * _euler(f, CHI_5, 1, (2,))


def rp_1123(f):
    n = f.value
    alpha, beta = _split_2_3(n)
    A = 4 - _two_part(n, CHI_M3, CHI_M8, alpha)
    B = 3 + _three_part(n, CHI_M8, CHI_M3, beta)
    if alpha <= 1 and beta <= 1:
        d7 = F(1, 3) * A * B
    elif beta <= 1:
        d7 = B
    elif alpha <= 1:
        d7 = F(8, 9) * A
    else:
        d7 = F(8, 3)
    return d7 * n * _euler(f, CHI_24, 1)


def rp_1124(f):
    n = f.value
    if n % 2:
        d8 = F(4)
    elif n % 4:
        d8 = 4 - CHI_8(n // 2)
    elif n % 8:
        d8 = 3 - F(1, 2) * CHI_8(n // 4)
    else:
        d8 = F(3)
    return d8 * n * _euler(f, CHI_8, 1)


def rp_1222(f):
    n = f.value
    if n % 2:
        d9 = -2 * CHI_8(n) + 4
    elif n % 4:
        d9 = -CHI_8(n // 2) + 4
    else:
        d9 = 3
    return d9 * n * _euler(f, CHI_8, 1)


def rp_1133(f):
    n = f.value
    d10 = (
        1
        - F(1, 2) * _d(2, n)
        - F(2, 3) * _d(3, n)
        + F(1, 2) * _d(4, n)
        + F(1, 3) * _d(6, n)
        + F(1, 2) * _d(8, n)
        - F(1, 3) * _d(9, n)
        - F(1, 3) * _d(12, n)
        + F(1, 6) * _d(18, n)
        - F(1, 3) * _d(24, n)
        - F(1, 6) * _d(36, n)
        - F(1, 6) * _d(72, n)
    )
    return 4 * d10 * n * _euler(f, ONE, 1, (2, 3))


def _d11_12(n, sign):
    alpha, beta = _split_2_3(n)
    A = (1 - F(1, 4) * _d(4, n)) + sign * _d(2, n) * _two_part(n, CHI_M3, CHI_M4, alpha)
    B = 3 - sign * _three_part(n, CHI_M4, CHI_M3, beta)
    if alpha <= 2 and beta <= 1:
        return A * B
    if beta <= 1:
        return F(3, 4) * B
    if alpha <= 2:
        return F(8, 3) * A
    return F(2)


def rp_1126(f):
    n = f.value
    return _d11_12(n, -1) * n * _euler(f, CHI_12, 1)


def rp_1223(f):
    n = f.value
    return _d11_12(n, +1) * n * _euler(f, CHI_12, 1)


def rp_1224(f):
    n = f.value
    pre = 2 - F(1, 2) * _d(4, n) + _d(8, n) - F(3, 2) * _d(16, n) - _d(32, n)
    return pre * n * _euler(f, ONE, 1, (2,))


def rp_1226(f):
    n = f.value
    alpha, beta = _split_2_3(n)
    A = 2 + _two_part(n, CHI_M3, CHI_M8, alpha)
    B = 3 - _three_part(n, CHI_M8, CHI_M3, beta)
    if alpha <= 1 and beta <= 1:
        d14 = F(1, 3) * A * B
    elif beta <= 1:
        d14 = F(1, 2) * B
    elif alpha <= 1:
        d14 = F(8, 9) * A
    else:
        d14 = F(4, 3)
    return d14 * n * _euler(f, CHI_24, 1)


def rp_1244(f):
    n = f.value
    if n % 2:
        d15 = F(2)
    elif n % 4:
        d15 = 2 - CHI_8(n // 2)
    elif n % 8:
        d15 = F(3, 2) - F(1, 2) * CHI_8(n // 4)
    else:
        d15 = F(3, 2)
    return d15 * n * _euler(f, CHI_8, 1)


def rp_1246(f):
    n = f.value
    alpha, beta = _split_2_3(n)
    A = F(1, 2) - F(1, 8) * _d(4, n) - _d(4, n) * _two_part(n, CHI_M3, CHI_M4, alpha)
    B = 3 + _three_part(n, CHI_M4, CHI_M3, beta)
    if alpha <= 3 and beta <= 1:
        d16 = A * B
    elif beta <= 1:
        d16 = F(3, 8) * B
    elif alpha <= 3:
        d16 = F(8, 3) * A
    else:
        d16 = F(1)
    return d16 * n * _euler(f, CHI_12, 1)


# Other stated shapes of r(n) ---------------------------


def jacobi_restricted_sum(n: int) -> int:
    """8 * sum of the divisors of n not divisible by 4."""
    return 8 * sum(m for m in range(1, n + 1) if n % m == 0 and m % 4)


def r_1114_character_prefactor(n: int) -> int:
    """(2 chi_-4(n) + 4) sigma(n) - 20 [4|n] sigma(n/4) + 24 [8|n] sigma(n/8) - 32 [16|n] sigma(n/16)."""
    s = lambda k: sigma_twisted(ONE, ONE, 1, k)  # noqa: E731
    out = (2 * CHI_M4(n) + 4) * s(n)
    for t, c in ((4, -20), (8, 24), (16, -32)):
        if n % t == 0:
            out += c * s(n // t)
    return out


def r_1133_stated(n: int) -> int:
    """The stated shape with -12 [3|n] sigma(n/2); sigma of a non-integer is 0."""
    s = lambda k: sigma_twisted(ONE, ONE, 1, k)  # noqa: E731
    out = 4 * s(n)
    if n % 2 == 0:
        out -= 8 * s(n // 2)
        if n % 3 == 0:
            out -= 12 * s(n // 2)
    for t, c in ((4, 16), (6, 24), (12, -48)):
        if n % t == 0:
            out += c * s(n // t)
    return out


# Catalog ---------------------------------------------------------------------


@dataclass(frozen=True)
class PrimitiveClosedForm:
    label: str
    form: DiagonalForm
    evaluator: Callable[[FactoredInteger], Fraction]

    def __call__(self, n: int):
        value = self.evaluator(as_factored(n))
        value = Fraction(value)
        if value.denominator != 1:
            raise ArithmeticError(f"{self.label}: non-integral primitive count {value} at n={n}")
        return value.numerator


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    spec: FormulaSpec
    primitive: PrimitiveClosedForm
    level: int
    alternate: Callable[[int], int] | None = None  # another stated shape of r(n)
    notes: tuple[str, ...] = field(default=())

    @property
    def form(self) -> DiagonalForm:
        return self.spec.form


def _spec(label, form, h, terms):
    return FormulaSpec(
        label,
        tuple(FormulaTerm(F(c), psi, phi, h, t) for c, psi, phi, t in terms),
        parse_form(form),
    )


def _build() -> list[CatalogEntry]:
    def entry(label, form, h, terms, rp, level, alternate=None, notes=()):
        spec = _spec(label, form, h, terms)
        return CatalogEntry(
            label, spec, PrimitiveClosedForm(label, spec.form, rp), level, alternate, notes
        )

    return [
        entry("jacobi", "1,1,1,1", 1,
              [(8, ONE, ONE, 1), (-32, ONE, ONE, 4)], rp_four_squares, 4,
              alternate=jacobi_restricted_sum),
        entry("six_squares", "1,1,1,1,1,1", 2,
              [(16, CHI_M4, ONE, 1), (-4, ONE, CHI_M4, 1)], rp_six_squares, 4),
        entry("eight_squares", "1,1,1,1,1,1,1,1", 3,
              [(16, ONE, ONE, 1), (-32, ONE, ONE, 2), (256, ONE, ONE, 4)], rp_eight_squares, 4),
        entry("1,1,1,2", "1,1,1,2", 1,
              [(-2, ONE, CHI_8, 1), (8, CHI_8, ONE, 1)], rp_1112, 8),
        entry("1,1,1,3", "1,1,1,3", 1,
              [(-1, ONE, CHI_12, 1), (6, CHI_12, ONE, 1),
               (3, CHI_M3, CHI_M4, 1), (-2, CHI_M4, CHI_M3, 1)], rp_1113, 12),
        entry("1,1,1,4", "1,1,1,4", 1,
              [(2, CHI_M4, CHI_M4, 1), (4, ONE, ONE, 1), (-20, ONE, ONE, 4),
               (24, ONE, ONE, 8), (-32, ONE, ONE, 16)], rp_1114, 16,
              alternate=r_1114_character_prefactor,
              notes=("chi_-4(n) sigma(n) stored as sigma^{chi_-4,chi_-4}(n)",)),
        entry("1,1,2,2", "1,1,2,2", 1,
              [(4, ONE, ONE, 1), (-4, ONE, ONE, 2), (8, ONE, ONE, 4), (-32, ONE, ONE, 8)],
              rp_1122, 8),
        entry("1,1,1,5", "1,1,1,5", 1,
              [(1, ONE, CHI_5, 1), (-2, ONE, CHI_5, 2), (-4, ONE, CHI_5, 4),
               (5, CHI_5, ONE, 1), (10, CHI_5, ONE, 2), (-20, CHI_5, ONE, 4)], rp_1115, 20),
        entry("1,1,2,3", "1,1,2,3", 1,
              [(F(-1, 3), ONE, CHI_24, 1), (4, CHI_24, ONE, 1),
               (-1, CHI_M3, CHI_M8, 1), (F(4, 3), CHI_M8, CHI_M3, 1)], rp_1123, 24),
        entry("1,1,2,4", "1,1,2,4", 1,
              [(-2, ONE, CHI_8, 2), (4, CHI_8, ONE, 1)], rp_1124, 16),
        entry("1,2,2,2", "1,2,2,2", 1,
              [(-2, ONE, CHI_8, 1), (4, CHI_8, ONE, 1)], rp_1222, 8),
        entry("1,1,3,3", "1,1,3,3", 1,
              [(4, ONE, ONE, 1), (-8, ONE, ONE, 2), (-12, ONE, ONE, 3),
               (16, ONE, ONE, 4), (24, ONE, ONE, 6), (-48, ONE, ONE, 12)], rp_1133, 12,
              alternate=r_1133_stated,
              notes=("stated term -12 [3|n] sigma(n/2) stored as -12 [3|n] sigma(n/3)",)),
        entry("1,1,2,6", "1,1,2,6", 1,
              [(-1, ONE, CHI_12, 2), (3, CHI_12, ONE, 1),
               (3, CHI_M3, CHI_M4, 2), (1, CHI_M4, CHI_M3, 1)], rp_1126, 24),
        entry("1,2,2,3", "1,2,2,3", 1,
              [(-1, ONE, CHI_12, 2), (3, CHI_12, ONE, 1),
               (-3, CHI_M3, CHI_M4, 2), (-1, CHI_M4, CHI_M3, 1)], rp_1223, 24),
        entry("1,2,2,4", "1,2,2,4", 1,
              [(2, ONE, ONE, 1), (-2, ONE, ONE, 2), (8, ONE, ONE, 8), (-32, ONE, ONE, 16)],
              rp_1224, 16),
        entry("1,2,2,6", "1,2,2,6", 1,
              [(F(-1, 3), ONE, CHI_24, 1), (2, CHI_24, ONE, 1),
               (1, CHI_M3, CHI_M8, 1), (F(-2, 3), CHI_M8, CHI_M3, 1)], rp_1226, 24),
        entry("1,2,4,4", "1,2,4,4", 1,
              [(-2, ONE, CHI_8, 2), (2, CHI_8, ONE, 1)], rp_1244, 16),
        entry("1,2,4,6", "1,2,4,6", 1,
              [(-1, ONE, CHI_12, 4), (F(3, 2), CHI_12, ONE, 1),
               (-3, CHI_M3, CHI_M4, 4), (F(1, 2), CHI_M4, CHI_M3, 1)], rp_1246, 48),
    ]


_CATALOG: list[CatalogEntry] | None = None


def catalog_entries() -> list[CatalogEntry]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build()
    return list(_CATALOG)


def builtin_catalog() -> list[tuple[FormulaSpec, PrimitiveClosedForm]]:
    return [(e.spec, e.primitive) for e in catalog_entries()]


_ALIASES = {"four_squares": "jacobi", "1,1,1,1": "jacobi", "six": "six_squares", "1,1,1,1,1,1": "six_squares", "1,1,1,1,1,1,1,1": "eight_squares"}


def get_entry(key: str) -> CatalogEntry:
    """Look up by label (``jacobi``, ``1,1,2,3``, ...), alias, or any spelling of the form."""
    key = _ALIASES.get(key, key)
    for e in catalog_entries():
        if e.label == key:
            return e
    try:
        form = parse_form(key)
    except ValueError:
        form = None
    if form is not None:
        for e in catalog_entries():
            if e.form == form:
                return e
    raise KeyError(f"no catalog entry {key!r}")


# Errata ----------------------------------------------------------------------


def rp_1115_corrected(f):
    """rp_1115 with the [8|n] coefficient 1/2 in place of the stated 1."""
    n = f.value
    return rp_1115(f) * (1 - F(1, 2) * _d(8, n))


@dataclass(frozen=True)
class Erratum:
    label: str
    kind: str  # "r" or "rp"
    description: str
    stated: Callable[[int], int] | None
    corrected: Callable[[int], int] | None


def errata() -> list[Erratum]:
    """Known departures between stated formulas and the brute-force counts."""
    return [
        Erratum(
            "1,1,3,3", "r",
            "stated -12 [3|n] sigma(n/2); the catalog uses -12 [3|n] sigma(n/3)",
            r_1133_stated,
            lambda n: evaluate_formula(get_entry("1,1,3,3").spec, n),
        ),
        Erratum(
            "1,1,1,5", "rp",
            "stated prefactor (1 + [2|n]/2 - 3[4|n]/2 + [8|n]); the counts need 1/2 [8|n]",
            get_entry("1,1,1,5").primitive,
            PrimitiveClosedForm("1,1,1,5 corrected", parse_form("1,1,1,5"), rp_1115_corrected),
        ),
    ]
