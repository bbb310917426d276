"""Dirichlet characters with exact values.

Two constructions:

* real characters, ``chi(m) = kronecker(D, m)`` for a fundamental
  discriminant D (or D = 1), induced up to a modulus N with |D| dividing N;
* general characters mod N, given by an exponent vector on a fixed set of
  generators of (Z/NZ)^*: the smallest primitive root for each odd prime
  power, -1 for 4, and the pair (-1, 5) for 2**e with e >= 3.

Textual syntax: ``"1"`` (trivial character mod 1), ``"kron:D"`` or
``"kron:D:N"`` (real, optionally induced to modulus N), ``"mod:N:e1,e2,..."``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .arith import factorize
from .scalars import RootOfUnity


class CharacterError(ValueError):
    pass


def kronecker_symbol(D: int, m: int) -> int:
    """Kronecker symbol (D/m), full extension to m <= 0 and even m."""
    if m == 0:
        return 1 if D in (1, -1) else 0
    result = 1
    if m < 0:
        m = -m
        if D < 0:
            result = -result
    v = 0
    while m % 2 == 0:
        m //= 2
        v += 1
    if v:
        if D % 2 == 0:
            return 0
        if v % 2 and D % 8 in (3, 5):
            result = -result
    # Jacobi symbol (D/m) for odd m > 0
    a = D % m if m > 1 else 0
    if m == 1:
        return result
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def is_fundamental_discriminant(D: int) -> bool:
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return _squarefree(abs(D))
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(abs(m))
    return False


def _squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n).factors)


def _primitive_root(q: int, p: int) -> int:
    """Smallest primitive root modulo the odd prime power q = p**e."""
    phi = q // p * (p - 1)
    primes = factorize(phi).primes
    for g in range(2, q):
        if g % p and all(pow(g, phi // r, q) != 1 for r in primes):
            return g
    raise AssertionError("unreachable: odd prime powers have primitive roots")


@dataclass(frozen=True)
class _Generator:
    q: int  # prime power modulus of the component
    g: int  # generator residue mod q
    order: int


def generators(N: int) -> list[_Generator]:
    """Canonical generator basis of (Z/NZ)^*, one entry per exponent slot."""
    gens: list[_Generator] = []
    for p, e in factorize(N).factors:
        q = p**e
        if p == 2:
            if e == 2:
                gens.append(_Generator(q, q - 1, 2))
            elif e >= 3:
                gens.append(_Generator(q, q - 1, 2))
                gens.append(_Generator(q, 5, q // 4))
        else:
            gens.append(_Generator(q, _primitive_root(q, p), q // p * (p - 1)))
    return gens


def _component_logs(q: int, gens: list[_Generator]) -> dict[int, tuple[int, ...]]:
    """Discrete logs of every unit mod q on the component's generators."""
    logs: dict[int, tuple[int, ...]] = {}
    ranges = [range(gen.order) for gen in gens]
    for exps in product(*ranges):
        x = 1
        for gen, a in zip(gens, exps):
            x = x * pow(gen.g, a, q) % q
        logs[x] = exps
    return logs


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    """A Dirichlet character mod ``modulus``.

    ``discriminant`` is set for real characters built from a Kronecker
    symbol; ``exponents`` is set for characters given on generators.
    """

    modulus: int
    discriminant: int | None = None
    exponents: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.modulus < 1:
            raise CharacterError("modulus must be >= 1")
        if (self.discriminant is None) == (self.exponents is None):
            raise CharacterError("give exactly one of discriminant / exponents")
        if self.discriminant is not None:
            D = self.discriminant
            if D != 1 and not is_fundamental_discriminant(D):
                raise CharacterError(f"{D} is not a fundamental discriminant")
            if self.modulus % abs(D):
                raise CharacterError(f"|{D}| does not divide modulus {self.modulus}")
        else:
            gens = generators(self.modulus)
            if len(self.exponents) != len(gens):
                raise CharacterError(
                    f"modulus {self.modulus} needs {len(gens)} exponents, got {len(self.exponents)}"
                )
            reduced = tuple(a % gen.order for a, gen in zip(self.exponents, gens))
            object.__setattr__(self, "exponents", reduced)

    # identity
    def _key(self):
        return (self.modulus, tuple(self.table_keys))

    def __eq__(self, other):
        return isinstance(other, DirichletCharacter) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"DirichletCharacter({self.syntax})"

    @property
    def kind(self) -> str:
        return "real" if self.discriminant is not None else "general"

    @property
    def syntax(self) -> str:
        if self.discriminant is not None:
            if self.discriminant == 1 and self.modulus == 1:
                return "1"
            if self.modulus == abs(self.discriminant):
                return f"kron:{self.discriminant}"
            return f"kron:{self.discriminant}:{self.modulus}"
        return f"mod:{self.modulus}:" + ",".join(map(str, self.exponents))

    @cached_property
    def table(self) -> tuple:
        """Values at 0..N-1: 0 off the units, else int +-1 or RootOfUnity."""
        N = self.modulus
        if self.discriminant is not None:
            D = self.discriminant
            return tuple(
                kronecker_symbol(D, m) if math.gcd(m, N) == 1 else 0 for m in range(N)
            )
        gens = generators(N)
        comps = []
        i = 0
        for p, e in factorize(N).factors:
            q = p**e
            cg = [g for g in gens if g.q == q]
            exps = self.exponents[i : i + len(cg)]
            i += len(cg)
            comps.append((q, cg, exps, _component_logs(q, cg)))
        out = []
        for m in range(N):
            if math.gcd(m, N) != 1:
                out.append(0)
                continue
            val = RootOfUnity(0, 1)
            for q, cg, exps, logs in comps:
                for gen, a, lg in zip(cg, exps, logs[m % q]):
                    val = val._mul_root(RootOfUnity(a * lg, gen.order))
            out.append(val.simplify())
        return tuple(out)

    @cached_property
    def table_keys(self) -> tuple:
        return tuple(
            (v.k, v.m) if isinstance(v, RootOfUnity) else v for v in self.table
        )

    def __call__(self, m: int):
        return self.table[m % self.modulus]

    @cached_property
    def is_real(self) -> bool:
        return all(isinstance(v, int) for v in self.table)

    @cached_property
    def parity(self) -> int:
        v = self(-1)
        return v if isinstance(v, int) else int(round(complex(v).real))

    @cached_property
    def conductor(self) -> int:
        if self.discriminant is not None:
            return abs(self.discriminant)
        N = self.modulus
        for f in sorted(d for d in range(1, N + 1) if N % d == 0):
            if all(
                self(m) == 1
                for m in range(1, N, f)
                if math.gcd(m, N) == 1
            ):
                return f
        return N

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def is_trivial(self) -> bool:
        return all(v in (0, 1) for v in self.table)

    def values_complex(self) -> list[complex]:
        return [complex(v) if not isinstance(v, int) else complex(v) for v in self.table]


def evaluate(chi: DirichletCharacter, m: int):
    """chi(m) as an exact scalar: 0, +-1, or a RootOfUnity."""
    return chi(m)


def conjugate(chi: DirichletCharacter) -> DirichletCharacter:
    if chi.discriminant is not None:
        return chi
    gens = generators(chi.modulus)
    return DirichletCharacter(
        chi.modulus, exponents=tuple(-a % g.order for a, g in zip(chi.exponents, gens))
    )


def parity(chi: DirichletCharacter) -> int:
    return chi.parity


def is_real(chi: DirichletCharacter) -> bool:
    return chi.is_real


TRIVIAL = DirichletCharacter(1, discriminant=1)


def kron(D: int, modulus: int | None = None) -> DirichletCharacter:
    """The real character chi_D, optionally induced to ``modulus``."""
    return DirichletCharacter(abs(D) if modulus is None else modulus, discriminant=D)


def fundamental_discriminants(bound: int) -> list[int]:
    """Fundamental discriminants with |D| <= bound, ordered by |D| then sign (negative first)."""
    out = []
    for a in range(3, bound + 1):
        for D in (-a, a):
            if is_fundamental_discriminant(D):
                out.append(D)
    return out


def enumerate_real_characters(modulus_bound: int) -> list[DirichletCharacter]:
    """Primitive real characters of conductor <= bound, trivial character first."""
    if modulus_bound < 1:
        raise ValueError("bound must be >= 1")
    return [TRIVIAL] + [kron(D) for D in fundamental_discriminants(modulus_bound)]


def real_characters_mod(N: int) -> list[DirichletCharacter]:
    """Every real character mod N (primitive or not)."""
    return [kron(1, N)] + [
        kron(D, N) for D in fundamental_discriminants(N) if N % abs(D) == 0
    ]


def characters_mod(N: int) -> list[DirichletCharacter]:
    """Every Dirichlet character mod N, in lexicographic exponent order."""
    gens = generators(N)
    return [
        DirichletCharacter(N, exponents=exps)
        for exps in product(*(range(g.order) for g in gens))
    ]


def parse_character(text: str) -> DirichletCharacter:
    text = text.strip()
    if text == "1":
        return TRIVIAL
    parts = text.split(":")
    try:
        if parts[0] == "kron" and len(parts) in (2, 3):
            D = int(parts[1])
            N = int(parts[2]) if len(parts) == 3 else abs(D)
            return DirichletCharacter(N, discriminant=D)
        if parts[0] == "mod" and len(parts) in (2, 3):
            N = int(parts[1])
            exps = tuple(int(x) for x in parts[2].split(",") if x) if len(parts) == 3 else ()
            return DirichletCharacter(N, exponents=exps)
    except ValueError as exc:
        if isinstance(exc, CharacterError):
            raise
        raise CharacterError(f"bad character syntax {text!r}: {exc}") from None
    raise CharacterError(f"unknown character syntax {text!r}")

