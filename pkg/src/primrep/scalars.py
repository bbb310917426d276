"""Exact scalars for character arithmetic.

Character values are 0 or roots of unity. Products of roots of unity stay
exact. Sums stay exact (Gaussian rationals) as long as every root involved
has order dividing 4; anything else drops to a complex float that carries
an absolute error bound.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

ULP = 1e-15


def _rat(x) -> int | Fraction:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2 pi i k / m), stored with gcd(k, m) = 1 and 0 <= k < m."""

    k: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("root of unity order must be >= 1")
        k = self.k % self.m
        g = math.gcd(k, self.m)
        object.__setattr__(self, "k", k // g)
        object.__setattr__(self, "m", self.m // g)

    @property
    def order(self) -> int:
        return self.m

    def conjugate(self) -> RootOfUnity:
        return RootOfUnity(-self.k, self.m)

    def __pow__(self, e: int) -> RootOfUnity:
        return RootOfUnity(self.k * e, self.m)

    def _mul_root(self, other: RootOfUnity) -> RootOfUnity:
        m = self.m * other.m // math.gcd(self.m, other.m)
        return RootOfUnity(self.k * (m // self.m) + other.k * (m // other.m), m)

    def __complex__(self) -> complex:
        return cmath.exp(2j * math.pi * self.k / self.m)

    def lift(self):
        """The value as int / Gaussian when exact, else Approx."""
        if self.m == 1:
            return 1
        if self.m == 2:
            return -1
        if self.m == 4:
            return Gaussian(0, 1 if self.k == 1 else -1)
        return Approx(complex(self), ULP)

    def __mul__(self, other):
        if isinstance(other, RootOfUnity):
            return self._mul_root(other).simplify()
        return _mul(self.lift(), other)

    __rmul__ = __mul__

    def __add__(self, other):
        return _add(self.lift(), other)

    __radd__ = __add__

    def __sub__(self, other):
        return _add(self.lift(), _neg(other))

    def __rsub__(self, other):
        return _add(other, _neg(self.lift()))

    def __neg__(self):
        return _neg(self.lift())

    def __truediv__(self, other):
        if isinstance(other, RootOfUnity):
            return (self._mul_root(other.conjugate())).simplify()
        return _div(self.lift(), other)

    def __rtruediv__(self, other):
        return _mul(other, self.conjugate().lift())

    def __eq__(self, other):
        if isinstance(other, RootOfUnity):
            return (self.k, self.m) == (other.k, other.m)
        return scalar_equal(self.lift(), other)

    def __hash__(self):
        return hash((self.k, self.m))

    def simplify(self):
        """Orders 1 and 2 collapse to the ints 1 and -1."""
        if self.m <= 2:
            return self.lift()
        return self


@dataclass(frozen=True)
class Gaussian:
    """Exact re + i*im with rational parts."""

    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def conjugate(self):
        return _gauss(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __add__(self, other):
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return _add(self, _neg(other))

    def __rsub__(self, other):
        return _add(other, _neg(self))

    def __neg__(self):
        return _gauss(-self.re, -self.im)

    def __mul__(self, other):
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return _div(self, other)

    def __rtruediv__(self, other):
        return _div(other, self)

    def __pow__(self, e: int):
        return _pow(self, e)

    def __eq__(self, other):
        return scalar_equal(self, other)

    def __hash__(self):
        return hash((self.re, self.im))


@dataclass(frozen=True)
class Approx:
    """A complex float with an absolute error bound."""

    value: complex
    err: float = 0.0

    def conjugate(self):
        return Approx(self.value.conjugate(), self.err)

    def __complex__(self):
        return complex(self.value)

    def __add__(self, other):
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return _add(self, _neg(other))

    def __rsub__(self, other):
        return _add(other, _neg(self))

    def __neg__(self):
        return Approx(-self.value, self.err)

    def __mul__(self, other):
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return _div(self, other)

    def __rtruediv__(self, other):
        return _div(other, self)

    def __pow__(self, e: int):
        return _pow(self, e)

    def __eq__(self, other):
        return scalar_equal(self, other)

    def __hash__(self):
        return hash(self.value)


ExactScalar = Union[int, Fraction, RootOfUnity, Gaussian, Approx]


def _gauss(re, im):
    re, im = Fraction(re), Fraction(im)
    if im == 0:
        return _rat(re)
    return Gaussian(re, im)


def _parts(x):
    """Split into ('exact', re, im) or ('approx', value, err)."""
    if isinstance(x, RootOfUnity):
        x = x.lift()
    if isinstance(x, (int, Rational)):
        return True, Fraction(x), Fraction(0)
    if isinstance(x, Gaussian):
        return True, x.re, x.im
    if isinstance(x, Approx):
        return False, x.value, x.err
    if isinstance(x, (float, complex)):
        return False, complex(x), 0.0
    raise TypeError(f"not a scalar: {x!r}")


def _approx_of(parts):
    exact, a, b = parts
    if exact:
        return complex(float(a), float(b)), 0.0
    return a, b


def _add(x, y):
    px, py = _parts(x), _parts(y)
    if px[0] and py[0]:
        return _gauss(px[1] + py[1], px[2] + py[2])
    (vx, ex), (vy, ey) = _approx_of(px), _approx_of(py)
    v = vx + vy
    return Approx(v, ex + ey + ULP * abs(v))


def _neg(x):
    if isinstance(x, RootOfUnity):
        return _neg(x.lift())
    return -x


def _mul(x, y):
    if isinstance(x, RootOfUnity) and isinstance(y, RootOfUnity):
        return x * y
    px, py = _parts(x), _parts(y)
    if px[0] and py[0]:
        a, b, c, d = px[1], px[2], py[1], py[2]
        return _gauss(a * c - b * d, a * d + b * c)
    (vx, ex), (vy, ey) = _approx_of(px), _approx_of(py)
    v = vx * vy
    return Approx(v, ex * abs(vy) + ey * abs(vx) + ex * ey + ULP * abs(v))


def _div(x, y):
    py = _parts(y)
    if py[0]:
        c, d = py[1], py[2]
        den = c * c + d * d
        if den == 0:
            raise ZeroDivisionError("scalar division by zero")
        return _mul(x, _gauss(c / den, -d / den))
    vy, ey = py[1], py[2]
    if abs(vy) <= ey:
        raise ZeroDivisionError("approximate divisor indistinguishable from zero")
    inv = 1 / vy
    # |1/(y+e) - 1/y| <= e / (|y| (|y| - e))
    err = ey / (abs(vy) * (abs(vy) - ey))
    return _mul(x, Approx(inv, err + ULP * abs(inv)))


def _pow(x, e: int):
    if e < 0:
        return _div(1, _pow(x, -e))
    out = 1
    for _ in range(e):
        out = _mul(out, x)
    return out


def spow(x, e: int):
    """Power that works for ints, Fractions, roots of unity, and scalars."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x) ** e if e < 0 else x**e
    return x**e if isinstance(x, RootOfUnity) else _pow(x, e)


def conj(x):
    return x.conjugate()


def is_exact(x) -> bool:
    return _parts(x)[0]


def error_bound(x) -> float:
    px = _parts(x)
    return 0.0 if px[0] else px[2]


def to_complex(x) -> complex:
    return _approx_of(_parts(x))[0]


def scalar_equal(x, y, tol: float = 0.0) -> bool:
    """Exact equality for exact values; within ``tol`` plus error bounds otherwise."""
    px, py = _parts(x), _parts(y)
    if px[0] and py[0]:
        return px[1] == py[1] and px[2] == py[2]
    (vx, ex), (vy, ey) = _approx_of(px), _approx_of(py)
    return abs(vx - vy) <= tol + ex + ey


def format_scalar(x) -> str:
    """Render exact values as ``p/q`` (or ``a+bi``); floats with 12 digits."""
    px = _parts(x)
    if px[0]:
        re, im = px[1], px[2]
        if im == 0:
            return str(re)
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{abs(im)}i"
    v = px[1]
    return f"{v.real:.12g}{'+' if v.imag >= 0 else '-'}{abs(v.imag):.12g}i"
