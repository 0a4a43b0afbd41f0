"""Double-double arithmetic (about 32 significant digits).

Only the handful of operations needed by the reference series live here:
add, multiply, divide, and a complex pair built on top of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> tuple[float, float]:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ahi, alo = _split(a)
    bhi, blo = _split(b)
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


@dataclass(frozen=True)
class DD:
    hi: float
    lo: float = 0.0

    @classmethod
    def of(cls, x: float | int | Fraction | DD) -> DD:
        if isinstance(x, DD):
            return x
        if isinstance(x, Fraction):
            return cls.of(x.numerator) / cls.of(x.denominator)
        if isinstance(x, int):
            hi = float(x)
            return cls(hi, float(x - int(hi)))
        return cls(float(x))

    def __float__(self) -> float:
        return self.hi + self.lo

    def __neg__(self) -> DD:
        return DD(-self.hi, -self.lo)

    def __add__(self, other) -> DD:
        o = DD.of(other)
        s, e = two_sum(self.hi, o.hi)
        t, f = two_sum(self.lo, o.lo)
        e += t
        s, e = quick_two_sum(s, e)
        e += f
        return DD(*quick_two_sum(s, e))

    __radd__ = __add__

    def __sub__(self, other) -> DD:
        return self + (-DD.of(other))

    def __rsub__(self, other) -> DD:
        return DD.of(other) - self

    def __mul__(self, other) -> DD:
        o = DD.of(other)
        p, e = two_prod(self.hi, o.hi)
        e += self.hi * o.lo + self.lo * o.hi
        return DD(*quick_two_sum(p, e))

    __rmul__ = __mul__

    def __truediv__(self, other) -> DD:
        o = DD.of(other)
        q1 = self.hi / o.hi
        r = self - o * q1
        q2 = r.hi / o.hi
        r = r - o * q2
        q3 = r.hi / o.hi
        return DD(*quick_two_sum(q1, q2)) + q3

    def __rtruediv__(self, other) -> DD:
        return DD.of(other) / self

    def __abs__(self) -> DD:
        return -self if self.hi < 0 else self

    def __lt__(self, other) -> bool:
        o = DD.of(other)
        return (self.hi, self.lo) < (o.hi, o.lo)


@dataclass(frozen=True)
class CDD:
    """Complex number with double-double real and imaginary parts."""

    re: DD
    im: DD

    @classmethod
    def of(cls, z) -> CDD:
        if isinstance(z, CDD):
            return z
        if isinstance(z, complex):
            return cls(DD(z.real), DD(z.imag))
        return cls(DD.of(z), DD(0.0))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __add__(self, other) -> CDD:
        o = CDD.of(other)
        return CDD(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> CDD:
        o = CDD.of(other)
        return CDD(self.re - o.re, self.im - o.im)

    def __mul__(self, other) -> CDD:
        if isinstance(other, (DD, int, float, Fraction)):
            s = DD.of(other)
            return CDD(self.re * s, self.im * s)
        o = CDD.of(other)
        return CDD(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> CDD:
        if isinstance(other, (DD, int, float, Fraction)):
            s = DD.of(other)
            return CDD(self.re / s, self.im / s)
        o = CDD.of(other)
        den = o.re * o.re + o.im * o.im
        return CDD((self.re * o.re + self.im * o.im) / den, (self.im * o.re - self.re * o.im) / den)

    def abs_hi(self) -> float:
        return abs(complex(self))
