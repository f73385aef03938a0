"""Exact arithmetic in real quadratic fields.

Slopes of the words handled here are either rational or quadratic
irrational, so every numeric comparison the library makes can be done
with integers.  A value is stored as (a + b*sqrt(d)) / c with integer
a, b, c, squarefree d >= 2, c > 0 and gcd(a, b, c) = 1.  Rational
values keep b = 0 and d = 0.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt


def squarefree_split(n: int) -> tuple[int, int]:
    """n = s * f**2 with s squarefree; returns (s, f).  Requires n > 0."""
    if n <= 0:
        raise ValueError("need a positive integer")
    s, f = n, 1
    i = 2
    while i * i <= s:
        while s % (i * i) == 0:
            s //= i * i
            f *= i
        i += 1
    return s, f


def _floor_mul_sqrt(b: int, d: int) -> int:
    # floor(b * sqrt(d)); d squarefree >= 2 so b*sqrt(d) is irrational for b != 0
    if b == 0:
        return 0
    t = b * b * d
    r = isqrt(t)
    return r if b > 0 else -r - 1


class QuadExt:
    """(a + b*sqrt(d)) / c, normalized."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int):
        if c == 0:
            raise ZeroDivisionError("zero denominator")
        if b == 0:
            d = 0
        else:
            if d < 2:
                raise ValueError("radicand must be >= 2 when b != 0")
            s, f = squarefree_split(d)
            if f != 1:
                b, d = b * f, s
            if d == 1:  # d was a perfect square; value is rational
                a, b, d = a + b, 0, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("QuadExt is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, x) -> "QuadExt":
        f = Fraction(x)
        return cls(f.numerator, 0, f.denominator, 0)

    @classmethod
    def sqrt(cls, d: int) -> "QuadExt":
        return cls(0, 1, 1, d)

    # -- predicates ---------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError("not a rational value")
        return Fraction(self.a, self.c)

    # -- helpers ------------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, QuadExt):
            if self.b != 0 and other.b != 0 and self.d != other.d:
                raise ValueError("values lie in different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt.from_rational(other)
        return NotImplemented

    def _d_for(self, other: "QuadExt") -> int:
        return self.d if self.b != 0 else other.d

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return o
        d = self._d_for(o)
        return QuadExt(self.a * o.c + o.a * self.c,
                       self.b * o.c + o.b * self.c,
                       self.c * o.c, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return o
        d = self._d_for(o)
        a = self.a * o.a + self.b * o.b * d
        b = self.a * o.b + self.b * o.a
        return QuadExt(a, b, self.c * o.c, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # c / (a + b*sqrt(d)) = c*(a - b*sqrt(d)) / (a^2 - b^2 d)
        n = self.a * self.a - self.b * self.b * self.d
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExt(self.c * self.a, -self.c * self.b, n, self.d)

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    # -- order --------------------------------------------------------

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        if a > 0:  # b < 0
            return 1 if a * a > b * b * d else -1
        return 1 if b * b * d > a * a else -1

    def _cmp(self, other) -> int:
        o = self._coerced(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare QuadExt with {type(other)!r}")
        return (self - o).sign()

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.c, self.d))

    def __floor__(self) -> int:
        return (self.a + _floor_mul_sqrt(self.b, self.d)) // self.c

    def floor(self) -> int:
        return self.__floor__()

    def __float__(self) -> float:
        return (self.a + self.b * (self.d ** 0.5)) / self.c

    def __repr__(self):
        return f"QuadExt({render_slope(self)!r})"


Slope = Fraction | QuadExt
"""A slope value: exact rational or real quadratic irrational."""


def to_exact(x) -> QuadExt:
    if isinstance(x, QuadExt):
        return x
    return QuadExt.from_rational(x)


def exact_floor(x) -> int:
    if isinstance(x, QuadExt):
        return x.floor()
    if isinstance(x, int):
        return x
    return Fraction(x).__floor__()


def is_irrational(x) -> bool:
    return isinstance(x, QuadExt) and not x.is_rational


_SLOPE_QUAD = re.compile(
    r"^\(\s*(-?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*(\d+)$")
_SLOPE_RAT = re.compile(r"^(-?\d+)\s*/\s*(\d+)$")
_SLOPE_INT = re.compile(r"^-?\d+$")


def parse_slope(text: str) -> Slope:
    """Parse "p/q" or "(a+b*sqrt(d))/c" into an exact value."""
    text = text.strip()
    m = _SLOPE_QUAD.match(text)
    if m:
        a, sgn, b, d, c = m.groups()
        b = int(b) if sgn == "+" else -int(b)
        return QuadExt(int(a), b, int(c), int(d))
    m = _SLOPE_RAT.match(text)
    if m:
        return Fraction(int(m.group(1)), int(m.group(2)))
    if _SLOPE_INT.match(text):
        return Fraction(int(text))
    raise ValueError(f"unrecognized slope literal: {text!r}")


def render_slope(x: Slope) -> str:
    if isinstance(x, QuadExt):
        if x.is_rational:
            x = x.as_fraction()
        else:
            sgn = "+" if x.b >= 0 else "-"
            return f"({x.a}{sgn}{abs(x.b)}*sqrt({x.d}))/{x.c}"
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


# -- continued fractions ---------------------------------------------


def continued_fraction_rational(x: Fraction) -> list[int]:
    """Canonical continued fraction [e0; e1, ...] of a rational.

    The last entry is kept >= 2 when the expansion has length > 1.
    """
    x = Fraction(x)
    out = []
    while True:
        e = x.__floor__()
        out.append(e)
        if x == e:
            break
        x = 1 / (x - e)
    if len(out) > 1 and out[-1] == 1:
        out.pop()
        out[-1] += 1
    return out


def continued_fraction_quad(x: QuadExt, max_terms: int = 512) -> tuple[list[int], list[int]]:
    """Eventually periodic expansion of a quadratic irrational.

    Returns (preperiod, period) for [e0; e1, e2, ...].
    """
    if x.is_rational:
        raise ValueError("expansion of a rational never becomes periodic")
    entries: list[int] = []
    seen: dict[tuple[int, int, int, int], int] = {}
    cur = x
    for i in range(max_terms):
        key = (cur.a, cur.b, cur.c, cur.d)
        if key in seen:
            j = seen[key]
            return entries[:j], entries[j:]
        seen[key] = i
        e = cur.floor()
        entries.append(e)
        cur = (cur - e).inverse()
    raise RuntimeError("period not found within term limit")


def _cf_matrix(entries) -> tuple[int, int, int, int]:
    # product of [[e,1],[1,0]] over the entries
    m00, m01, m10, m11 = 1, 0, 0, 1
    for e in entries:
        m00, m01, m10, m11 = m00 * e + m01, m00, m10 * e + m11, m10
    return m00, m01, m10, m11


def cf_value(preperiod, period) -> Slope:
    """Value of the continued fraction [e0; e1, ...] given as preperiod
    followed by an infinitely repeated period.  Empty period: rational."""
    preperiod = list(preperiod)
    period = list(period)
    if not period:
        if not preperiod:
            raise ValueError("empty continued fraction")
        val = Fraction(preperiod[-1])
        for e in reversed(preperiod[:-1]):
            val = e + 1 / val
        return val
    if any(e < 1 for e in period) or any(e < 1 for e in preperiod[1:]):
        raise ValueError("partial quotients past the first must be >= 1")
    m00, m01, m10, m11 = _cf_matrix(period)
    # y = (m00*y + m01) / (m10*y + m11), take the root > 1
    disc = (m11 - m00) ** 2 + 4 * m01 * m10
    y = (QuadExt.from_rational(m00 - m11) + QuadExt.sqrt(disc)) / (2 * m10)
    val = y
    for e in reversed(preperiod):
        val = e + val.inverse()
    return val


def pf_ratio(m00: int, m01: int, m10: int, m11: int) -> Slope:
    """Second coordinate share of the dominant eigenvector of a
    nonnegative 2x2 integer matrix: returns x with eigenvector (1-x, x).
    """
    tr, det = m00 + m11, m00 * m11 - m01 * m10
    disc = tr * tr - 4 * det
    if disc < 0:
        raise ValueError("complex eigenvalues")
    s, f = (1, 0) if disc == 0 else squarefree_split(disc)
    if s == 1:
        lam: Slope = Fraction(tr + f, 2)
    else:
        lam = (QuadExt.from_rational(tr) + QuadExt.sqrt(disc)) / 2
    num = lam - m00
    den = num + m01
    if den == 0:
        raise ValueError("eigenvector is degenerate in the second coordinate")
    return num / den
