"""Standard pairs, central words, directive sequences and rotation words.

Conventions follow the usual recursive setup: the base standard pair is
(0, 1), grown by the two rules (u, v) -> (u, uv) and (u, v) -> (vu, v).
Standard sequences start from s[-1] = "1", s[0] = "0" with
s[n] = s[n-1]^a_n * s[n-2]; the first directive entry may be 0 (which
exchanges the roles of the two letters), all later ones are positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ConfigError, DomainError
from .exactnum import (QuadExt, Slope, cf_value, continued_fraction_quad,
                       continued_fraction_rational, exact_floor, is_irrational,
                       to_exact)
from .words import has_period, is_palindrome, validate_word, weight

# -- standard pairs ---------------------------------------------------


def pair_left(pair: tuple[str, str]) -> tuple[str, str]:
    """(u, v) -> (u, uv)."""
    u, v = pair
    return u, u + v


def pair_right(pair: tuple[str, str]) -> tuple[str, str]:
    """(u, v) -> (vu, v)."""
    u, v = pair
    return v + u, v


def is_standard_pair(u: str, v: str) -> bool:
    """True when (u, v) is reachable from ("0", "1") by the two growth
    rules; decided by running the rules backwards."""
    validate_word(u), validate_word(v)
    while True:
        if (u, v) == ("0", "1"):
            return True
        if len(u) < len(v) and v.startswith(u):
            v = v[len(u):]
        elif len(v) < len(u) and u.startswith(v):
            u = u[len(v):]
        else:
            return False


def is_standard_word(s: str) -> bool:
    """Standard words are the components of standard pairs; equivalently
    the single letters together with w01 / w10 for central w."""
    validate_word(s)
    if len(s) <= 1:
        return s in ("0", "1")
    if s[-2:] not in ("01", "10"):
        return False
    return is_central(s[:-2])


# -- directive sequences ----------------------------------------------


@dataclass(frozen=True)
class DirectiveSequence:
    """Entries a_1, a_2, ... of a standard sequence.

    `period` empty means a finite sequence: the associated word is the
    last standard term repeated (periodic Sturmian).  Nonempty `period`
    repeats forever after `preperiod`, giving a characteristic word.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...] = ()

    def __post_init__(self):
        entries = self.preperiod + self.period
        if not entries:
            raise ConfigError("directive sequence needs at least one entry")
        if entries[0] < 0 or any(a <= 0 for a in entries[1:]):
            raise ConfigError(
                "first directive entry must be >= 0, later ones positive")
        if self.period and any(a <= 0 for a in self.period):
            raise ConfigError("periodic entries must be positive")

    @property
    def is_finite(self) -> bool:
        return not self.period

    def entry(self, i: int) -> int:
        """a_i, 1-indexed."""
        if i < 1:
            raise ConfigError("directive entries are 1-indexed")
        if i <= len(self.preperiod):
            return self.preperiod[i - 1]
        if self.is_finite:
            raise ConfigError(f"finite directive sequence has no entry {i}")
        return self.period[(i - 1 - len(self.preperiod)) % len(self.period)]


FIBONACCI_DIRECTIVE = DirectiveSequence((), (1,))


def standard_sequence(directive: DirectiveSequence, n: int) -> str:
    """s[n] of the standard sequence; n >= -1."""
    if n < -1:
        raise ConfigError("standard sequence index must be >= -1")
    prev, cur = "1", "0"  # s[-1], s[0]
    if n == -1:
        return prev
    for i in range(1, n + 1):
        prev, cur = cur, cur * directive.entry(i) + prev
    return cur


def characteristic_prefix(directive: DirectiveSequence, n: int) -> str:
    """Length-n prefix of the characteristic word lim s[k]."""
    if directive.is_finite:
        raise DomainError("characteristic word needs an infinite directive")
    if n < 0:
        raise ConfigError("prefix length must be >= 0")
    prev, cur = "1", "0"
    k = 0
    while len(cur) < n or k < 2:
        k += 1
        prev, cur = cur, cur * directive.entry(k) + prev
    return cur[:n]


# -- central words ----------------------------------------------------


@dataclass(frozen=True)
class CentralDecomposition:
    word: str
    p: str | None  # None for powers of a single letter (and the empty word)
    q: str | None
    periods: tuple[int, int]  # {k, l}, coprime, k + l = len(word) + 2


def central_decomposition(w: str) -> CentralDecomposition | None:
    """Decompose a central word, or return None when w is not central.

    Central words are the powers of a single letter together with the
    words w = p10q = q01p with p, q palindromes; the decomposition is
    unique and the periods are {|p| + 2, |q| + 2}.
    """
    validate_word(w)
    n = len(w)
    if w.count("0") == 0 or w.count("1") == 0:
        return CentralDecomposition(w, None, None, (1, n + 1))
    for i in range(n - 1):
        if w[i:i + 2] != "10":
            continue
        p, q = w[:i], w[i + 2:]
        if is_palindrome(p) and is_palindrome(q) and w == q + "01" + p:
            k, l = len(p) + 2, len(q) + 2
            if gcd(k, l) != 1:  # cannot happen for genuine central words
                continue
            return CentralDecomposition(w, p, q, (k, l))
    return None


def is_central(w: str) -> bool:
    return central_decomposition(w) is not None


def is_central_by_periods(w: str) -> bool:
    """Alternative characterization: w has coprime periods k, l with
    k + l = len(w) + 2."""
    validate_word(w)
    n = len(w)
    for k in range(1, n + 2):
        l = n + 2 - k
        if l < k:
            break
        if gcd(k, l) == 1 and has_period(w, k) and has_period(w, l):
            return True
    return False


def standard_pair_factorization(w: str) -> tuple[str, str]:
    """The standard pair (x, y) with x*y == w + "01" for central w.

    For w = p10q = q01p this is (p10, q01); a power 0^n yields
    (0, 0^n 1) and 1^n yields (1^n 0, 1).
    """
    dec = central_decomposition(w)
    if dec is None:
        raise DomainError(f"not a central word: {w!r}")
    if dec.p is None:
        if "1" not in w:
            return "0", w + "1"
        return w + "0", "1"
    return dec.p + "10", dec.q + "01"


# -- slope <-> directive bridge ---------------------------------------


def slope_of_directive(directive: DirectiveSequence) -> Slope:
    """Letter-1 frequency of the word defined by the directive sequence.

    The continued fraction of the slope is [0; a_1 + 1, a_2, a_3, ...].
    """
    entries = list(directive.preperiod)
    period = list(directive.period)
    if not entries:
        entries = [period[0]]
        period = period[1:] + [period[0]]
    cf = [0, entries[0] + 1] + entries[1:]
    if not period:
        # finite directive: slope of s[n] repeated
        s = standard_sequence(directive,
                              len(directive.preperiod))
        return Fraction(weight(s), len(s))
    return cf_value(cf, period)


def directive_of_slope(alpha: Slope) -> DirectiveSequence:
    """Inverse bridge; irrational slopes give an eventually periodic
    directive sequence, rationals a finite one."""
    if isinstance(alpha, QuadExt) and alpha.is_rational:
        alpha = alpha.as_fraction()
    if isinstance(alpha, Fraction):
        if not 0 < alpha < 1:
            raise DomainError("slope must lie strictly between 0 and 1")
        cf = continued_fraction_rational(alpha)  # [0, e1, ..., er]
        entries = [cf[1] - 1] + cf[2:]
        return DirectiveSequence(tuple(entries))
    if not isinstance(alpha, QuadExt):
        raise DomainError("slope must be a Fraction or QuadExt")
    if not (Fraction(0) < alpha < Fraction(1)):
        raise DomainError("slope must lie strictly between 0 and 1")
    pre, per = continued_fraction_quad(alpha)
    # pre starts with e0 = 0; shift the bridge onto the directive entries
    entries = pre[1:]
    if not entries:
        entries = [per[0]]
        per = per[1:] + [per[0]]
    entries[0] -= 1
    return DirectiveSequence(tuple(entries), tuple(per))


# -- rotation words ---------------------------------------------------


@dataclass(frozen=True)
class RotationParams:
    """Coding of the rotation n -> rho + n*alpha (mod 1) by the two
    intervals split at 1 - alpha.

    Default endpoint convention: 0 codes to 0 and 1 - alpha codes to 1.
    The flags flip those two memberships.
    """

    slope: Slope
    intercept: Slope
    zero_codes_one: bool = False
    split_codes_zero: bool = False

    def __post_init__(self):
        if not is_irrational(to_exact(self.slope)):
            raise DomainError("rotation words need an irrational slope")
        a = to_exact(self.slope)
        if not (0 < a.sign() and (a - 1).sign() < 0):
            raise DomainError("slope must lie strictly between 0 and 1")


def rotation_word(params: RotationParams, n: int) -> str:
    """First n letters a_0 a_1 ... with a_k coding rho + k*alpha."""
    if n < 0:
        raise ConfigError("length must be >= 0")
    alpha = to_exact(params.slope)
    split = 1 - alpha  # QuadExt
    x = to_exact(params.intercept)
    x = x - exact_floor(x)
    out = []
    for _ in range(n):
        if x.sign() == 0:
            out.append("1" if params.zero_codes_one else "0")
        elif x == split:
            out.append("0" if params.split_codes_zero else "1")
        else:
            out.append("0" if x < split else "1")
        x = x + alpha
        if (x - 1).sign() >= 0:
            x = x - 1
    return "".join(out)
