"""Abelian corridors and finite-window membership certificates.

A word y belongs to the abelian closure of x exactly when, for every
length n, the weights of y's length-n factors stay inside the interval
spanned by x's minimum and maximum length-n factor weights.  On finite
windows this yields two verdicts: "refuted" (a concrete factor of y
leaves x's corridor) and "consistent" (no factor up to the window
length does).  Consistency is conclusive for the examined lengths only
when x's corridor is known in closed form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd

import numpy as np

from .errors import ConfigError, DomainError, ResourceCapError
from .exactnum import Slope, exact_floor, is_irrational, to_exact
from .specs import (CarpetSpec, DirectiveSpec, PeriodicSpec, RotationSpec,
                    WordSpec, carpet_morphism)
from .sturmian import is_standard_word, standard_sequence
from .transforms import BinaryMorphism
from .words import factors, is_palindrome, primitive_root, validate_word, weight

DEFAULT_SAMPLE_FACTOR = 4


def _as_window(w, length: int) -> str:
    if isinstance(w, str):
        if len(w) < length:
            raise ConfigError(
                f"window of {len(w)} letters, need {length}")
        return validate_word(w)
    return w.prefix(length)


def _bits(window: str) -> np.ndarray:
    return np.frombuffer(window.encode(), dtype=np.uint8) - ord("0")


def _window_extremes(window: str, n_max: int) -> tuple[list[int], list[int]]:
    """Per-length min and max factor weights of a finite window."""
    if n_max > len(window):
        raise ConfigError("window shorter than the largest factor length")
    csum = np.concatenate(([0], np.cumsum(_bits(window), dtype=np.int64)))
    mins, maxs = [], []
    for n in range(1, n_max + 1):
        diffs = csum[n:] - csum[:-n]
        mins.append(int(diffs.min()))
        maxs.append(int(diffs.max()))
    return mins, maxs


@dataclass(frozen=True)
class CorridorProfile:
    """Per-length weight interval [mins[n-1], maxs[n-1]] for n = 1..N."""

    n_max: int
    mins: tuple[int, ...]
    maxs: tuple[int, ...]
    provenance: str  # "exact" or "empirical"
    sample_length: int | None = None
    source: str | None = None

    def spread(self, n: int) -> int:
        return self.maxs[n - 1] - self.mins[n - 1]

    def contains(self, n: int, w: int) -> bool:
        return self.mins[n - 1] <= w <= self.maxs[n - 1]

    def to_tsv(self) -> str:
        lines = ["n\tmin\tmax"]
        for n in range(1, self.n_max + 1):
            lines.append(f"{n}\t{self.mins[n - 1]}\t{self.maxs[n - 1]}")
        return "\n".join(lines) + "\n"


def empirical_profile(window: str, n_max: int,
                      source: str | None = None) -> CorridorProfile:
    mins, maxs = _window_extremes(window, n_max)
    return CorridorProfile(n_max, tuple(mins), tuple(maxs), "empirical",
                           len(window), source)


def _periodic_extremes(v: str, n_max: int) -> tuple[list[int], list[int]]:
    """Exact factor-weight extremes of the periodic word v repeated."""
    q, p = len(v), weight(v)
    vv = v + v
    part_min = [0] * q
    part_max = [0] * q
    csum = [0]
    for ch in vv:
        csum.append(csum[-1] + (ch == "1"))
    mins, maxs = [], []
    for r in range(1, q):
        ws = [csum[i + r] - csum[i] for i in range(q)]
        part_min[r], part_max[r] = min(ws), max(ws)
    for n in range(1, n_max + 1):
        k, r = divmod(n, q)
        if r == 0:
            mins.append(k * p)
            maxs.append(k * p)
        else:
            mins.append(k * p + part_min[r])
            maxs.append(k * p + part_max[r])
    return mins, maxs


def exact_profile(spec: WordSpec, n_max: int) -> CorridorProfile | None:
    """Closed-form corridor when the spec admits one, else None.

    Covered: Sturmian words (floor/ceil of n*slope), periodic words
    (cyclic enumeration), and rational carpets (slope band of width 1
    on each side; this is the corridor of the whole carpet family).
    """
    alpha: Slope | None = None
    if isinstance(spec, RotationSpec):
        alpha = spec.params.slope
    elif isinstance(spec, DirectiveSpec) and not spec.directive.is_finite:
        alpha = spec.slope
    if alpha is not None and is_irrational(to_exact(alpha)):
        a = to_exact(alpha)
        mins = tuple(exact_floor(a * n) for n in range(1, n_max + 1))
        maxs = tuple(m + 1 for m in mins)
        return CorridorProfile(n_max, mins, maxs, "exact",
                               source=_source_of(spec))
    if isinstance(spec, DirectiveSpec) and spec.directive.is_finite:
        s = standard_sequence(spec.directive, len(spec.directive.preperiod))
        mins, maxs = _periodic_extremes(s, n_max)
        return CorridorProfile(n_max, tuple(mins), tuple(maxs), "exact",
                               source=_source_of(spec))
    if isinstance(spec, PeriodicSpec):
        mins, maxs = _periodic_extremes(spec.word, n_max)
        return CorridorProfile(n_max, tuple(mins), tuple(maxs), "exact",
                               source=_source_of(spec))
    if isinstance(spec, CarpetSpec):
        frac = Fraction(spec.p, spec.q)
        mins = tuple(int(ceil(frac * n)) - 1 for n in range(1, n_max + 1))
        maxs = tuple(int(floor(frac * n)) + 1 for n in range(1, n_max + 1))
        return CorridorProfile(n_max, mins, maxs, "exact",
                               source=_source_of(spec))
    return None


def _source_of(spec) -> str | None:
    try:
        return spec.literal()
    except Exception:
        return None


def corridor_profile(x, n_max: int, sample: int | None = None,
                     prefer_exact: bool = True) -> CorridorProfile:
    """Corridor of x up to length n_max.

    x may be a spec or a raw window string.  Empirical profiles need a
    sample of at least 2 * n_max letters (default 4 * n_max).
    """
    if n_max < 1:
        raise ConfigError("corridor needs n_max >= 1")
    if not isinstance(x, str) and prefer_exact:
        prof = exact_profile(x, n_max)
        if prof is not None:
            return prof
    m = sample or DEFAULT_SAMPLE_FACTOR * n_max
    if isinstance(x, str):
        m = len(x) if sample is None else sample
    if m < 2 * n_max:
        raise ConfigError("empirical corridor needs a sample >= 2 * n_max")
    window = _as_window(x, m)
    return empirical_profile(window[:m], n_max, _source_of(x) if not
                             isinstance(x, str) else None)


@dataclass(frozen=True)
class Witness:
    factor: str
    length: int
    weight: int
    bound: int
    side: str  # "below" or "above"


@dataclass(frozen=True)
class MembershipCertificate:
    verdict: str  # "refuted" or "consistent"
    n_max: int
    sound: bool
    witness: Witness | None
    profile_provenance: str
    y_sample: int

    def to_json(self) -> str:
        d = {"verdict": self.verdict, "n_max": self.n_max,
             "sound": self.sound,
             "profile_provenance": self.profile_provenance,
             "y_sample": self.y_sample}
        if self.witness:
            d["witness"] = {
                "factor": self.witness.factor, "length": self.witness.length,
                "weight": self.witness.weight, "bound": self.witness.bound,
                "side": self.witness.side}
        return json.dumps(d, indent=2)


def corridor_member(y, x, n_max: int, x_sample: int | None = None,
                    y_sample: int | None = None) -> MembershipCertificate:
    """Check y's window factors against x's corridor.

    Refutation always names a witness factor.  A "consistent" verdict
    is conclusive for the examined lengths only when x's corridor is
    exact, which the `sound` flag records.
    """
    prof = x if isinstance(x, CorridorProfile) else corridor_profile(
        x, n_max, x_sample)
    my = y_sample or DEFAULT_SAMPLE_FACTOR * n_max
    if isinstance(y, str) and y_sample is None:
        my = len(y)
    if my < n_max:
        raise ConfigError("y sample shorter than n_max")
    window = _as_window(y, my)[:my]
    csum = np.concatenate(([0], np.cumsum(_bits(window), dtype=np.int64)))
    for n in range(1, n_max + 1):
        diffs = csum[n:] - csum[:-n]
        lo, hi = int(diffs.min()), int(diffs.max())
        if lo < prof.mins[n - 1]:
            i = int(diffs.argmin())
            wit = Witness(window[i:i + n], n, lo, prof.mins[n - 1], "below")
            return MembershipCertificate("refuted", n_max, True, wit,
                                         prof.provenance, len(window))
        if hi > prof.maxs[n - 1]:
            i = int(diffs.argmax())
            wit = Witness(window[i:i + n], n, hi, prof.maxs[n - 1], "above")
            return MembershipCertificate("refuted", n_max, True, wit,
                                         prof.provenance, len(window))
    return MembershipCertificate("consistent", n_max,
                                 prof.provenance == "exact", None,
                                 prof.provenance, len(window))


# -- derived corridor statistics --------------------------------------


def abelian_complexity(x, n: int, sample: int | None = None) -> int:
    """Number of distinct factor weights at length n.  For binary words
    every weight between the corridor bounds occurs, so this is the
    spread plus one; computed from the actual weight set regardless."""
    m = sample or DEFAULT_SAMPLE_FACTOR * n
    window = _as_window(x, m)
    csum = np.concatenate(([0], np.cumsum(_bits(window), dtype=np.int64)))
    diffs = csum[n:] - csum[:-n]
    return len(np.unique(diffs))


def balance_coefficient(x, n_max: int, sample: int | None = None) -> int:
    """Largest corridor spread over lengths up to n_max."""
    prof = corridor_profile(x, n_max, sample)
    return max(prof.spread(n) for n in range(1, n_max + 1))


def shortest_unbalanced_pair(x, n_max: int,
                             sample: int | None = None) -> tuple[str, int] | None:
    """Shortest palindrome w with both 0w0 and 1w1 in the window; the
    second component is the length of those factors.

    Any word whose factor weights spread by 2 at some length has such a
    pair, and w is central when the word's corridor is tight below.
    """
    m = sample or DEFAULT_SAMPLE_FACTOR * n_max
    window = _as_window(x, m)
    for length in range(2, n_max + 1):
        fs = factors(window, length)
        light = {f[1:-1] for f in fs if f[0] == "0" and f[-1] == "0"}
        heavy = {f[1:-1] for f in fs if f[0] == "1" and f[-1] == "1"}
        both = [w for w in light & heavy if is_palindrome(w)]
        if both:
            return min(both), length
        # fall back to non-palindromic witnesses, should they exist
        if light & heavy:
            return min(light & heavy), length
    return None


@dataclass(frozen=True)
class FrequencyBounds:
    """Exact rational bounds on the letter-1 frequency derived from the
    corridor: lower[n] = max over m <= n of mins[m]/m and dually."""

    n_max: int
    lower: tuple[Fraction, ...]
    upper: tuple[Fraction, ...]
    uniform_plausible: bool

    @property
    def final(self) -> tuple[Fraction, Fraction]:
        return self.lower[-1], self.upper[-1]


def frequency_bounds(x, n_max: int, sample: int | None = None,
                     tolerance: Fraction = Fraction(1, 100)) -> FrequencyBounds:
    prof = corridor_profile(x, n_max, sample)
    lower, upper = [], []
    lo, hi = Fraction(0), Fraction(1)
    for n in range(1, n_max + 1):
        lo = max(lo, Fraction(prof.mins[n - 1], n))
        hi = min(hi, Fraction(prof.maxs[n - 1], n))
        lower.append(lo)
        upper.append(hi)
    plausible = hi - lo <= tolerance if hi >= lo else False
    return FrequencyBounds(n_max, tuple(lower), tuple(upper), plausible)


# -- closure of a periodic word ---------------------------------------


def closure_of_periodic(v: str, cap: int = 10 ** 6) -> set[str]:
    """All members of the abelian closure of v repeated, as primitive
    period words.  The closure of a periodic word is finite and purely
    periodic with the same period length.

    Writing h(i) = q * g(i) - p * i for the prefix weights g, the
    corridor conditions pin h to be q-periodic, so a depth-first search
    over one period with pairwise interval constraints enumerates the
    closure exactly.
    """
    validate_word(v)
    if not v:
        raise ConfigError("period must be nonempty")
    q, p = len(v), weight(v)
    mins, maxs = _periodic_extremes(v, q)
    clo = [0] + [q * mins[n - 1] - p * n for n in range(1, q + 1)]
    chi = [0] + [q * maxs[n - 1] - p * n for n in range(1, q + 1)]
    results: set[str] = set()
    nodes = [0]

    def rec(letters: list[str], h: list[int]):
        nodes[0] += 1
        if nodes[0] > cap:
            raise ResourceCapError("closure search cap exceeded",
                                   partial=set(results))
        j = len(letters)
        for i in range(j):
            n = j - i
            diff = h[j] - h[i]
            if not clo[n] <= diff <= chi[n]:
                return
            # the wrapped window from j around to i + q
            if n < q and not clo[q - n] <= -diff <= chi[q - n]:
                return
        if j == q:
            results.add(primitive_root("".join(letters)))
            return
        for ch in "01":
            letters.append(ch)
            h.append(h[-1] + (q - p if ch == "1" else -p))
            rec(letters, h)
            h.pop()
            letters.pop()

    rec([], [0])
    return results


def rational_carpet(p: int, q: int):
    """The carpet morphism of slope p/q together with a factory mapping
    an index spec to the corresponding carpet word spec."""
    phi = carpet_morphism(p, q)
    return phi, (lambda index_spec: CarpetSpec(p, q, index_spec))
