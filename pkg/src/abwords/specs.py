"""Finite descriptions of infinite binary words.

Every spec is a small immutable object with a deterministic
``prefix(n)`` and a ``literal()`` that round-trips through
``parse_spec``.  The literal grammar:

    fib | tm
    periodic:<word>
    dir:<a1,a2,...>[:rep[=k]]         (rep: last k entries repeat; bare
                                       rep repeats all of them; no rep
                                       means the finite standard word
                                       repeated)
    rot:<slope>:<intercept>[:swap]    (intercept may be "alpha";
                                       swap flips both endpoint codes)
    morphic:<rules>:<seedletter>      (rules like 0->01,1->10)
    carpet:<p>/<q>:<indexspec>
    flip:<k>:<bits>                   (Fibonacci directive)
    file:<path>

Slopes are written p/q or (a+b*sqrt(d))/c.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConfigError, DomainError
from .exactnum import Slope, parse_slope, render_slope, to_exact
from .sturmian import (DirectiveSequence, FIBONACCI_DIRECTIVE, RotationParams,
                       characteristic_prefix, rotation_word,
                       slope_of_directive, standard_sequence)
from .transforms import BinaryMorphism, flipping_family
from .words import validate_word, weight


class WordSpec:
    """Base class; concrete specs implement prefix and literal."""

    def prefix(self, n: int) -> str:
        raise NotImplementedError

    def literal(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.literal()


@dataclass(frozen=True)
class PeriodicSpec(WordSpec):
    word: str

    def __post_init__(self):
        validate_word(self.word)
        if not self.word:
            raise ConfigError("period must be nonempty")

    def prefix(self, n: int) -> str:
        q = len(self.word)
        return (self.word * (n // q + 1))[:n]

    def literal(self) -> str:
        return f"periodic:{self.word}"

    @property
    def slope(self) -> Fraction:
        return Fraction(weight(self.word), len(self.word))


@dataclass(frozen=True)
class MorphicSpec(WordSpec):
    morphism: BinaryMorphism
    seed: str = "0"

    def __post_init__(self):
        if self.seed not in ("0", "1"):
            raise ConfigError("seed must be a single letter")
        img = self.morphism(self.seed)
        if not img.startswith(self.seed) or len(img) < 2:
            raise ConfigError("morphism is not prolongable on the seed")

    def prefix(self, n: int) -> str:
        w = self.seed
        while len(w) < n:
            nxt = self.morphism(w)
            if len(nxt) <= len(w):
                raise ConfigError("morphism does not grow from the seed")
            w = nxt
        return w[:n]

    def literal(self) -> str:
        m = self.morphism
        return f"morphic:0->{m.image0},1->{m.image1}:{self.seed}"


@dataclass(frozen=True)
class DirectiveSpec(WordSpec):
    directive: DirectiveSequence

    def prefix(self, n: int) -> str:
        d = self.directive
        if d.is_finite:
            s = standard_sequence(d, len(d.preperiod))
            return PeriodicSpec(s).prefix(n)
        return characteristic_prefix(d, n)

    def literal(self) -> str:
        d = self.directive
        entries = ",".join(map(str, d.preperiod + d.period))
        if not d.period:
            return f"dir:{entries}"
        if not d.preperiod:
            return f"dir:{entries}:rep"
        return f"dir:{entries}:rep={len(d.period)}"

    @property
    def slope(self) -> Slope:
        return slope_of_directive(self.directive)


@dataclass(frozen=True)
class RotationSpec(WordSpec):
    params: RotationParams

    def prefix(self, n: int) -> str:
        return rotation_word(self.params, n)

    def literal(self) -> str:
        p = self.params
        if p.zero_codes_one != p.split_codes_zero:
            raise ConfigError(
                "the literal grammar only covers flipping both endpoints")
        parts = ["rot", render_slope(p.slope),
                 "alpha" if p.intercept == p.slope else render_slope(p.intercept)]
        if p.zero_codes_one:
            parts.append("swap")
        return ":".join(parts)


def carpet_morphism(p: int, q: int) -> BinaryMorphism:
    """0 -> w01, 1 -> w10 where w01 is the standard word of slope p/q."""
    from math import gcd

    from .sturmian import directive_of_slope
    if not 0 < p < q:
        raise ConfigError("need 0 < p < q")
    if gcd(p, q) != 1:
        raise ConfigError("p/q must be in lowest terms")
    d = directive_of_slope(Fraction(p, q))
    s = standard_sequence(d, len(d.preperiod))
    w = s[:-2]
    return BinaryMorphism(w + "01", w + "10")


@dataclass(frozen=True)
class CarpetSpec(WordSpec):
    p: int
    q: int
    index: WordSpec

    def __post_init__(self):
        carpet_morphism(self.p, self.q)  # validates p, q

    def prefix(self, n: int) -> str:
        phi = carpet_morphism(self.p, self.q)
        return phi(self.index.prefix(-(-n // self.q)))[:n]

    def literal(self) -> str:
        return f"carpet:{self.p}/{self.q}:{self.index.literal()}"


@dataclass(frozen=True)
class FlipFamilySpec(WordSpec):
    k: int
    bits: str
    directive: DirectiveSequence = FIBONACCI_DIRECTIVE

    def prefix(self, n: int) -> str:
        return flipping_family(self.directive, self.k, self.bits, n)

    def literal(self) -> str:
        if self.directive != FIBONACCI_DIRECTIVE:
            raise ConfigError("only the Fibonacci directive has a literal")
        return f"flip:{self.k}:{self.bits}"


@dataclass(frozen=True)
class FileSpec(WordSpec):
    path: str
    _cache: list = field(default_factory=list, compare=False, repr=False)

    def _load(self) -> str:
        if not self._cache:
            with open(self.path) as fh:
                data = "".join(fh.read().split())
            validate_word(data)
            self._cache.append(data)
        return self._cache[0]

    def prefix(self, n: int) -> str:
        data = self._load()
        if len(data) < n:
            raise ConfigError(
                f"file holds {len(data)} letters, need {n}")
        return data[:n]

    def literal(self) -> str:
        return f"file:{self.path}"


def fibonacci() -> DirectiveSpec:
    return DirectiveSpec(FIBONACCI_DIRECTIVE)


def thue_morse() -> MorphicSpec:
    return MorphicSpec(BinaryMorphism("01", "10"), "0")


# -- parsing ----------------------------------------------------------

_MORPH_RULES = re.compile(r"^0->([01]+),1->([01]+)$")


def parse_morphism(text: str) -> BinaryMorphism:
    """Parse a morphism literal body like 0->01,1->10 (optionally with a
    leading "morph:")."""
    body = text.removeprefix("morph:")
    m = _MORPH_RULES.match(body)
    if not m:
        raise ConfigError(f"unrecognized morphism literal: {text!r}")
    return BinaryMorphism(m.group(1), m.group(2))


def _parse_directive_body(body: str) -> DirectiveSequence:
    parts = body.split(":")
    entries_part = parts[0]
    try:
        entries = tuple(int(x) for x in entries_part.split(","))
    except ValueError:
        raise ConfigError(f"bad directive entries: {entries_part!r}") from None
    if len(parts) == 1:
        return DirectiveSequence(entries)
    if len(parts) != 2 or not parts[1].startswith("rep"):
        raise ConfigError(f"bad directive literal: dir:{body!r}")
    tail = parts[1]
    if tail == "rep":
        return DirectiveSequence((), entries)
    m = re.match(r"^rep=(\d+)$", tail)
    if not m:
        raise ConfigError(f"bad repetition marker: {tail!r}")
    k = int(m.group(1))
    if not 1 <= k <= len(entries):
        raise ConfigError("repetition length out of range")
    return DirectiveSequence(entries[:-k] or (), entries[-k:])


def parse_spec(text: str) -> WordSpec:
    text = text.strip()
    if text == "fib":
        return fibonacci()
    if text == "tm":
        return thue_morse()
    head, sep, body = text.partition(":")
    if not sep:
        raise ConfigError(f"unrecognized word spec: {text!r}")
    if head == "periodic":
        return PeriodicSpec(body)
    if head == "dir":
        return DirectiveSpec(_parse_directive_body(body))
    if head == "rot":
        parts = body.split(":")
        if len(parts) < 2 or len(parts) > 3:
            raise ConfigError(f"bad rotation literal: {text!r}")
        slope = parse_slope(parts[0])
        intercept = slope if parts[1] == "alpha" else parse_slope(parts[1])
        swap = False
        if len(parts) == 3:
            if parts[2] != "swap":
                raise ConfigError(f"bad endpoint convention: {parts[2]!r}")
            swap = True
        return RotationSpec(RotationParams(slope, intercept, swap, swap))
    if head == "morphic":
        rules, sep2, seed = body.rpartition(":")
        if not sep2:
            raise ConfigError(f"bad morphic literal: {text!r}")
        return MorphicSpec(parse_morphism(rules), seed)
    if head == "carpet":
        frac, sep2, rest = body.partition(":")
        if not sep2:
            raise ConfigError(f"bad carpet literal: {text!r}")
        m = re.match(r"^(\d+)/(\d+)$", frac)
        if not m:
            raise ConfigError(f"bad carpet slope: {frac!r}")
        return CarpetSpec(int(m.group(1)), int(m.group(2)), parse_spec(rest))
    if head == "flip":
        k_text, sep2, bits = body.partition(":")
        if not sep2:
            raise ConfigError(f"bad flip literal: {text!r}")
        try:
            k = int(k_text)
        except ValueError:
            raise ConfigError(f"bad flip index: {k_text!r}") from None
        return FlipFamilySpec(k, bits)
    if head == "file":
        return FileSpec(body)
    raise ConfigError(f"unrecognized word spec: {text!r}")


def exact_slope(spec: WordSpec) -> Slope | None:
    """Exact letter-1 frequency when the spec pins one down."""
    if isinstance(spec, PeriodicSpec):
        return spec.slope
    if isinstance(spec, DirectiveSpec):
        return spec.slope
    if isinstance(spec, RotationSpec):
        return spec.params.slope
    if isinstance(spec, CarpetSpec):
        return Fraction(spec.p, spec.q)
    if isinstance(spec, MorphicSpec):
        try:
            return spec.morphism.letter_frequency()
        except ValueError:
            return None
    return None
