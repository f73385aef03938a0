"""Factor structure of finite windows: graphs, complexity, special
factors, return words, and the factorization of a shift over the
standard pair induced by its shortest unbalanced pair."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abelian import shortest_unbalanced_pair
from .errors import ConfigError, DomainError
from .exactnum import Slope, to_exact
from .sturmian import central_decomposition, standard_pair_factorization
from .words import factors, prefix_weights, validate_word, weight

DEFAULT_SAMPLE_FACTOR = 4


def _window(source, length: int) -> str:
    if isinstance(source, str):
        if len(source) < length:
            raise ConfigError(f"window of {len(source)} letters, need {length}")
        return validate_word(source)
    return source.prefix(length)


# -- word graph -------------------------------------------------------


def word_graph(source, n: int) -> list[int]:
    """Prefix weights g(0..n); the graph of the word is the set of
    integer points (i, g(i)) with letters read as vertical steps."""
    return prefix_weights(_window(source, n)[:n])


def graph_width(v: str, alpha: Slope):
    """Spread of g(i) - alpha * i over 0 <= i <= len(v), exact."""
    validate_word(v)
    a = to_exact(alpha)
    g = prefix_weights(v)
    vals = [g[i] - a * i for i in range(len(v) + 1)]
    lo = hi = vals[0]
    for x in vals[1:]:
        if x < lo:
            lo = x
        if x > hi:
            hi = x
    return hi - lo


def word_graph_tsv(source, n: int, alpha: Slope | None = None) -> str:
    g = word_graph(source, n)
    header = "i\tg" + ("\tdeviation" if alpha is not None else "")
    lines = [header]
    a = to_exact(alpha) if alpha is not None else None
    for i, gi in enumerate(g):
        if a is None:
            lines.append(f"{i}\t{gi}")
        else:
            lines.append(f"{i}\t{gi}\t{float(gi - a * i):.6f}")
    return "\n".join(lines) + "\n"


# -- Rauzy graphs and special factors ---------------------------------


@dataclass(frozen=True)
class RauzyGraph:
    """Vertices are the length-n factors; each length-(n+1) factor z
    contributes the edge z[:-1] -> z[1:]."""

    order: int
    vertices: frozenset[str]
    edges: frozenset[str]  # stored as the (n+1)-factors themselves

    def out_degree(self, v: str) -> int:
        return sum(1 for z in self.edges if z[:-1] == v)

    def in_degree(self, v: str) -> int:
        return sum(1 for z in self.edges if z[1:] == v)

    def to_dot(self) -> str:
        lines = ["digraph rauzy {"]
        for v in sorted(self.vertices):
            lines.append(f'  "{v}";')
        for z in sorted(self.edges):
            lines.append(f'  "{z[:-1]}" -> "{z[1:]}" [label="{z[-1]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def rauzy_graph(source, n: int, sample: int | None = None) -> RauzyGraph:
    m = sample or DEFAULT_SAMPLE_FACTOR * max(n + 1, 1)
    if isinstance(source, str) and sample is None:
        m = len(source)
    window = _window(source, m)[:m]
    return RauzyGraph(n, frozenset(factors(window, n)),
                      frozenset(factors(window, n + 1)))


@dataclass(frozen=True)
class SpecialFactors:
    left: frozenset[str]
    right: frozenset[str]

    @property
    def bispecial(self) -> frozenset[str]:
        return self.left & self.right


def special_factors(source, n: int, sample: int | None = None) -> SpecialFactors:
    """Length-n factors extendable on the left (resp. right) by both
    letters inside the window."""
    g = rauzy_graph(source, n, sample)
    left = frozenset(v for v in g.vertices if g.in_degree(v) == 2)
    right = frozenset(v for v in g.vertices if g.out_degree(v) == 2)
    return SpecialFactors(left, right)


def factor_complexity(source, n: int, sample: int | None = None) -> int:
    m = sample or DEFAULT_SAMPLE_FACTOR * max(n, 1)
    if isinstance(source, str) and sample is None:
        m = len(source)
    window = _window(source, m)[:m]
    return len(factors(window, n))


def is_window_periodic(source, n_max: int, sample: int | None = None) -> bool:
    """Morse-Hedlund flag on the window: complexity stalls at some
    length below n_max, which for the full word would force eventual
    periodicity."""
    m = sample or DEFAULT_SAMPLE_FACTOR * n_max
    if isinstance(source, str) and sample is None:
        m = len(source)
    window = _window(source, m)[:m]
    prev = 1  # complexity at length 0
    for n in range(1, n_max + 1):
        cur = len(factors(window, n))
        if cur == prev:
            return True
        prev = cur
    return False


# -- return words -----------------------------------------------------


def return_words(source, u: str, sample: int | None = None) -> set[str]:
    """First-return words of u in the window: the segments between
    consecutive occurrences of u."""
    validate_word(u)
    if not u:
        raise ConfigError("return words need a nonempty factor")
    m = sample or DEFAULT_SAMPLE_FACTOR * len(u) * 8
    if isinstance(source, str) and sample is None:
        m = len(source)
    window = _window(source, m)[:m]
    occ = []
    i = window.find(u)
    while i != -1:
        occ.append(i)
        i = window.find(u, i + 1)
    if len(occ) < 2:
        raise DomainError(f"factor occurs {len(occ)} time(s); need two")
    return {window[occ[i]:occ[i + 1]] for i in range(len(occ) - 1)}


# -- factorization over a standard pair -------------------------------


@dataclass(frozen=True)
class ShiftFactorization:
    pair: tuple[str, str]
    central: str
    shift_offset: int
    tokens: str  # '0' per pair[0] block, '1' per pair[1] block
    covered: int  # letters of the shifted window the tokens account for
    has_00: bool
    has_11: bool

    def decode(self) -> str:
        x, y = self.pair
        return "".join(x if t == "0" else y for t in self.tokens)


def _tokenize(window: str, x: str, y: str) -> str | None:
    """Parse the window as blocks of x and y, allowing an incomplete
    final block; longer block preferred where both parses complete."""
    n = len(window)
    long_blk, short_blk = (x, y) if len(x) >= len(y) else (y, x)
    feasible = [False] * (n + 1)
    feasible[n] = True
    for i in range(n - 1, -1, -1):
        rest = n - i
        if rest < len(long_blk) and (long_blk.startswith(window[i:])
                                     or short_blk.startswith(window[i:])):
            feasible[i] = True
            continue
        if window.startswith(x, i) and feasible[i + len(x)]:
            feasible[i] = True
        elif window.startswith(y, i) and feasible[i + len(y)]:
            feasible[i] = True
    if not feasible[0]:
        return None
    out = []
    i = 0
    while i < n:
        if n - i < len(short_blk):
            break
        took = False
        for blk in (long_blk, short_blk):
            if n - i >= len(blk) and window.startswith(blk, i) \
                    and feasible[i + len(blk)]:
                out.append("0" if blk == x else "1")
                i += len(blk)
                took = True
                break
        if not took:
            break
    return "".join(out)


def factorize_over_standard_pair(source, sample: int | None = None,
                                 n_max: int | None = None) -> ShiftFactorization:
    """Factor a shift of the window over the standard pair named by the
    word's shortest unbalanced pair.

    The shortest palindrome w with both 0w0 and 1w1 present is central
    for non-balanced words with a tight corridor; the shift starting at
    an occurrence of w then factors over the pair (p10, q01) from the
    decomposition w = p10q = q01p.
    """
    m = sample or 4096
    if isinstance(source, str) and sample is None:
        m = len(source)
    window = _window(source, m)[:m]
    pair_info = shortest_unbalanced_pair(window, n_max or len(window) // 4)
    if pair_info is None:
        raise DomainError("window looks balanced; no unbalanced pair found")
    w, _length = pair_info
    if central_decomposition(w) is None:
        raise DomainError(
            f"shortest unbalanced pair {w!r} is not central; the window "
            "does not match the tight-corridor hypothesis")
    x, y = standard_pair_factorization(w)
    start = 0 if w == "" else window.find(w)
    while start != -1:
        tokens = _tokenize(window[start:], x, y)
        if tokens is not None and tokens:
            covered = sum(len(x) if t == "0" else len(y) for t in tokens)
            return ShiftFactorization(
                (x, y), w, start, tokens, covered,
                "00" in tokens, "11" in tokens)
        start = window.find(w, start + 1) if w else -1
    raise DomainError("no shift of the window factors over the pair")


# -- prefixes alternating around a line -------------------------------


def crossing_count(v: str, alpha: Slope) -> int:
    """Strict sign changes of g(i) - alpha * i along the word."""
    a = to_exact(alpha)
    g = prefix_weights(validate_word(v))
    signs = []
    for i in range(1, len(v) + 1):
        s = (g[i] - a * i).sign()
        if s != 0:
            signs.append(s)
    changes = 0
    for prev, cur in zip(signs, signs[1:]):
        if prev != cur:
            changes += 1
    return changes


def line_crossing_prefix(source, alpha: Slope, crossings: int,
                         sample: int = 1 << 16) -> str:
    """Grow a factor of the window whose graph crosses the line of the
    given slope at least `crossings` times.

    Starting from a single letter, each step extends the current
    prefix u by concatenating consecutive return words of u until the
    1-frequency of the extension lands on the other side of alpha,
    alternating sides; the prefix weights then alternate around the
    line, forcing a crossing per step.
    """
    a = to_exact(alpha)
    window = _window(source, sample)[:sample]
    u = window[0]
    # the single letter already sits on one side; alternate from there
    want_light = u == "1"
    while crossing_count(u, alpha) < crossings:
        occ = []
        i = window.find(u)
        while i != -1 and len(occ) < 4096:
            occ.append(i)
            i = window.find(u, i + 1)
        if len(occ) < 3:
            raise ConfigError(
                "window too short to keep extending the prefix")
        if occ[0] != 0:
            # keep u a prefix of the window so returns extend it
            raise DomainError("construction lost the prefix property")
        grown = None
        for j in range(1, len(occ)):
            cand = window[:occ[j]] + u  # u extended by j-1 full returns, ending in u
            freq_gap = (a * len(cand) - weight(cand)).sign()
            if want_light and freq_gap > 0:
                grown = cand
                break
            if not want_light and freq_gap < 0:
                grown = cand
                break
        if grown is None or len(grown) <= len(u):
            raise ConfigError(
                "no return extension reaches the other side of the line")
        u = grown
        want_light = not want_light
    return u
