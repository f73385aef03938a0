"""Word transformations that preserve abelian-closure membership.

Covers the traffic-rule map (all occurrences of 10 flipped to 01 in one
step), its shifted variant, preimage search, squeezing toward a line of
given slope, binary morphisms with the three Sturmian generators, and
the flip construction on standard-pair products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError, DomainError, ResourceCapError
from .exactnum import Slope, pf_ratio, to_exact
from .sturmian import DirectiveSequence, standard_sequence
from .words import parikh, prefix_weights, validate_word, weight


def _window(source, n: int) -> str:
    """Accept either a raw window string or anything with .prefix()."""
    if isinstance(source, str):
        if len(source) < n:
            raise ConfigError(
                f"window of {len(source)} letters, need {n}")
        return validate_word(source[:n])
    return source.prefix(n)


# -- traffic map ------------------------------------------------------


def traffic_step(w: str) -> str:
    """One simultaneous 10 -> 01 pass over a finite word, no context.
    Helper for full finite words; window semantics live in traffic_T."""
    out = list(w)
    i = 0
    while i < len(w) - 1:
        if w[i] == "1" and w[i + 1] == "0":
            out[i], out[i + 1] = "0", "1"
            i += 2
        else:
            i += 1
    return "".join(out)


def traffic_T(source, n: int) -> str:
    """First n letters of the traffic image; consumes n + 1 source
    letters so the last output letter sees its right neighbor."""
    s = _window(source, n + 1)
    out = []
    for i in range(n):
        if s[i] == "1" and s[i + 1] == "0":
            out.append("0")
        elif i > 0 and s[i - 1] == "1" and s[i] == "0":
            out.append("1")
        else:
            out.append(s[i])
    return "".join(out)


def traffic_F(source, n: int) -> str:
    """Shifted traffic image (drop the first letter of the traffic
    image); consumes n + 2 source letters."""
    return traffic_T(source, n + 1)[1:]


def _preimages_one_step(target: str, cap: int, counter: list[int]) -> list[str]:
    """All y of length len(target) + 2 with traffic_F(y) == target."""
    m = len(target)
    results: list[str] = []
    # b[i] is the traffic image letter at position i; we need b[1..m] == target
    def out_letter(y: list[str], i: int) -> str:
        if y[i] == "1" and y[i + 1] == "0":
            return "0"
        if i > 0 and y[i - 1] == "1" and y[i] == "0":
            return "1"
        return y[i]

    def rec(y: list[str]):
        counter[0] += 1
        if counter[0] > cap:
            raise ResourceCapError("preimage search cap exceeded",
                                   partial=list(results))
        k = len(y)
        # letter b[k-2] becomes determined once y[k-1] is known
        if k >= 2:
            i = k - 2
            if i >= 1 and out_letter(y, i) != target[i - 1]:
                return
        if k == m + 2:
            results.append("".join(y))
            return
        for ch in "01":
            y.append(ch)
            rec(y)
            y.pop()

    rec([])
    return results


def preimages_F(target: str, order: int, cap: int = 1 << 24) -> set[str]:
    """All windows y with traffic_F applied `order` times giving the
    target at the aligned position; each application adds two letters.
    """
    validate_word(target)
    if order < 1:
        raise ConfigError("order must be >= 1")
    counter = [0]
    level = {target}
    for _ in range(order):
        nxt: set[str] = set()
        for t in level:
            nxt.update(_preimages_one_step(t, cap, counter))
            if len(nxt) > cap:
                raise ResourceCapError("preimage set cap exceeded",
                                       partial=nxt)
        level = nxt
        if not level:
            break
    return level


@dataclass(frozen=True)
class IsolationResult:
    iterations: int | None  # None: cap hit before the 1s were isolated
    window: str
    frequency_ok: bool  # 1-frequency of the sampled source below 1/2


def iterate_F_until_isolated(source, window: int = 1024,
                             max_iter: int = 64) -> IsolationResult:
    """Apply the shifted traffic map until the window has no 11.

    Guaranteed to terminate on words with 1-frequency below 1/2; the
    frequency precondition is checked empirically on the sample and
    only flagged, not enforced.
    """
    cur = _window(source, window + 2 * max_iter)
    freq_ok = Fraction(weight(cur), len(cur)) < Fraction(1, 2)
    for n in range(max_iter + 1):
        if "11" not in cur[:window]:
            return IsolationResult(n, cur[:window], freq_ok)
        cur = traffic_F(cur, len(cur) - 2)
    return IsolationResult(None, cur[:window], freq_ok)


# -- squeezing --------------------------------------------------------


@dataclass(frozen=True)
class SqueezeParams:
    slope: Slope
    offset: Slope  # the constant C in the switching condition
    two_sided: bool = False


def squeeze_switches(source, params: SqueezeParams, n: int) -> list[tuple[int, str]]:
    """1-indexed switch positions i with the kind of switch applied.

    Upper switch at i: prefix weight g(i) exceeds slope*i + C and the
    letters at i-1, i read 10 (they become 01).  In two-sided mode a
    lower switch also fires where g(i) < slope*i - C on letters 01.
    """
    s = _window(source, n + 1)
    g = prefix_weights(s)
    alpha = to_exact(params.slope)
    c = to_exact(params.offset)
    out: list[tuple[int, str]] = []
    for i in range(2, n + 2):
        pair = s[i - 2:i]
        if pair == "10":
            if (alpha * i + c - g[i]).sign() < 0:
                out.append((i, "upper"))
        elif params.two_sided and pair == "01":
            if (g[i] - (alpha * i - c)).sign() < 0:
                out.append((i, "lower"))
    return out


def squeeze(source, params: SqueezeParams, n: int) -> str:
    """Length-n squeezed window; all switches are applied simultaneously
    against the prefix weights of the source."""
    s = list(_window(source, n + 1))
    applied: set[int] = set()
    for i, _kind in squeeze_switches(source, params, n):
        if i - 1 in applied or i in applied:
            raise DomainError("overlapping squeeze switches; offset too small")
        # 1-indexed letters i-1, i are s[i-2], s[i-1]
        s[i - 2], s[i - 1] = s[i - 1], s[i - 2]
        applied.update((i - 1, i))
    return "".join(s[:n])


# -- binary morphisms -------------------------------------------------


@dataclass(frozen=True)
class BinaryMorphism:
    image0: str
    image1: str

    def __post_init__(self):
        validate_word(self.image0)
        validate_word(self.image1)

    def __call__(self, w: str) -> str:
        return w.replace("0", "\x00").replace("1", self.image1).replace(
            "\x00", self.image0)

    def compose(self, other: "BinaryMorphism") -> "BinaryMorphism":
        """self after other: (self.compose(other))(w) == self(other(w))."""
        return BinaryMorphism(self(other.image0), self(other.image1))

    def adjacency(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Columns are the Parikh vectors of the letter images, so the
        matrix sends Parikh(w) (as a column) to Parikh(image)."""
        c0, c1 = parikh(self.image0), parikh(self.image1)
        return (c0[0], c1[0]), (c0[1], c1[1])

    def determinant(self) -> int:
        (m00, m01), (m10, m11) = self.adjacency()
        return m00 * m11 - m01 * m10

    @property
    def is_degenerate(self) -> bool:
        return self.determinant() == 0

    def letter_frequency(self) -> Slope:
        """Exact 1-frequency of the fixed point / limit words, from the
        dominant eigenvector of the adjacency matrix."""
        (m00, m01), (m10, m11) = self.adjacency()
        return pf_ratio(m00, m01, m10, m11)


MORPHISM_D = BinaryMorphism("01", "0")
MORPHISM_E = BinaryMorphism("1", "0")
MORPHISM_G = BinaryMorphism("10", "0")
MORPHISM_ID = BinaryMorphism("0", "1")


def parikh_preimage(f: BinaryMorphism,
                    target: tuple[int, int]) -> tuple[int, int] | None:
    """Solve adjacency(f) * v = target over nonnegative integers, or
    None when no such vector exists.  Degenerate morphisms refused."""
    (m00, m01), (m10, m11) = f.adjacency()
    det = m00 * m11 - m01 * m10
    if det == 0:
        raise DomainError("degenerate morphism has no unique Parikh preimage")
    n0 = m11 * target[0] - m01 * target[1]
    n1 = -m10 * target[0] + m00 * target[1]
    if n0 % det or n1 % det:
        return None
    v = (n0 // det, n1 // det)
    return v if v[0] >= 0 and v[1] >= 0 else None


def is_standard_morphism(f: BinaryMorphism) -> bool:
    """f is in the monoid generated by 0->01,1->0 and the letter swap
    iff its images form a standard pair in some order."""
    from .sturmian import is_standard_pair
    u, v = f.image0, f.image1
    return is_standard_pair(u, v) or is_standard_pair(v, u)


def _decode_generator(image0: str, image1: str, block: str):
    """Invert 0 -> block(01 or 10), 1 -> 0 on both images, or None."""
    def decode(s: str):
        out = []
        i = 0
        while i < len(s):
            if s[i:i + 2] == block:
                out.append("0")
                i += 2
            elif s[i] == block[0] and block == "10":
                return None  # lone 1 not decodable under G
            elif s[i] == "0" and block == "01":
                out.append("1")
                i += 1
            elif s[i] == "0" and block == "10":
                out.append("1")
                i += 1
            else:
                return None
        return "".join(out)

    d0, d1 = decode(image0), decode(image1)
    if d0 is None or d1 is None or not d0 or not d1:
        return None
    return BinaryMorphism(d0, d1)


def is_sturmian_morphism(f: BinaryMorphism, depth_cap: int = 24) -> bool | None:
    """Membership in the monoid generated by 0->01,1->0; 0->1,1->0 and
    0->10,1->0, by peeling generators off the left.

    Every element other than the identity and the swap factors as an
    optional leading swap followed by one of the other two generators;
    the swap is peeled by complementing both images.

    Returns None when no decision was reached within the depth cap.
    """
    from .words import complement

    seen: set[tuple[str, str]] = set()

    def rec(g: BinaryMorphism, depth: int) -> bool | None:
        if (g.image0, g.image1) in (("0", "1"), ("1", "0")):
            return True
        if depth >= depth_cap:
            return None
        key = (g.image0, g.image1)
        if key in seen:
            return False
        seen.add(key)
        undecided = False
        candidates = (g, BinaryMorphism(complement(g.image0),
                                        complement(g.image1)))
        for cand in candidates:
            for block in ("01", "10"):
                tail = _decode_generator(cand.image0, cand.image1, block)
                if tail is None:
                    continue
                r = rec(tail, depth + 1)
                if r:
                    return True
                if r is None:
                    undecided = True
        return None if undecided else False

    return rec(f, 0)


# -- flip construction on standard-pair products ----------------------


def flip_last_two(s: str) -> str:
    if len(s) < 2:
        raise DomainError("need at least two letters to flip")
    return s[:-2] + s[-1] + s[-2]


def _token_stream(directive: DirectiveSequence, k: int, min_letters: int,
                  len_k: int, len_km1: int) -> str:
    """Expansion of the characteristic word over the blocks s[k] ('K')
    and s[k-1] ('J'), long enough to realize min_letters letters."""
    prev, cur = "J", "K"
    i = k
    def letters(t):
        return t.count("K") * len_k + t.count("J") * len_km1
    while letters(cur) < min_letters or i == k:
        i += 1
        prev, cur = cur, cur * directive.entry(i) + prev
    return cur


def flipping_family(directive: DirectiveSequence, k: int, bits: str,
                    n: int) -> str:
    """Length-n window of the family member obtained by flipping the
    last two letters of the i-th s[k-1] block exactly when bits[i] is 1
    (bits repeat cyclically).

    The characteristic word factors as products of s[k] runs separated
    by single s[k-1] blocks; k >= 3 keeps the blocks long enough for
    the flip to stay inside the abelian closure.
    """
    if directive.is_finite:
        raise DomainError("flip construction needs an infinite directive")
    if k < 3:
        raise DomainError("flip construction requires k >= 3")
    validate_word(bits)
    if not bits:
        raise ConfigError("empty bit sequence")
    s_k = standard_sequence(directive, k)
    s_km1 = standard_sequence(directive, k - 1)
    flipped = flip_last_two(s_km1)
    tokens = _token_stream(directive, k, n, len(s_k), len(s_km1))
    out: list[str] = []
    total = 0
    j = 0  # index of the next s[k-1] block
    for t in tokens:
        if t == "K":
            out.append(s_k)
            total += len(s_k)
        else:
            out.append(flipped if bits[j % len(bits)] == "1" else s_km1)
            total += len(s_km1)
            j += 1
        if total >= n:
            break
    word = "".join(out)
    if len(word) < n:
        raise ConfigError("token stream too short; internal sizing error")
    return word[:n]
