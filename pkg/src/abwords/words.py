"""Basic operations on finite binary words.

Words are plain Python strings over the alphabet {'0', '1'}.  File
formats index letters from 0; the graph/squeezing operations that need
1-indexed positions say so explicitly.
"""

from __future__ import annotations

from .errors import ConfigError


def validate_word(w: str) -> str:
    if not isinstance(w, str) or any(ch not in "01" for ch in w):
        raise ConfigError(f"not a binary word: {w!r}")
    return w


def parikh(w: str) -> tuple[int, int]:
    """(number of 0s, number of 1s)."""
    ones = w.count("1")
    return len(w) - ones, ones


def weight(w: str) -> int:
    """Number of 1s."""
    return w.count("1")


def abelian_equivalent(u: str, v: str) -> bool:
    return len(u) == len(v) and u.count("1") == v.count("1")


def factors(w: str, n: int) -> set[str]:
    """All length-n factors of w."""
    if n < 0:
        raise ConfigError("factor length must be >= 0")
    if n == 0:
        return {""}
    return {w[i:i + n] for i in range(len(w) - n + 1)}


def prefix_weights(w: str) -> list[int]:
    """g[i] = weight of the length-i prefix, i = 0..len(w)."""
    g = [0] * (len(w) + 1)
    acc = 0
    for i, ch in enumerate(w):
        acc += ch == "1"
        g[i + 1] = acc
    return g


def complement(w: str) -> str:
    return w.translate(str.maketrans("01", "10"))


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def has_period(w: str, p: int) -> bool:
    """p is a period of w: w[i] == w[i+p] whenever both exist.
    Vacuously true for p >= len(w)."""
    if p <= 0:
        raise ConfigError("period must be positive")
    return w[p:] == w[:-p] if p < len(w) else True


def primitive_root(w: str) -> str:
    """Shortest u with w a power of u."""
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w == w[:p] * (n // p):
            return w[:p]
    return w
