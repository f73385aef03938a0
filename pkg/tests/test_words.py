import pytest
from hypothesis import given, strategies as st

from abwords.errors import ConfigError
from abwords.words import (abelian_equivalent, complement, factors,
                           has_period, is_palindrome, parikh, prefix_weights,
                           primitive_root, validate_word, weight)

words = st.text(alphabet="01", max_size=40)
nonempty = st.text(alphabet="01", min_size=1, max_size=40)


def test_validate_word_rejects_other_letters():
    validate_word("0101")
    with pytest.raises(ConfigError):
        validate_word("012")
    with pytest.raises(ConfigError):
        validate_word("ab")


@given(words, words)
def test_parikh_is_additive(u, v):
    n0, n1 = parikh(u + v)
    a0, a1 = parikh(u)
    b0, b1 = parikh(v)
    assert (n0, n1) == (a0 + b0, a1 + b1)
    assert n0 + n1 == len(u) + len(v)
    assert n1 == weight(u + v)


@given(words)
def test_abelian_equivalence_ignores_order(w):
    assert abelian_equivalent(w, w[::-1])
    assert abelian_equivalent(w, "".join(sorted(w)))


def test_abelian_equivalence_counterexample():
    assert not abelian_equivalent("01", "11")
    assert not abelian_equivalent("0", "00")


@given(nonempty, st.integers(1, 8))
def test_factors_match_slicing(w, n):
    expect = {w[i:i + n] for i in range(len(w) - n + 1)}
    assert factors(w, n) == expect


def test_factor_counts_on_fibonacci_prefix():
    w = "010010100100101001010"
    # a Sturmian window has at most n + 1 distinct factors of length n
    for n in range(1, 6):
        assert len(factors(w, n)) == n + 1


@given(words)
def test_prefix_weights_are_running_sums(w):
    g = prefix_weights(w)
    assert len(g) == len(w) + 1 and g[0] == 0
    for i, ch in enumerate(w):
        assert g[i + 1] - g[i] == int(ch)


@given(words)
def test_complement_is_involutive(w):
    assert complement(complement(w)) == w
    assert weight(complement(w)) == len(w) - weight(w)


def test_palindromes():
    assert is_palindrome("")
    assert is_palindrome("010")
    assert not is_palindrome("011")


def test_has_period():
    assert has_period("0100101", 5)
    assert has_period("0101", 2)
    assert not has_period("0110", 2)
    assert has_period("01", 5)  # periods past the length hold vacuously


@given(nonempty)
def test_primitive_root_generates_the_word(w):
    r = primitive_root(w)
    assert len(w) % len(r) == 0
    assert r * (len(w) // len(r)) == w
    assert primitive_root(r) == r


def test_primitive_root_examples():
    assert primitive_root("010101") == "01"
    assert primitive_root("0110") == "0110"
