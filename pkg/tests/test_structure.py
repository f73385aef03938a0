import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from abwords.errors import ConfigError, DomainError
from abwords.exactnum import QuadExt
from abwords.specs import parse_spec
from abwords.structure import (crossing_count, factor_complexity,
                               factorize_over_standard_pair, graph_width,
                               is_window_periodic, line_crossing_prefix,
                               rauzy_graph, return_words, special_factors,
                               word_graph)
from abwords.words import factors, prefix_weights, weight

FIB_SLOPE = QuadExt(3, -1, 2, 5)


def test_word_graph_is_prefix_weights():
    assert word_graph("01101", 5) == [0, 0, 1, 2, 2, 3]


def test_graph_width_balanced_vs_not():
    # Sturmian windows have width below 1 + slope-independent slack
    fib = parse_spec("fib").prefix(200)
    assert float(graph_width(fib, FIB_SLOPE)) < 1.0 + 1e-9
    wide = graph_width("0011" * 10, Fraction(1, 2))
    assert wide == 1


def test_rauzy_graph_fibonacci():
    g = rauzy_graph(parse_spec("fib"), 2, 400)
    assert g.vertices == frozenset({"01", "10", "00"})
    # n + 1 factors at order n, n + 2 edges
    assert len(g.vertices) == 3 and len(g.edges) == 4
    dot = g.to_dot()
    assert dot.startswith("digraph") and '"01" -> "10"' in dot


def test_degrees_sum_to_edge_count():
    g = rauzy_graph(parse_spec("tm"), 3, 600)
    assert sum(g.out_degree(v) for v in g.vertices) == len(g.edges)
    assert sum(g.in_degree(v) for v in g.vertices) == len(g.edges)


def test_special_factors_sturmian_unique():
    sf = special_factors(parse_spec("fib"), 4, 600)
    # exactly one left- and one right-special factor per length
    assert len(sf.left) == 1 and len(sf.right) == 1
    assert next(iter(sf.left)) == next(iter(sf.right))[::-1]


def test_factor_complexity_reference():
    spec = parse_spec("fib")
    for n in range(1, 20):
        assert factor_complexity(spec, n, 800) == n + 1
    assert factor_complexity("01010101", 3) == 2


def test_window_periodicity_flag():
    assert is_window_periodic(parse_spec("periodic:01"), 10)
    assert not is_window_periodic(parse_spec("fib"), 10, 400)


def test_return_words_fibonacci():
    rw = return_words(parse_spec("fib"), "0", 200)
    assert rw == {"0", "01"}
    rw2 = return_words(parse_spec("fib"), "00", 400)
    assert all(r.startswith("00") for r in rw2)
    with pytest.raises(DomainError):
        return_words("0100000000", "11")


def test_return_words_concatenate_back_to_the_window():
    window = parse_spec("fib").prefix(300)
    rw = return_words(window, "010")
    # every return word followed by the factor occurs in the window
    for r in rw:
        assert r + "010" in window


def test_factorize_unbalanced_periodic():
    word = "000101" * 40  # contains both 000 and 101
    fac = factorize_over_standard_pair(word)
    x, y = fac.pair
    assert fac.central == "0"
    assert (x, y) == ("0", "01")
    assert fac.decode() == word[fac.shift_offset:][:fac.covered]
    assert fac.has_00  # the 0-block repeats, marking the unbalance


def test_factorize_rejects_balanced_windows():
    with pytest.raises(DomainError):
        factorize_over_standard_pair(parse_spec("fib").prefix(400))


def test_crossing_count():
    # deviations -1/2, 0, +1/2, 0: one strict sign change
    assert crossing_count("0110", Fraction(1, 2)) == 1
    assert crossing_count("0011", Fraction(1, 2)) == 0
    assert crossing_count("011010", Fraction(1, 2)) == 1


def test_line_crossing_prefix_grows_crossings():
    from abwords.family import normalize_seed
    # a non-balanced word crossed by the line at its exact 1-frequency
    word = normalize_seed(parse_spec("morphic:0->001111,1->0:0"), 20000).window
    alpha = QuadExt(0, 1, 5, 5)  # sqrt(5)/5, the frequency of the word
    for target in [1, 3, 5]:
        u = line_crossing_prefix(word, alpha, target, sample=len(word))
        assert crossing_count(u, alpha) >= target
        assert word.startswith(u)  # stays a prefix
