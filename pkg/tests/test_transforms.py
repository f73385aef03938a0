import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from abwords.errors import ConfigError, DomainError
from abwords.exactnum import QuadExt
from abwords.sturmian import FIBONACCI_DIRECTIVE, standard_sequence
from abwords.transforms import (BinaryMorphism, MORPHISM_D, MORPHISM_E,
                                MORPHISM_G, SqueezeParams, flip_last_two,
                                flipping_family, is_standard_morphism,
                                is_sturmian_morphism,
                                iterate_F_until_isolated, parikh_preimage,
                                preimages_F, squeeze, squeeze_switches,
                                traffic_F, traffic_T, traffic_step)
from abwords.words import factors, parikh, prefix_weights, weight

FIB_SLOPE = QuadExt(3, -1, 2, 5)

words = st.text(alphabet="01", max_size=24)


def naive_traffic(s: str) -> str:
    """Reference: b[i] from the full neighborhood via string replace."""
    # replace is safe because matches of "10" never overlap
    return s.replace("10", "01")


@given(st.text(alphabet="01", min_size=1, max_size=24))
def test_traffic_T_matches_replace_oracle(s):
    n = len(s) - 1
    assert traffic_T(s, n) == naive_traffic(s)[:n]


@given(st.text(alphabet="01", min_size=2, max_size=24))
def test_traffic_F_is_shifted_T(s):
    n = len(s) - 2
    assert traffic_F(s, n) == traffic_T(s, n + 1)[1:]


def test_traffic_preserves_weight_away_from_the_boundary():
    rng = random.Random(3)
    for _ in range(50):
        s = "".join(rng.choice("01") for _ in range(40))
        # padding with 00 keeps the rightmost 1 inside the window
        out = traffic_T("0" + s + "00", 42)
        assert weight(out) == weight(s)


def test_traffic_step_example():
    assert traffic_step("1100") == "1010"
    assert traffic_step("10") == "01"


@given(st.text(alphabet="01", min_size=0, max_size=8))
@settings(max_examples=40, deadline=None)
def test_preimages_one_step_exhaustive(t):
    got = preimages_F(t, 1)
    brute = {"".join(y) for y in itertools.product("01", repeat=len(t) + 2)
             if traffic_F("".join(y), len(t)) == t}
    assert got == brute


def test_preimage_order_two():
    got = preimages_F("01", 2)
    brute = {"".join(y) for y in itertools.product("01", repeat=6)
             if traffic_F(traffic_F("".join(y), 4), 2) == "01"}
    assert got == brute


def test_preimage_obstruction():
    # a window starting 11 and ending 00 after the marked pattern has no
    # preimage under the shifted map
    assert preimages_F("1100", 1) == set()


def test_isolation_counts_match_direct_iteration():
    v = "11000"
    word = v * 60
    res = iterate_F_until_isolated(word, 64, 8)
    cur, k = word, 0
    while "11" in cur[:64]:
        cur = traffic_F(cur, len(cur) - 2)
        k += 1
    assert res.iterations == k == 1
    assert res.window == cur[:64]
    assert res.frequency_ok


def test_isolation_cap():
    res = iterate_F_until_isolated("1" * 40, 8, 4)
    assert res.iterations is None
    assert not res.frequency_ok


def test_squeeze_worked_example():
    out = squeeze("110001", SqueezeParams(Fraction(2, 5), Fraction(1, 2)), 5)
    assert out == "10100"


def test_squeeze_switch_positions_match_decimal_oracle():
    from decimal import Decimal, getcontext
    getcontext().prec = 60
    alpha = (3 - Decimal(5).sqrt()) / 2
    src = "1" + standard_sequence(FIBONACCI_DIRECTIVE, 12)
    for c_num, c_den in [(1, 10), (1, 2), (1, 1)]:
        params = SqueezeParams(FIB_SLOPE, Fraction(c_num, c_den))
        got = squeeze_switches(src, params, 200)
        c = Decimal(c_num) / Decimal(c_den)
        g = prefix_weights(src[:201])
        expect = [(i, "upper") for i in range(2, 202)
                  if src[i - 2:i] == "10" and Decimal(g[i]) > alpha * i + c]
        assert got == expect


def test_squeeze_two_sided_fires_lower_switches():
    params = SqueezeParams(Fraction(1, 2), Fraction(1, 4), two_sided=True)
    switches = squeeze_switches("001011", params, 5)
    kinds = {k for _, k in switches}
    assert "lower" in kinds


def test_morphism_application_and_composition():
    f = BinaryMorphism("01", "0")
    g = BinaryMorphism("10", "0")
    assert f("010") == "01001"
    assert f.compose(g)("0") == f(g("0")) == "001"
    assert g.compose(f)("0") == g(f("0")) == "100"


@given(words, words)
def test_adjacency_acts_on_parikh_vectors(u, v):
    if not u or not v:
        return
    f = BinaryMorphism(u, v)
    for w in ["", "0", "1", "0110", "10101"]:
        (m00, m01), (m10, m11) = f.adjacency()
        n0, n1 = parikh(w)
        assert parikh(f(w)) == (m00 * n0 + m01 * n1, m10 * n0 + m11 * n1)


def test_letter_frequency_fibonacci():
    assert MORPHISM_D.letter_frequency() == FIB_SLOPE


def test_parikh_preimage():
    f = BinaryMorphism("01", "0")
    assert parikh_preimage(f, parikh(f("01101"))) == parikh("01101")
    assert parikh_preimage(f, (0, 5)) is None  # negative solution
    with pytest.raises(DomainError):
        parikh_preimage(BinaryMorphism("01", "01"), (1, 1))


def test_standard_morphism_recognition():
    assert is_standard_morphism(MORPHISM_D)
    assert is_standard_morphism(BinaryMorphism("010", "01"))
    assert not is_standard_morphism(BinaryMorphism("0110", "01"))


def test_sturmian_morphism_positive_cases():
    rng = random.Random(5)
    gens = [MORPHISM_D, MORPHISM_E, MORPHISM_G]
    for _ in range(30):
        f = gens[rng.randrange(3)]
        for _ in range(rng.randrange(0, 4)):
            f = f.compose(gens[rng.randrange(3)])
        assert is_sturmian_morphism(f) is True


def test_sturmian_morphism_swap_composites():
    # E after D and D after E land on different images; both must decide
    assert is_sturmian_morphism(MORPHISM_E.compose(MORPHISM_D)) is True
    assert is_sturmian_morphism(MORPHISM_D.compose(MORPHISM_E)) is True


def test_sturmian_morphism_negative_case():
    assert is_sturmian_morphism(BinaryMorphism("0011", "01")) in (False, None)
    assert is_sturmian_morphism(BinaryMorphism("11", "00")) in (False, None)


def test_flip_last_two():
    assert flip_last_two("01001") == "01010"
    with pytest.raises(DomainError):
        flip_last_two("0")


def test_flipping_family_no_flips_is_the_characteristic_word():
    from abwords.sturmian import characteristic_prefix
    w = flipping_family(FIBONACCI_DIRECTIVE, 3, "0", 500)
    assert w == characteristic_prefix(FIBONACCI_DIRECTIVE, 500)


def test_flipping_family_flips_change_the_window():
    a = flipping_family(FIBONACCI_DIRECTIVE, 3, "0", 500)
    b = flipping_family(FIBONACCI_DIRECTIVE, 3, "1", 500)
    assert a != b
    assert weight(a) == weight(b)  # flips preserve the letter counts


def test_flipping_family_rejects_small_k():
    with pytest.raises(DomainError):
        flipping_family(FIBONACCI_DIRECTIVE, 2, "1", 100)
