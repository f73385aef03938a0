import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from abwords.abelian import (CorridorProfile, abelian_complexity,
                             balance_coefficient, closure_of_periodic,
                             corridor_member, corridor_profile,
                             empirical_profile, frequency_bounds,
                             rational_carpet, shortest_unbalanced_pair)
from abwords.errors import ConfigError
from abwords.specs import parse_spec
from abwords.words import factors, weight

periods = st.text(alphabet="01", min_size=1, max_size=6)


def brute_extremes(window, n):
    ws = [weight(window[i:i + n]) for i in range(len(window) - n + 1)]
    return min(ws), max(ws)


@given(st.text(alphabet="01", min_size=8, max_size=40))
def test_empirical_profile_matches_brute_force(w):
    prof = empirical_profile(w, 4)
    for n in range(1, 5):
        assert (prof.mins[n - 1], prof.maxs[n - 1]) == brute_extremes(w, n)


@given(periods, st.integers(1, 30))
def test_periodic_exact_profile_matches_long_sample(v, n_max):
    spec = parse_spec("periodic:" + v)
    prof = corridor_profile(spec, n_max)
    assert prof.provenance == "exact"
    sample = v * (4 * n_max // len(v) + 4)
    emp = empirical_profile(sample, n_max)
    assert prof.mins == emp.mins and prof.maxs == emp.maxs


def test_sturmian_exact_profile_is_floor_band():
    spec = parse_spec("fib")
    prof = corridor_profile(spec, 50)
    assert prof.provenance == "exact"
    alpha = (3 - 5 ** 0.5) / 2
    for n in range(1, 51):
        assert prof.mins[n - 1] == int(alpha * n)  # safe at these sizes
        assert prof.spread(n) == 1
    emp = empirical_profile(spec.prefix(5000), 50)
    assert emp.mins == prof.mins and emp.maxs == prof.maxs


def test_corridor_profile_sample_requirements():
    with pytest.raises(ConfigError):
        corridor_profile("0101", 3)  # sample shorter than 2 * n_max
    with pytest.raises(ConfigError):
        corridor_profile(parse_spec("fib"), 0)


def test_worked_corridor_example():
    prof = corridor_profile(parse_spec("periodic:01"), 4)
    rows = [(n, prof.mins[n - 1], prof.maxs[n - 1]) for n in range(1, 5)]
    assert rows == [(1, 0, 1), (2, 1, 1), (3, 1, 2), (4, 2, 2)]


@given(periods)
@settings(max_examples=50, deadline=None)
def test_membership_is_reflexive(v):
    spec = parse_spec("periodic:" + v)
    cert = corridor_member(spec, spec, 16)
    assert cert.verdict == "consistent" and cert.sound


def test_membership_refutation_names_a_witness():
    cert = corridor_member(parse_spec("periodic:0"), parse_spec("fib"), 8)
    assert cert.verdict == "refuted" and cert.sound
    w = cert.witness
    assert w is not None
    assert w.factor == "0" * w.length
    assert w.weight == 0 and w.side == "below"


def test_membership_with_empirical_profile_is_not_sound():
    x = parse_spec("morphic:0->01,1->10:0")  # no closed-form corridor
    cert = corridor_member(x, x, 12)
    assert cert.verdict == "consistent" and not cert.sound
    assert cert.profile_provenance == "empirical"


def test_shifts_stay_in_a_periodic_corridor():
    v = "00101"
    prof = corridor_profile(parse_spec("periodic:" + v), 20)
    for k in range(len(v)):
        shifted = (v[k:] + v[:k]) * 20
        cert = corridor_member(shifted, prof, 20)
        assert cert.verdict == "consistent"


def test_abelian_complexity_sturmian_is_two():
    spec = parse_spec("fib")
    for n in [1, 2, 3, 10, 37]:
        assert abelian_complexity(spec, n, 2000) == 2


def test_abelian_complexity_periodic_dips_to_one():
    spec = parse_spec("periodic:01")
    assert abelian_complexity(spec, 2, 64) == 1
    assert abelian_complexity(spec, 3, 64) == 2


def test_balance_and_unbalanced_pair_thue_morse():
    tm = parse_spec("tm")
    assert balance_coefficient(tm, 30) == 2
    pair = shortest_unbalanced_pair(tm, 30)
    assert pair is not None
    w, length = pair
    assert w == "" and length == 2  # 00 and 11 both occur


def test_unbalanced_pair_absent_for_sturmian():
    assert shortest_unbalanced_pair(parse_spec("fib"), 20) is None


def test_frequency_bounds_converge_for_periodic():
    fb = frequency_bounds(parse_spec("periodic:00101"), 40)
    lo, hi = fb.final
    assert lo == hi == Fraction(2, 5)
    assert fb.uniform_plausible
    # bounds are monotone
    assert all(a <= b for a, b in zip(fb.lower, fb.lower[1:]))
    assert all(a >= b for a, b in zip(fb.upper, fb.upper[1:]))


def brute_closure(v):
    """Reference enumeration: candidate periods of length len(v) whose
    repetitions stay inside the corridor on a long window."""
    q = len(v)
    prof = corridor_profile(parse_spec("periodic:" + v), 3 * q)
    out = set()
    for bits in itertools.product("01", repeat=q):
        u = "".join(bits)
        cert = corridor_member(u * 5, prof, 3 * q)
        if cert.verdict == "consistent":
            from abwords.words import primitive_root
            out.add(primitive_root(u))
    return out


@pytest.mark.parametrize("v", ["01", "0011", "010", "00101", "000111"])
def test_closure_of_periodic_matches_brute_force(v):
    assert closure_of_periodic(v) == brute_closure(v)


def test_closure_of_periodic_examples():
    assert closure_of_periodic("01") == {"01", "10"}
    clo = closure_of_periodic("0011")
    assert "01" in clo and "0011" in clo
    assert all(len(u) in (2, 4) or len("0011") % len(u) == 0 for u in clo)


def test_rational_carpet_factory():
    phi, make = rational_carpet(1, 2)
    spec = make(parse_spec("periodic:0"))
    prof = corridor_profile(spec, 30)
    assert prof.provenance == "exact"
    for n in range(1, 31):
        assert prof.mins[n - 1] == -(-n // 2) - 1
        assert prof.maxs[n - 1] == n // 2 + 1
    # the carpet word itself stays inside the band
    cert = corridor_member(spec, prof, 30, y_sample=400)
    assert cert.verdict == "consistent"
