import itertools
import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricnccr.errors import ConfigError, NotFaithful, NotUnimodular, OneSided
from toricnccr.semigroup import (build_rank1, cm_set, frobenius_number, in_S, in_S_plus, p_of,
                                 q_of, representable_table)
from toricnccr.suite import random_rank1_suite
from toricnccr.weights import validate


def brute_representable(n, gens):
    """n as a nonnegative combination of gens, by bounded enumeration."""
    ranges = [range(n // g + 1) for g in gens]
    return any(sum(c * g for c, g in zip(cs, gens)) == n for cs in itertools.product(*ranges))


def brute_frobenius(gens, upto):
    bad = [n for n in range(upto + 1) if not brute_representable(n, gens)]
    return max(bad, default=-1)


def test_frobenius_examples():
    assert brute_frobenius([2, 3], 10) == 1
    assert frobenius_number([2, 3]) == 1
    assert frobenius_number([1]) == -1
    assert brute_frobenius([3, 5], 20) == 7
    assert frobenius_number([3, 5]) == 7
    with pytest.raises(ConfigError):
        frobenius_number([2, 4])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=1, max_size=4))
def test_frobenius_vs_brute(gens):
    from math import gcd
    from functools import reduce
    if reduce(gcd, gens) != 1:
        with pytest.raises(ConfigError):
            frobenius_number(gens)
        return
    assert frobenius_number(gens) == brute_frobenius(sorted(set(gens)), 12 * 12)


def test_build_golden(golden_data):
    d = golden_data
    assert d.N == 7 and d.gens == (2, 2, 2, 2, 3, 3) and d.F == 1 and d.B == 8
    assert d.rep_table[0]


def test_build_trivial():
    d = build_rank1(validate(1, [1, 1, -1, -1]))
    assert (d.N, d.gens, d.F, d.B) == (2, (1, 1, 1, 1), -1, 1)


def test_build_errors():
    with pytest.raises(NotFaithful, match="divide"):
        build_rank1(validate(1, [2, 2, -2, -2]))
    with pytest.raises(NotUnimodular):
        build_rank1(validate(1, [1, 1, -1]))
    with pytest.raises(OneSided):
        build_rank1(validate(1, [1, 2]))
    with pytest.raises(ConfigError):
        build_rank1(validate(2, [(1, 0), (-1, 0)]))


def test_zero_weights_stripped_with_warning(caplog):
    with caplog.at_level(logging.WARNING):
        d = build_rank1(validate(1, [0, -3, -2, -2, 2, 2, 3]))
    assert d.N == 7 and "zero weight" in caplog.text


def test_membership_examples(golden_data):
    d = golden_data
    assert in_S_plus(d, 7)
    assert not in_S_plus(d, 8)
    assert brute_representable(15 - 7, [2, 3]) and in_S_plus(d, 15)
    assert brute_representable(9 - 7, [2, 3]) and in_S(d, -9)
    assert not in_S(d, 0)
    assert not in_S(d, -8)


def test_cm_set_examples(golden_data):
    assert cm_set(golden_data) == [-8] + list(range(-6, 7)) + [8]
    # S_plus = {2, 3, ...}: brute force over a window
    d = build_rank1(validate(1, [1, 1, -1, -1]))
    brute = [m for m in range(-10, 11) if not (abs(m) >= 2 and brute_representable(abs(m) - 2, [1]))]
    assert cm_set(d) == brute == [-1, 0, 1]


def test_p_q_examples(golden_data):
    d = golden_data
    assert p_of(d, 0) == 1
    assert not in_S_plus(d, 8) and in_S_plus(d, 15)
    assert p_of(d, 1) == 2
    assert not in_S_plus(d, 6) and in_S_plus(d, 13)
    assert q_of(d, 1) == -2
    with pytest.raises(ValueError):
        p_of(d, 7)


SUITE = random_rank1_suite(30, seed=11)


@pytest.mark.parametrize("config", SUITE, ids=str)
def test_rank1_invariants(config):
    d = build_rank1(config)
    window = 4 * max(d.B, 1)
    for n in range(-window, window + 1):
        assert in_S(d, n) == in_S(d, -n)
    cms = cm_set(d)
    assert 0 in cms
    assert cms == [m for m in range(-d.B - 1, d.B + 2) if not in_S(d, m)]
    assert all(m in cms for m in range(-d.N + 1, d.N))
    for i in range(d.N):
        p, q = p_of(d, i), q_of(d, i)
        assert in_S_plus(d, i + p * d.N)
        if p > 1:
            assert not in_S_plus(d, i + (p - 1) * d.N)
        assert in_S_plus(d, -(i + q * d.N))
        if q < -1:
            assert not in_S_plus(d, -(i + (q + 1) * d.N))


def test_representable_table_matches_brute():
    table = representable_table([4, 6, 9], 40)
    assert table == [brute_representable(n, [4, 6, 9]) for n in range(41)]
