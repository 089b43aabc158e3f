import random

import pytest
from hypothesis import given, strategies as st

from dvsig.errors import NonInvertible
from dvsig.modmath import mod_exp, mod_inv, pow_in_subgroup, sample_uniform


def repeated_multiplication(base, exp, modulus):
    acc = 1
    for _ in range(exp):
        acc = acc * base % modulus
    return acc


def test_mod_exp_matches_repeated_multiplication():
    assert repeated_multiplication(4, 3, 23) == 18
    assert mod_exp(4, 3, 23) == 18


def test_mod_exp_zero_exponent_is_one():
    for x in (1, 2, 7, 22):
        assert mod_exp(x, 0, 23) == 1


def test_mod_exp_by_long_division():
    # 16**3 = 4096 = 178 * 23 + 2
    assert mod_exp(16, 3, 23) == 2


@given(st.integers(min_value=0, max_value=200), st.integers(min_value=0, max_value=50))
def test_mod_exp_agrees_with_oracle(base, exp):
    assert mod_exp(base % 23, exp, 23) == repeated_multiplication(base % 23, exp, 23)


def test_mod_inv_small_cases():
    assert mod_inv(3, 11) == 4
    assert mod_inv(1, 11) == 1
    with pytest.raises(NonInvertible):
        mod_inv(0, 11)
    with pytest.raises(NonInvertible):
        mod_inv(22, 11)


@pytest.mark.parametrize("q", [11, 13, 101, 257])
def test_mod_inv_exhaustive(q):
    for a in range(1, q):
        assert a * mod_inv(a, q) % q == 1


@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
def test_exponent_addition_law(a, b):
    p, g = 23, 4
    assert mod_exp(g, a + b, p) == mod_exp(g, a, p) * mod_exp(g, b, p) % p


def test_pow_in_subgroup_handles_negative_exponents():
    # 18 has order 11 mod 23; 18**-3 must invert 18**3
    assert pow_in_subgroup(18, -3, 23, 11) * pow_in_subgroup(18, 3, 23, 11) % 23 == 1
    assert pow_in_subgroup(18, -3, 23, 11) == 16


def test_sample_uniform_single_choice():
    assert sample_uniform(2, True, random.Random(0)) == 1


def test_sample_uniform_deterministic_for_seed():
    a = [sample_uniform(11, False, random.Random(99)) for _ in range(20)]
    b = [sample_uniform(11, False, random.Random(99)) for _ in range(20)]
    assert a == b


@given(st.integers(min_value=2, max_value=300), st.integers(min_value=0, max_value=2**32))
def test_sample_uniform_stays_in_range(bound, seed):
    rng = random.Random(seed)
    for _ in range(25):
        value = sample_uniform(bound, False, rng)
        assert 0 <= value < bound
    for _ in range(25):
        value = sample_uniform(bound, True, rng)
        assert 1 <= value < bound


def test_sample_uniform_frequencies_within_five_sigma():
    rng = random.Random(20260810)
    draws = 10_000
    counts = [0] * 11
    for _ in range(draws):
        counts[sample_uniform(11, False, rng)] += 1
    expected = draws / 11
    sigma = (draws * (1 / 11) * (10 / 11)) ** 0.5
    for residue, count in enumerate(counts):
        assert abs(count - expected) <= 5 * sigma, (residue, count)


def test_sample_uniform_rejects_tiny_bound():
    with pytest.raises(ValueError):
        sample_uniform(1, False, random.Random(0))
