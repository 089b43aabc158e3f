import random

import pytest
from hypothesis import given, strategies as st

from dvsig.errors import OutOfRange
from dvsig.keys import derive_public, keygen


def test_derive_public_toy_values(toy):
    assert derive_public(toy, 3) == 18  # 4**3 = 64 = 2*23 + 18
    assert derive_public(toy, 5) == 12  # 4**5 = 4**4 * 4 = 3*4
    assert derive_public(toy, 1) == toy.g


def test_derive_public_range_errors(toy):
    with pytest.raises(OutOfRange):
        derive_public(toy, 0)
    with pytest.raises(OutOfRange):
        derive_public(toy, toy.q)


def test_keygen_never_emits_zero_exponent(toy):
    for seed in range(200):
        pair = keygen(toy, random.Random(seed))
        assert 1 <= pair.x < toy.q
        assert pair.y == derive_public(toy, pair.x)
        assert pair.y != 1


@given(st.integers(min_value=0, max_value=2**32))
def test_keygen_public_matches_secret(toy, seed):
    pair = keygen(toy, random.Random(seed))
    assert derive_public(toy, pair.x) == pair.y


def test_keygen_role_label(toy):
    pair = keygen(toy, random.Random(1), role="signer")
    assert pair.role == "signer"
    assert pair.public().y == pair.y
    assert pair.secret().x == pair.x
