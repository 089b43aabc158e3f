import random

import pytest
from hypothesis import given, settings, strategies as st

from dvsig.errors import DegenerateHash, InvalidNonce, InvalidRandomness
from dvsig.msghash import HashMode, encode_message, raw_message
from dvsig.sdvs_saeednia import (
    SaeedniaNonces,
    sds_sign,
    sds_sign_random,
    sds_simulate,
    sds_simulate_random,
    sds_verify,
)

STUB = HashMode.STUB


def test_sign_worked_vector(toy, toy_signer, toy_verifier):
    m = raw_message(7, toy)
    sig = sds_sign(toy, toy_signer.x, toy_verifier.y, m, SaeedniaNonces(k=2, t=3), STUB)
    # c = 12**2 mod 23 = 6, r = (7+6) mod 11 = 2, s = 2*4 - 2*3 mod 11 = 2
    assert (sig.r, sig.s, sig.t) == (2, 2, 3)


def test_sign_rejects_zero_t(toy, toy_signer, toy_verifier):
    m = raw_message(7, toy)
    with pytest.raises(InvalidNonce):
        sds_sign(toy, toy_signer.x, toy_verifier.y, m, SaeedniaNonces(k=2, t=0), STUB)


def test_sign_refuses_degenerate_hash(toy, toy_signer, toy_verifier):
    # with m = 7 the commitment c = y_B**9 = 4 makes r = (7+4) mod 11 = 0
    m = raw_message(7, toy)
    with pytest.raises(DegenerateHash):
        sds_sign(toy, toy_signer.x, toy_verifier.y, m, SaeedniaNonces(k=9, t=1), STUB)


def test_verify_worked_vector(toy, toy_signer, toy_verifier):
    m = raw_message(7, toy)
    sig = sds_sign(toy, toy_signer.x, toy_verifier.y, m, SaeedniaNonces(2, 3), STUB)
    assert sds_verify(toy, toy_signer.y, toy_verifier.x, m, sig, STUB)


def test_verify_rejects_tampered_s(toy, toy_signer, toy_verifier):
    from dvsig.sdvs_saeednia import SaeedniaSignature

    m = raw_message(7, toy)
    assert not sds_verify(toy, toy_signer.y, toy_verifier.x, m, SaeedniaSignature(2, 3, 3), STUB)


def test_verify_rejects_wrong_verifier_secret(toy, toy_signer, toy_verifier):
    m = raw_message(7, toy)
    sig = sds_sign(toy, toy_signer.x, toy_verifier.y, m, SaeedniaNonces(2, 3), STUB)
    assert not sds_verify(toy, toy_signer.y, 4, m, sig, STUB)


def test_verify_rejects_out_of_range_fields(toy, toy_signer, toy_verifier):
    from dvsig.sdvs_saeednia import SaeedniaSignature

    m = raw_message(7, toy)
    assert not sds_verify(toy, toy_signer.y, toy_verifier.x, m, SaeedniaSignature(2, 2, 0), STUB)
    assert not sds_verify(toy, toy_signer.y, toy_verifier.x, m, SaeedniaSignature(11, 2, 3), STUB)
    assert not sds_verify(toy, toy_signer.y, toy_verifier.x, m, SaeedniaSignature(2, 11, 3), STUB)


def test_simulate_worked_vector(toy, toy_signer, toy_verifier):
    m = raw_message(7, toy)
    sim = sds_simulate(toy, toy_signer.y, toy_verifier.x, m, 1, 2, STUB)
    # c = 4*18**2 mod 23 = 8, r = 4, ell = 2*4^-1 = 6, s = 6^-1 = 2, t = 6*5^-1 = 10
    assert (sim.r, sim.s, sim.t) == (4, 2, 10)
    assert sds_verify(toy, toy_signer.y, toy_verifier.x, m, sim, STUB)


def test_simulate_rejects_zero_r_rand(toy, toy_signer, toy_verifier):
    m = raw_message(7, toy)
    with pytest.raises(InvalidRandomness):
        sds_simulate(toy, toy_signer.y, toy_verifier.x, m, 1, 0, STUB)


def test_simulate_degenerate_hash(toy, toy_signer, toy_verifier):
    # c = g**(s' + x_A r') = g**1 = 4 when s' = 9, r' = 1; r = (7+4) mod 11 = 0
    m = raw_message(7, toy)
    with pytest.raises(DegenerateHash):
        sds_simulate(toy, toy_signer.y, toy_verifier.x, m, 9, 1, STUB)


def test_exhaustive_round_trip_clean_message(toy, toy_signer, toy_verifier):
    # m = 12 is congruent to 1 mod 11 and no commitment value makes r = 0,
    # so every one of the 110 nonce pairs signs and verifies
    m = raw_message(12, toy)
    count = 0
    for k in range(toy.q):
        for t in range(1, toy.q):
            sig = sds_sign(toy, toy_signer.x, toy_verifier.y, m, SaeedniaNonces(k, t), STUB)
            assert sds_verify(toy, toy_signer.y, toy_verifier.x, m, sig, STUB)
            count += 1
    assert count == 110


def test_exhaustive_round_trip_with_degenerate_pairs(toy, toy_signer, toy_verifier):
    # m = 7 hits r = 0 exactly when k = 9 (c = 4), for all ten t values
    m = raw_message(7, toy)
    signed, degenerate = 0, 0
    for k in range(toy.q):
        for t in range(1, toy.q):
            try:
                sig = sds_sign(toy, toy_signer.x, toy_verifier.y, m, SaeedniaNonces(k, t), STUB)
            except DegenerateHash:
                degenerate += 1
                assert k == 9
                continue
            assert sds_verify(toy, toy_signer.y, toy_verifier.x, m, sig, STUB)
            signed += 1
    assert signed == 100 and degenerate == 10


def test_exhaustive_simulations_verify(toy, toy_signer, toy_verifier):
    m = raw_message(7, toy)
    for s_rand in range(toy.q):
        for r_rand in range(1, toy.q):
            try:
                sim = sds_simulate(toy, toy_signer.y, toy_verifier.x, m, s_rand, r_rand, STUB)
            except DegenerateHash:
                continue
            assert sds_verify(toy, toy_signer.y, toy_verifier.x, m, sim, STUB)


@given(st.integers(min_value=0, max_value=2**32))
@settings(max_examples=25, deadline=None)
def test_random_mode_round_trip(toy, toy_signer, toy_verifier, seed):
    m = raw_message(7, toy)
    sig = sds_sign_random(toy, toy_signer.x, toy_verifier.y, m, random.Random(seed), STUB)
    assert sig.r != 0
    assert sds_verify(toy, toy_signer.y, toy_verifier.x, m, sig, STUB)
    sim = sds_simulate_random(toy, toy_signer.y, toy_verifier.x, m, random.Random(seed), STUB)
    assert sds_verify(toy, toy_signer.y, toy_verifier.x, m, sim, STUB)


def test_full_size_round_trip_production_hash(big, big_signer, big_verifier):
    rng = random.Random(55)
    m = encode_message(b"designated verifier check", big)
    sig = sds_sign_random(big, big_signer.x, big_verifier.y, m, rng)
    assert sds_verify(big, big_signer.y, big_verifier.x, m, sig)
    other = encode_message(b"designated verifier check!", big)
    assert not sds_verify(big, big_signer.y, big_verifier.x, other, sig)
    sim = sds_simulate_random(big, big_signer.y, big_verifier.x, m, rng)
    assert sds_verify(big, big_signer.y, big_verifier.x, m, sim)
