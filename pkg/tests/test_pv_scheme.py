import random

import pytest
from hypothesis import given, settings, strategies as st

from dvsig.errors import InvalidNonce, InvalidSignature
from dvsig.modmath import pow_in_subgroup
from dvsig.msghash import HashMode, encode_message, raw_message
from dvsig.pv_scheme import PVSignature, psg, psv, psv_matches
from dvsig.sdvs_mr import RecoveryNonces, random_nonces

STUB = HashMode.STUB


def test_psg_worked_vector(toy, toy_signer):
    m = raw_message(7, toy)
    sig = psg(toy, toy_signer.x, m, RecoveryNonces(k1=2, k2=3), STUB)
    # t = 16, c = 7*18 mod 23 = 11, r = (7+18) mod 11 = 3, s = 3
    assert (sig.t, sig.c, sig.r, sig.s) == (16, 11, 3, 3)


def test_psg_rejects_zero_k1(toy, toy_signer):
    with pytest.raises(InvalidNonce):
        psg(toy, toy_signer.x, raw_message(7, toy), RecoveryNonces(0, 3), STUB)


def test_psv_recovers_from_public_values_only(toy, toy_signer):
    sig = PVSignature(t=16, c=11, r=3, s=3)
    rec = psv(toy, toy_signer.y, sig, STUB)  # no secret key anywhere in the call
    assert rec.value == 7


def test_psv_rejects_flipped_r(toy, toy_signer):
    with pytest.raises(InvalidSignature):
        psv(toy, toy_signer.y, PVSignature(t=16, c=11, r=4, s=3), STUB)


def test_psv_matches_compares_claimed_message(toy, toy_signer):
    sig = PVSignature(t=16, c=11, r=3, s=3)
    assert psv_matches(toy, toy_signer.y, sig, raw_message(7, toy), STUB)
    assert not psv_matches(toy, toy_signer.y, sig, raw_message(8, toy), STUB)
    bad = PVSignature(t=16, c=11, r=4, s=3)
    assert not psv_matches(toy, toy_signer.y, bad, raw_message(7, toy), STUB)


def test_exhaustive_round_trip(toy, toy_signer):
    m = raw_message(7, toy)
    count = 0
    for k1 in range(1, toy.q):
        for k2 in range(toy.q):
            sig = psg(toy, toy_signer.x, m, RecoveryNonces(k1, k2), STUB)
            assert psv(toy, toy_signer.y, sig, STUB).value == 7
            count += 1
    assert count == 110


def test_blinding_identity_over_all_nonces(toy, toy_signer):
    # t**s * y_A**-r collapses to g**-k2 for every nonce pair
    m = raw_message(7, toy)
    p, q = toy.p, toy.q
    for k1 in range(1, q):
        for k2 in range(q):
            sig = psg(toy, toy_signer.x, m, RecoveryNonces(k1, k2), STUB)
            lhs = pow_in_subgroup(sig.t, sig.s, p, q) * pow_in_subgroup(toy_signer.y, -sig.r, p, q) % p
            assert lhs == pow_in_subgroup(toy.g, -k2, p, q)


@given(st.integers(min_value=0, max_value=2**32))
@settings(max_examples=25, deadline=None)
def test_random_nonce_round_trip(toy, toy_signer, seed):
    rng = random.Random(seed)
    m = raw_message(1 + seed % (toy.p - 1), toy)
    sig = psg(toy, toy_signer.x, m, random_nonces(toy, rng), STUB)
    assert psv(toy, toy_signer.y, sig, STUB).value == m.value


def test_full_size_payload_round_trip(big, big_signer):
    rng = random.Random(88)
    payload = b"anyone can read this stage"
    m = encode_message(payload, big)
    sig = psg(big, big_signer.x, m, random_nonces(big, rng))
    rec = psv(big, big_signer.y, sig)
    assert rec.payload == payload
    with pytest.raises(InvalidSignature):
        psv(big, big_signer.y, PVSignature(sig.t, sig.c, sig.r ^ 1, sig.s))
