"""Saeednia-style strong designated verifier signatures.

The signer commits to c = y_B**k mod p, a value only reachable with the
verifier's key material, and publishes (r, s, t) with

    r = H(m, c),    s = k * t**-1 - r * x_A  (mod q).

Verification recomputes c as (g**s * y_A**r)**(t * x_B) mod p and so
needs the verifier's secret x_B: nobody else can even check validity.
The verifier can also simulate signatures with the same distribution
from randomness (s', r'), which is what makes transcripts worthless to
third parties.

A signature with r = 0 would verify but cannot be simulated (the
simulator inverts r), so signing refuses r = 0 for explicit nonces and
resamples in random mode.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DegenerateHash, InvalidNonce, InvalidRandomness
from .groupparams import GroupParams
from .modmath import mod_exp, mod_inv, pow_in_subgroup, sample_uniform
from .msghash import HashMode, Message, hash_to_zq


@dataclass(frozen=True)
class SaeedniaSignature:
    r: int
    s: int
    t: int


@dataclass(frozen=True)
class SaeedniaNonces:
    """Per-signature randomness: k in Z_q, t in Z_q*."""

    k: int
    t: int


def sds_sign(
    params: GroupParams,
    signer_secret: int,
    verifier_public: int,
    m: Message,
    nonces: SaeedniaNonces,
    mode: HashMode = HashMode.PRODUCTION,
) -> SaeedniaSignature:
    """Sign m towards the verifier whose public element is verifier_public."""
    q = params.q
    k = nonces.k % q
    t = nonces.t % q
    if t == 0:
        raise InvalidNonce("nonce t must be nonzero mod q")
    c = mod_exp(verifier_public, k, params.p)
    r = hash_to_zq(m.value, c, params, mode)
    if r == 0:
        raise DegenerateHash("hash hit r = 0; pick fresh nonces")
    s = (k * mod_inv(t, q) - r * signer_secret) % q
    return SaeedniaSignature(r=r, s=s, t=t)


def sds_sign_random(
    params: GroupParams,
    signer_secret: int,
    verifier_public: int,
    m: Message,
    rng: random.Random,
    mode: HashMode = HashMode.PRODUCTION,
) -> SaeedniaSignature:
    """Sign with fresh nonces, resampling while the hash is degenerate."""
    while True:
        nonces = SaeedniaNonces(
            k=sample_uniform(params.q, False, rng),
            t=sample_uniform(params.q, True, rng),
        )
        try:
            return sds_sign(params, signer_secret, verifier_public, m, nonces, mode)
        except DegenerateHash:
            continue


def sds_verify(
    params: GroupParams,
    signer_public: int,
    verifier_secret: int,
    m: Message,
    sig: SaeedniaSignature,
    mode: HashMode = HashMode.PRODUCTION,
) -> bool:
    """Check r = H(m, (g**s * y_A**r)**(t * x_B) mod p); out-of-range fields fail."""
    p, q = params.p, params.q
    if not (0 <= sig.r < q and 0 <= sig.s < q and 1 <= sig.t < q):
        return False
    base = mod_exp(params.g, sig.s, p) * mod_exp(signer_public, sig.r, p) % p
    c = pow_in_subgroup(base, sig.t * verifier_secret, p, q)
    return hash_to_zq(m.value, c, params, mode) == sig.r


def sds_simulate(
    params: GroupParams,
    signer_public: int,
    verifier_secret: int,
    m: Message,
    s_rand: int,
    r_rand: int,
    mode: HashMode = HashMode.PRODUCTION,
) -> SaeedniaSignature:
    """Verifier-side transcript from randomness s' in Z_q, r' in Z_q*.

    The intermediates (s', r', and the bridging factor) are transient;
    only the final (r, s, t) ever leaves this function.
    """
    q = params.q
    s_rand %= q
    r_rand %= q
    if r_rand == 0:
        raise InvalidRandomness("simulator randomness r' must be nonzero mod q")
    c = mod_exp(params.g, s_rand, params.p) * mod_exp(signer_public, r_rand, params.p) % params.p
    r = hash_to_zq(m.value, c, params, mode)
    if r == 0:
        raise DegenerateHash("hash hit r = 0; pick fresh simulator randomness")
    ell = r_rand * mod_inv(r, q) % q
    if ell == 0:  # unreachable for prime q; guards the contract
        raise InvalidRandomness("degenerate bridging factor")
    s = s_rand * mod_inv(ell, q) % q
    t = ell * mod_inv(verifier_secret, q) % q
    return SaeedniaSignature(r=r, s=s, t=t)


def sds_simulate_random(
    params: GroupParams,
    signer_public: int,
    verifier_secret: int,
    m: Message,
    rng: random.Random,
    mode: HashMode = HashMode.PRODUCTION,
) -> SaeedniaSignature:
    """Simulate with fresh randomness, resampling while the hash is degenerate."""
    while True:
        s_rand = sample_uniform(params.q, False, rng)
        r_rand = sample_uniform(params.q, True, rng)
        try:
            return sds_simulate(params, signer_public, verifier_secret, m, s_rand, r_rand, mode)
        except DegenerateHash:
            continue
