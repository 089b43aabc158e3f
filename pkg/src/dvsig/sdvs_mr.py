"""Lee-Chang strong designated verifier signatures with message recovery.

The message never travels alongside the signature: it is folded into
the c component as c = m * y_B**k2 mod p and only the designated
verifier can unfold it,

    t = g**k1,  c = m * y_B**k2,  r = H(m, g**k2),
    s = k1**-1 * (x_A * r - k2)  (mod q),

    recover  m = c * (t**s * y_A**-r)**x_B mod p,
    accept iff  r = H(m, y_A**r * t**-s).

The verifier simulates from (w1, w2) via t = y_A**(w1**-1); the map
(w1, w2) -> (k1, k2) = (x_A * w1**-1, x_A * w1**-1 * w2) is a bijection
of the nonce space, so simulated transcripts are distribution-equal to
real ones.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidNonce, InvalidRandomness, InvalidSignature
from .groupparams import GroupParams
from .modmath import mod_exp, mod_inv, pow_in_subgroup, sample_uniform
from .msghash import HashMode, Message, hash_to_zq, recovered_message


@dataclass(frozen=True)
class RecoverySignature:
    t: int
    c: int
    r: int
    s: int


@dataclass(frozen=True)
class RecoveryNonces:
    """Per-signature randomness: k1 in Z_q*, k2 in Z_q."""

    k1: int
    k2: int


def random_nonces(params: GroupParams, rng: random.Random) -> RecoveryNonces:
    return RecoveryNonces(
        k1=sample_uniform(params.q, True, rng),
        k2=sample_uniform(params.q, False, rng),
    )


def _check_ranges(params: GroupParams, sig: RecoverySignature) -> None:
    p, q = params.p, params.q
    if not (0 <= sig.r < q and 0 <= sig.s < q):
        raise InvalidSignature("r or s outside [0, q)")
    if not 1 <= sig.c < p:
        raise InvalidSignature("c outside [1, p)")
    if sig.t <= 1 or sig.t >= p or mod_exp(sig.t, q, p) != 1:
        raise InvalidSignature("t is not a nontrivial order-q subgroup element")


def mr_sign(
    params: GroupParams,
    signer_secret: int,
    verifier_public: int,
    m: Message,
    nonces: RecoveryNonces,
    mode: HashMode = HashMode.PRODUCTION,
) -> RecoverySignature:
    """Sign m with recovery towards the designated verifier."""
    p, q = params.p, params.q
    k1 = nonces.k1 % q
    k2 = nonces.k2 % q
    if k1 == 0:
        raise InvalidNonce("nonce k1 must be nonzero mod q")
    t = mod_exp(params.g, k1, p)
    c = m.value * mod_exp(verifier_public, k2, p) % p
    r = hash_to_zq(m.value, mod_exp(params.g, k2, p), params, mode)
    s = mod_inv(k1, q) * (signer_secret * r - k2) % q
    return RecoverySignature(t=t, c=c, r=r, s=s)


def mr_recover_verify(
    params: GroupParams,
    signer_public: int,
    verifier_secret: int,
    sig: RecoverySignature,
    mode: HashMode = HashMode.PRODUCTION,
    raw: bool | None = None,
) -> Message:
    """Recover the message and verify in one step; needs the verifier secret."""
    p, q = params.p, params.q
    _check_ranges(params, sig)
    unblind = pow_in_subgroup(sig.t, sig.s, p, q) * pow_in_subgroup(signer_public, -sig.r, p, q) % p
    value = sig.c * mod_exp(unblind, verifier_secret, p) % p
    check = pow_in_subgroup(signer_public, sig.r, p, q) * pow_in_subgroup(sig.t, -sig.s, p, q) % p
    if hash_to_zq(value, check, params, mode) != sig.r:
        raise InvalidSignature("hash check failed")
    return recovered_message(value, params, raw)


def mr_simulate(
    params: GroupParams,
    signer_public: int,
    verifier_secret: int,
    m: Message,
    w1: int,
    w2: int,
    mode: HashMode = HashMode.PRODUCTION,
) -> RecoverySignature:
    """Verifier-side transcript from randomness w1 in Z_q*, w2 in Z_q."""
    p, q = params.p, params.q
    w1 %= q
    w2 %= q
    if w1 == 0:
        raise InvalidRandomness("simulator randomness w1 must be nonzero mod q")
    w1_inv = mod_inv(w1, q)
    t = mod_exp(signer_public, w1_inv, p)
    c = m.value * mod_exp(signer_public, verifier_secret * w1_inv * w2 % q, p) % p
    u = mod_exp(signer_public, w1_inv * w2 % q, p)
    r = hash_to_zq(m.value, u, params, mode)
    s = (w1 * r - w2) % q
    return RecoverySignature(t=t, c=c, r=r, s=s)
