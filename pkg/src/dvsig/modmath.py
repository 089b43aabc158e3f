"""Arbitrary-precision modular arithmetic and exact uniform sampling.

Residues are plain non-negative ints, already reduced modulo their
context modulus; every function here returns values that keep that
invariant.  The randomness source is always passed explicitly, so all
operations are pure and safe to share across threads.
"""

from __future__ import annotations

import random

from .errors import NonInvertible


def mod_exp(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus for a non-negative exponent."""
    return pow(base, exp, modulus)


def mod_inv(a: int, modulus: int) -> int:
    """Multiplicative inverse of a modulo a prime."""
    a %= modulus
    if a == 0:
        raise NonInvertible(f"0 has no inverse mod {modulus}")
    return pow(a, -1, modulus)


def pow_in_subgroup(base: int, exp: int, p: int, q: int) -> int:
    """base**exp mod p for a base of multiplicative order q.

    The exponent may be negative or oversized; it is reduced mod q
    first, which is exact for order-q elements.
    """
    return pow(base, exp % q, p)


def sample_uniform(bound: int, exclude_zero: bool, rng: random.Random) -> int:
    """Uniform draw from [0, bound) or [1, bound).

    Rejection sampling over fixed-width draws keeps the distribution
    exactly uniform (no modulo bias).
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    bits = (bound - 1).bit_length()
    while True:
        value = rng.getrandbits(bits)
        if value >= bound:
            continue
        if exclude_zero and value == 0:
            continue
        return value
