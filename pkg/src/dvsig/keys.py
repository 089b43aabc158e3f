"""Key material: a secret exponent in Z_q* and its public group element.

Secret keys are only ever serialized into their own secret-key blobs;
signature and parameter blobs never carry them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import OutOfRange
from .groupparams import GroupParams
from .modmath import mod_exp, sample_uniform


@dataclass(frozen=True)
class PublicKey:
    y: int


@dataclass(frozen=True)
class SecretKey:
    x: int


@dataclass(frozen=True)
class KeyPair:
    """Secret exponent x in [1, q-1] with public element y = g**x mod p."""

    x: int
    y: int
    role: str = ""

    def public(self) -> PublicKey:
        return PublicKey(self.y)

    def secret(self) -> SecretKey:
        return SecretKey(self.x)


def derive_public(params: GroupParams, x: int) -> int:
    """g**x mod p for a secret exponent in [1, q-1]."""
    if not 1 <= x < params.q:
        raise OutOfRange(f"secret exponent must lie in [1, {params.q - 1}]")
    return mod_exp(params.g, x, params.p)


def keygen(params: GroupParams, rng: random.Random, role: str = "") -> KeyPair:
    """Fresh key pair with x uniform in [1, q-1]."""
    x = sample_uniform(params.q, True, rng)
    return KeyPair(x=x, y=derive_public(params, x), role=role)
