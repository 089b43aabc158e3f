"""Message encoding into Z_p and the two-input hash into Z_q.

Messages are residues m in [1, p-1].  On groups large enough for byte
framing, a payload is encoded as the big-endian integer of
0x01 || payload, which keeps m >= 1 and makes decoding unambiguous.
Toy-sized groups cannot frame payloads; there a message is a bare
residue ("raw-residue mode") supplied and reported as an integer.

The hash H(m, u) -> Z_q comes in two modes: a production mode backed by
SHA-256 with a fixed domain tag, and a hand-computable stub
(m + u) mod q used by the worked vectors and the enumeration oracle.
Both modes return values in [0, q).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum

from .errors import MalformedEncoding, MessageTooLong, OutOfRange
from .groupparams import GroupParams

_HASH_TAG = b"DVS-H1"
_PAYLOAD_PREFIX = 0x01


class HashMode(Enum):
    PRODUCTION = "production"
    STUB = "stub"


@dataclass(frozen=True)
class Message:
    """A message residue; payload is None in raw-residue mode."""

    value: int
    payload: bytes | None = None


def payload_capacity(params: GroupParams) -> int:
    """Largest payload byte length the group can frame (negative: none)."""
    return params.p.bit_length() // 8 - 2


def supports_payload(params: GroupParams) -> bool:
    return payload_capacity(params) >= 0


def encode_message(payload: bytes, params: GroupParams) -> Message:
    """Frame payload bytes as a residue in [1, p-1]."""
    capacity = payload_capacity(params)
    if capacity < 0 or len(payload) > capacity:
        raise MessageTooLong(
            f"payload of {len(payload)} bytes exceeds capacity "
            f"{max(capacity, 0)} for a {params.p.bit_length()}-bit modulus"
        )
    value = int.from_bytes(bytes([_PAYLOAD_PREFIX]) + payload, "big")
    return Message(value=value, payload=bytes(payload))


def decode_message(value: int, params: GroupParams) -> bytes:
    """Invert encode_message, stripping the leading prefix byte."""
    if not 1 <= value < params.p:
        raise MalformedEncoding(f"residue {value} outside [1, p-1]")
    raw = value.to_bytes((value.bit_length() + 7) // 8, "big")
    if raw[0] != _PAYLOAD_PREFIX:
        raise MalformedEncoding("residue does not start with the payload prefix byte")
    return raw[1:]


def raw_message(value: int, params: GroupParams) -> Message:
    """Wrap a bare residue as a message (toy / raw-residue mode)."""
    if not 1 <= value < params.p:
        raise OutOfRange(f"message residue must lie in [1, {params.p - 1}]")
    return Message(value=value)


def recovered_message(value: int, params: GroupParams, raw: bool | None = None) -> Message:
    """Wrap a residue recovered during verification.

    With raw=None the payload framing is decoded exactly when the group
    is large enough to support it.
    """
    if raw is None:
        raw = not supports_payload(params)
    if raw:
        return Message(value=value)
    return Message(value=value, payload=decode_message(value, params))


def hash_to_zq(m: int, u: int, params: GroupParams, mode: HashMode) -> int:
    """H(m, u) in [0, q) over residues already reduced mod p."""
    if mode is HashMode.STUB:
        return (m + u) % params.q
    digest = hashlib.sha256()
    digest.update(_HASH_TAG)
    for value in (m, u):
        magnitude = value.to_bytes((value.bit_length() + 7) // 8, "big")
        digest.update(len(magnitude).to_bytes(4, "big"))
        digest.update(magnitude)
    return int.from_bytes(digest.digest(), "big") % params.q
