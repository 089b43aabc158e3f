"""Designated verifier signatures over Schnorr subgroups.

Four related schemes built on discrete logarithms in a prime-order-q
subgroup of Z_p*:

* Saeednia-style strong DVS (sign / verify / simulate),
* Lee-Chang strong DVS with message recovery,
* a probabilistic publicly verifiable (PV) signature with recovery,
* universal designation (UDVS): a holder converts a PV signature into
  a designated verifier signature for one chosen verifier,

together with canonical wire encodings, a CLI, and an exhaustive
toy-scale enumeration oracle that checks the simulators' transcripts
are exactly distribution-equal to real signatures.

This is a research and teaching artifact.  Toy groups and the stub
hash are deliberately breakable, and nothing here is hardened against
side channels.
"""

from .errors import (
    DegenerateHash,
    DVSError,
    GenerationTimeout,
    GroupTooLarge,
    InvalidNonce,
    InvalidPVSignature,
    InvalidRandomness,
    InvalidSignature,
    Malformed,
    MalformedEncoding,
    MessageTooLong,
    NonInvertible,
    OutOfRange,
    SchemeMismatch,
)
from .groupparams import TOY23, GroupParams, ValidationReport, generate_params, validate_params
from .keys import KeyPair, PublicKey, SecretKey, derive_public, keygen
from .msghash import (
    HashMode,
    Message,
    decode_message,
    encode_message,
    hash_to_zq,
    payload_capacity,
    raw_message,
)
from .oracle import (
    DiffReport,
    RecoveryCensus,
    SignatureMultiset,
    check_indistinguishable,
    enumerate_real,
    enumerate_simulated,
    forgery_acceptance,
    wrong_key_recovery_census,
)
from .pv_scheme import PVSignature, psg, psv, psv_matches
from .sdvs_mr import (
    RecoveryNonces,
    RecoverySignature,
    mr_recover_verify,
    mr_sign,
    mr_simulate,
)
from .sdvs_saeednia import (
    SaeedniaNonces,
    SaeedniaSignature,
    sds_sign,
    sds_sign_random,
    sds_simulate,
    sds_simulate_random,
    sds_verify,
)
from .udvs import DVSignature, SimulatorRandomness, dsg, dsv_recover, dv_simulate

__version__ = "0.1.0"
