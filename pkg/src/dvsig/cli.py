"""Command line front end for the full workflow.

Subcommands: params gen|check, keygen, sign, verify, recover,
designate, dverify, simulate, oracle.  File arguments accept "-" for
raw blobs on stdin/stdout; named files are written armored.

Exit codes: 0 success/accept, 1 verification reject, 2 usage error,
3 malformed input.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import oracle as oraclemod
from .errors import (
    DVSError,
    GenerationTimeout,
    GroupTooLarge,
    InvalidPVSignature,
    InvalidSignature,
    Malformed,
    MalformedEncoding,
    MessageTooLong,
    OutOfRange,
)
from .groupparams import PRESETS, GroupParams, generate_params, validate_params
from .keys import PublicKey, SecretKey, keygen
from .msghash import HashMode, Message, encode_message, raw_message
from .pv_scheme import PVSignature, psg, psv, psv_matches
from .sdvs_mr import RecoverySignature, mr_recover_verify, mr_sign, mr_simulate, random_nonces
from .sdvs_saeednia import SaeedniaSignature, sds_sign_random, sds_simulate_random, sds_verify
from .udvs import DVSignature, SimulatorRandomness, dsg, dsv_recover, dv_simulate
from . import wirefmt
from .modmath import sample_uniform

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3


class UsageError(Exception):
    """Flag combinations the parser alone cannot rule out."""


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_value(path: str, value) -> None:
    if path == "-":
        sys.stdout.buffer.write(wirefmt.encode(value))
        sys.stdout.buffer.flush()
    else:
        Path(path).write_text(wirefmt.armor(value))


def _load(path: str, cls):
    return wirefmt.loads_expected(_read_bytes(path), cls)


def _make_rng(args) -> random.Random:
    if args.seed is not None:
        return random.Random(args.seed)
    return random.SystemRandom()


def _hash_mode(args) -> HashMode:
    if args.hash == "stub":
        if not args.allow_insecure:
            raise UsageError("--hash=stub requires --allow-insecure")
        return HashMode.STUB
    return HashMode.PRODUCTION


def _load_message(args, params: GroupParams) -> Message:
    if args.raw_residue is not None and args.message is not None:
        raise UsageError("give either --message or --raw-residue, not both")
    if args.raw_residue is not None:
        return raw_message(args.raw_residue, params)
    if args.message is not None:
        return encode_message(_read_bytes(args.message), params)
    raise UsageError("a message is required (--message FILE or --raw-residue N)")


def _print_recovered(msg: Message) -> None:
    if msg.payload is not None:
        print(f"payload-hex: {msg.payload.hex()}")
    else:
        print(f"residue: {msg.value}")


def _require(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this invocation")
    return value


# ---------------------------------------------------------------- handlers


def cmd_params_gen(args) -> int:
    rng = _make_rng(args)
    if args.preset is not None:
        params = PRESETS[args.preset]
    else:
        params = generate_params(args.q_bits, args.p_bits, rng)
    report = validate_params(params)
    if not report.valid:  # cannot happen for our own output; fail loudly if it does
        for failure in report.failures:
            print(f"INVALID: {failure}", file=sys.stderr)
        return EXIT_USAGE
    _write_value(args.out, params)
    return EXIT_OK


def cmd_params_check(args) -> int:
    params = _load(args.in_path, GroupParams)
    report = validate_params(params)
    if report.valid:
        print("VALID")
        return EXIT_OK
    for failure in report.failures:
        print(f"INVALID: {failure}")
    return EXIT_REJECT


def cmd_keygen(args) -> int:
    params = _load(args.params, GroupParams)
    pair = keygen(params, _make_rng(args), role=args.role)
    _write_value(args.out_secret, pair.secret())
    _write_value(args.out_public, pair.public())
    return EXIT_OK


def cmd_sign(args) -> int:
    params = _load(args.params, GroupParams)
    mode = _hash_mode(args)
    rng = _make_rng(args)
    message = _load_message(args, params)
    signer_secret = _load(_require(args.key, "--key"), SecretKey).x
    if args.scheme == "pv":
        sig = psg(params, signer_secret, message, random_nonces(params, rng), mode)
    else:
        verifier_public = _load(_require(args.verifier_key, "--verifier-key"), PublicKey).y
        if args.scheme == "saeednia":
            sig = sds_sign_random(params, signer_secret, verifier_public, message, rng, mode)
        else:
            sig = mr_sign(params, signer_secret, verifier_public, message,
                          random_nonces(params, rng), mode)
    _write_value(args.out, sig)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = _load(args.params, GroupParams)
    mode = _hash_mode(args)
    signer_public = _load(_require(args.signer_key, "--signer-key"), PublicKey).y
    if args.scheme == "saeednia":
        verifier_secret = _load(_require(args.key, "--key"), SecretKey).x
        message = _load_message(args, params)
        sig = _load(args.in_path, SaeedniaSignature)
        if sds_verify(params, signer_public, verifier_secret, message, sig, mode):
            print("ACCEPT")
            return EXIT_OK
        print("REJECT")
        return EXIT_REJECT
    sig = _load(args.in_path, PVSignature)
    try:
        recovered = psv(params, signer_public, sig, mode, raw=args.raw or None)
    except InvalidSignature:
        print("REJECT")
        return EXIT_REJECT
    expected = None
    if args.expect_message is not None:
        expected = encode_message(_read_bytes(args.expect_message), params)
    elif args.expect_residue is not None:
        expected = raw_message(args.expect_residue, params)
    if expected is not None and not psv_matches(params, signer_public, sig, expected, mode):
        print("REJECT")
        _print_recovered(recovered)
        return EXIT_REJECT
    print("ACCEPT")
    _print_recovered(recovered)
    return EXIT_OK


def cmd_recover(args) -> int:
    params = _load(args.params, GroupParams)
    mode = _hash_mode(args)
    signer_public = _load(_require(args.signer_key, "--signer-key"), PublicKey).y
    raw = args.raw or None
    try:
        if args.scheme == "leechang":
            verifier_secret = _load(_require(args.key, "--key"), SecretKey).x
            sig = _load(args.in_path, RecoverySignature)
            recovered = mr_recover_verify(params, signer_public, verifier_secret, sig, mode, raw)
        else:
            sig = _load(args.in_path, PVSignature)
            recovered = psv(params, signer_public, sig, mode, raw)
    except InvalidSignature:
        print("REJECT")
        return EXIT_REJECT
    print("ACCEPT")
    _print_recovered(recovered)
    return EXIT_OK


def cmd_designate(args) -> int:
    params = _load(args.params, GroupParams)
    mode = _hash_mode(args)
    rng = _make_rng(args)
    signer_public = _load(_require(args.signer_key, "--signer-key"), PublicKey).y
    verifier_public = _load(_require(args.verifier_key, "--verifier-key"), PublicKey).y
    pv_sig = _load(args.in_path, PVSignature)
    d = sample_uniform(params.q, False, rng)
    try:
        dv_sig = dsg(params, signer_public, verifier_public, pv_sig, d, mode)
    except InvalidPVSignature:
        print("REJECT")
        return EXIT_REJECT
    _write_value(args.out, dv_sig)
    return EXIT_OK


def cmd_dverify(args) -> int:
    params = _load(args.params, GroupParams)
    mode = _hash_mode(args)
    signer_public = _load(_require(args.signer_key, "--signer-key"), PublicKey).y
    verifier_secret = _load(_require(args.key, "--key"), SecretKey).x
    sig = _load(args.in_path, DVSignature)
    try:
        recovered = dsv_recover(params, signer_public, verifier_secret, sig, mode, args.raw or None)
    except InvalidSignature:
        print("REJECT")
        return EXIT_REJECT
    print("ACCEPT")
    _print_recovered(recovered)
    return EXIT_OK


def cmd_simulate(args) -> int:
    params = _load(args.params, GroupParams)
    mode = _hash_mode(args)
    rng = _make_rng(args)
    message = _load_message(args, params)
    signer_public = _load(_require(args.signer_key, "--signer-key"), PublicKey).y
    verifier_secret = _load(_require(args.key, "--key"), SecretKey).x
    if args.scheme == "saeednia":
        sig = sds_simulate_random(params, signer_public, verifier_secret, message, rng, mode)
    elif args.scheme == "leechang":
        w1 = sample_uniform(params.q, True, rng)
        w2 = sample_uniform(params.q, False, rng)
        sig = mr_simulate(params, signer_public, verifier_secret, message, w1, w2, mode)
    else:
        rands = SimulatorRandomness(
            w1=sample_uniform(params.q, True, rng),
            w2=sample_uniform(params.q, False, rng),
            d=sample_uniform(params.q, False, rng),
        )
        sig = dv_simulate(params, signer_public, verifier_secret, message, rands, mode)
    _write_value(args.out, sig)
    return EXIT_OK


def cmd_oracle(args) -> int:
    params = _load(args.params, GroupParams)
    rng = _make_rng(args)
    signer = keygen(params, rng, role="signer")
    verifier = keygen(params, rng, role="verifier")
    while verifier.x == signer.x:  # toy key spaces are tiny; keep the parties distinct
        verifier = keygen(params, rng, role="verifier")
    message = raw_message(args.raw_residue, params)
    real = oraclemod.enumerate_real(params, signer, verifier, message, args.scheme)
    simulated = oraclemod.enumerate_simulated(params, signer, verifier, message, args.scheme)
    report = oraclemod.check_indistinguishable(real, simulated)
    print(f"scheme: {args.scheme}")
    print(f"signer-public: {signer.y}")
    print(f"verifier-public: {verifier.y}")
    print(f"message-residue: {message.value}")
    print(f"real-total: {real.total}")
    print(f"simulated-total: {simulated.total}")
    if report.equal:
        print("verdict: INDISTINGUISHABLE")
        return EXIT_OK
    print("verdict: DISTINGUISHABLE")
    for line in report.lines:
        print(f"diff: {line}")
    return EXIT_REJECT


# ------------------------------------------------------------------ parser


def _add_common(sub, *, seed=True, hash_mode=True) -> None:
    if seed:
        sub.add_argument("--seed", type=int, default=None, help="deterministic randomness seed")
    if hash_mode:
        sub.add_argument("--hash", choices=["production", "stub"], default="production")
        sub.add_argument(
            "--allow-insecure",
            action="store_true",
            help="required to enable the stub hash",
        )


def _add_message_flags(sub) -> None:
    sub.add_argument("--message", help="message payload file ('-' for stdin)")
    sub.add_argument("--raw-residue", type=int, default=None, help="message as a bare residue")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dvsig",
        description="Designated verifier signatures over Schnorr subgroups.",
        epilog="exit codes: 0 accept/success, 1 verification reject, 2 usage error, 3 malformed input",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    params = commands.add_parser("params", help="generate or validate group parameters")
    params_sub = params.add_subparsers(dest="params_command", required=True)

    gen = params_sub.add_parser("gen", help="generate a fresh group (or emit a preset)")
    gen.add_argument("--q-bits", type=int, default=256)
    gen.add_argument("--p-bits", type=int, default=2048)
    gen.add_argument("--preset", choices=sorted(PRESETS), default=None)
    gen.add_argument("--out", required=True)
    _add_common(gen, hash_mode=False)
    gen.set_defaults(handler=cmd_params_gen)

    check = params_sub.add_parser("check", help="validate a params file")
    check.add_argument("--in", dest="in_path", required=True)
    check.set_defaults(handler=cmd_params_check)

    kg = commands.add_parser("keygen", help="generate a key pair")
    kg.add_argument("--params", required=True)
    kg.add_argument("--role", default="", help="free-form label, e.g. signer or verifier")
    kg.add_argument("--out-secret", required=True)
    kg.add_argument("--out-public", required=True)
    _add_common(kg, hash_mode=False)
    kg.set_defaults(handler=cmd_keygen)

    sign = commands.add_parser("sign", help="sign a message")
    sign.add_argument("--scheme", choices=["saeednia", "leechang", "pv"], required=True)
    sign.add_argument("--params", required=True)
    sign.add_argument("--key", help="signer secret key file")
    sign.add_argument("--verifier-key", help="designated verifier public key file")
    _add_message_flags(sign)
    sign.add_argument("--out", required=True)
    _add_common(sign)
    sign.set_defaults(handler=cmd_sign)

    verify = commands.add_parser("verify", help="verify a signature")
    verify.add_argument("--scheme", choices=["saeednia", "pv"], required=True)
    verify.add_argument("--params", required=True)
    verify.add_argument("--key", help="verifier secret key file (saeednia)")
    verify.add_argument("--signer-key", help="signer public key file")
    _add_message_flags(verify)
    verify.add_argument("--in", dest="in_path", required=True)
    verify.add_argument("--expect-message", help="payload file the recovered message must equal (pv)")
    verify.add_argument("--expect-residue", type=int, default=None)
    verify.add_argument("--raw", action="store_true", help="report the recovered residue undecoded")
    _add_common(verify)
    verify.set_defaults(handler=cmd_verify)

    recover = commands.add_parser("recover", help="recover the message from a signature")
    recover.add_argument("--scheme", choices=["leechang", "pv"], required=True)
    recover.add_argument("--params", required=True)
    recover.add_argument("--key", help="verifier secret key file (leechang)")
    recover.add_argument("--signer-key", help="signer public key file")
    recover.add_argument("--in", dest="in_path", required=True)
    recover.add_argument("--raw", action="store_true")
    _add_common(recover)
    recover.set_defaults(handler=cmd_recover)

    designate = commands.add_parser("designate", help="turn a PV signature into a DV signature")
    designate.add_argument("--params", required=True)
    designate.add_argument("--signer-key", help="signer public key file")
    designate.add_argument("--verifier-key", help="designated verifier public key file")
    designate.add_argument("--in", dest="in_path", required=True)
    designate.add_argument("--out", required=True)
    _add_common(designate)
    designate.set_defaults(handler=cmd_designate)

    dverify = commands.add_parser("dverify", help="verify a DV signature and recover the message")
    dverify.add_argument("--params", required=True)
    dverify.add_argument("--key", help="verifier secret key file")
    dverify.add_argument("--signer-key", help="signer public key file")
    dverify.add_argument("--in", dest="in_path", required=True)
    dverify.add_argument("--raw", action="store_true")
    _add_common(dverify)
    dverify.set_defaults(handler=cmd_dverify)

    simulate = commands.add_parser("simulate", help="produce a verifier-side transcript")
    simulate.add_argument("--scheme", choices=["saeednia", "leechang", "udvs"], required=True)
    simulate.add_argument("--params", required=True)
    simulate.add_argument("--key", help="verifier secret key file")
    simulate.add_argument("--signer-key", help="signer public key file")
    _add_message_flags(simulate)
    simulate.add_argument("--out", required=True)
    _add_common(simulate)
    simulate.set_defaults(handler=cmd_simulate)

    oracle = commands.add_parser("oracle", help="exhaustive real-vs-simulated distribution check")
    oracle.add_argument("--scheme", choices=["saeednia", "leechang", "udvs"], required=True)
    oracle.add_argument("--params", required=True)
    oracle.add_argument("--raw-residue", type=int, default=7)
    oracle.add_argument("--seed", type=int, default=0)
    oracle.set_defaults(handler=cmd_oracle)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupTooLarge, GenerationTimeout, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Malformed, MalformedEncoding, MessageTooLong, OutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except DVSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run())
