"""Command line interface.

Exit codes:
  0  success (attacks exit 0 whether or not they recover anything)
  1  golden-value mismatch in a demo, or a failed ``--assert``
  2  invalid sizes or arguments
  3  key generation retry budget exhausted
  4  malformed key or ciphertext file
  5  padding/sentinel failure on decrypt (wrong key or corruption)
  6  attack refused or abandoned on its work budget
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import fixtures
from .bench import expansion_ratio, run_bench
from .cipher import Ciphertext, decrypt, encrypt, encrypt_with_keys, SessionKeys
from .codec import PaddingError, decode_blocks, encode_blocks
from .cryptanalysis import (
    MalformedKeyError,
    WorkBudgetExceeded,
    bruteforce_dehp1,
    coppersmith_cases,
    factor_semiprime,
    gaussian_heuristic,
    lattice_attack,
    private_key_candidates,
)
from .cryptanalysis.dehp import MAX_KEY_BITS
from .formats import (
    FormatError,
    dump_ciphertexts,
    dump_private,
    dump_public,
    load_ciphertexts,
    load_private,
    load_public,
)
from .keygen import STRICT, TOY, KeygenError, PublicKey, derive_size_profile, keygen, validate_keypair
from .numeric import PrimeGenerationError, RandomSource
from .pitfalls import improper_size_transcript, keyexchange_transcript

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_KEYGEN = 3
EXIT_FORMAT = 4
EXIT_PADDING = 5
EXIT_BUDGET = 6


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: Optional[str], what: str) -> str:
    if not path:
        raise CliError(f"--{what} is required", EXIT_USAGE)
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_FORMAT) from None


def _write(path: Optional[str], data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode()
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(path).write_bytes(data)


def _rng(args) -> RandomSource:
    return RandomSource(args.seed)


def _load_pub(args) -> PublicKey:
    try:
        pub, _ = load_public(_read(args.pub, "pub"))
    except FormatError as exc:
        raise CliError(f"malformed public key: {exc}", EXIT_FORMAT) from None
    return pub


def _load_cts(args) -> list[Ciphertext]:
    try:
        return load_ciphertexts(_read(args.input, "in"))
    except FormatError as exc:
        raise CliError(f"malformed ciphertext: {exc}", EXIT_FORMAT) from None


def cmd_keygen(args) -> int:
    if not args.out:
        raise CliError("--out is required", EXIT_USAGE)
    try:
        kp = keygen(_rng(args), args.n, args.mode)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    except (KeygenError, PrimeGenerationError) as exc:
        raise CliError(str(exc), EXIT_KEYGEN) from None
    _write(f"{args.out}.pub", dump_public(kp.public, kp.mode))
    _write(f"{args.out}.key", dump_private(kp))
    report = validate_keypair(kp)
    print(f"wrote {args.out}.pub and {args.out}.key (n={args.n}, mode={kp.mode})", file=sys.stderr)
    if report.failures:
        print(f"warning: failed checks: {', '.join(report.failures)}", file=sys.stderr)
    return 0


def cmd_encrypt(args) -> int:
    pub = _load_pub(args)
    m_bits = pub.profile.m_bits
    if m_bits < 16:
        raise CliError(f"n={pub.n} gives {m_bits}-bit blocks; need n >= 20 for files", EXIT_USAGE)
    data = sys.stdin.buffer.read() if args.input in (None, "-") else Path(args.input).read_bytes()
    rng = _rng(args)
    cts = [encrypt(rng, pub, block) for block in encode_blocks(data, m_bits)]
    _write(args.out, dump_ciphertexts(cts))
    return 0


def cmd_decrypt(args) -> int:
    try:
        priv, _, _ = load_private(_read(args.key, "key"))
    except FormatError as exc:
        raise CliError(f"malformed private key: {exc}", EXIT_FORMAT) from None
    cts = _load_cts(args)
    if any(ct.n != priv.n for ct in cts):
        raise CliError("ciphertext was produced under a different key size", EXIT_FORMAT)
    try:
        data = decode_blocks([decrypt(priv, ct) for ct in cts], priv.profile.m_bits)
    except PaddingError as exc:
        raise CliError(f"decryption failed: {exc}", EXIT_PADDING) from None
    _write(args.out, data)
    return 0


def _target(args) -> tuple[PublicKey, list[Ciphertext], Optional[tuple[int, int, int]]]:
    if args.fixture:
        pub = PublicKey(fixtures.E1, fixtures.E2, fixtures.N)
        ct = Ciphertext(fixtures.C, fixtures.N)
        return pub, [ct], (fixtures.K1, fixtures.K2, fixtures.M)
    pub = _load_pub(args)
    cts = _load_cts(args) if args.input else []
    truth = tuple(int(x) for x in args.truth.split(",")) if args.truth else None
    return pub, cts, truth  # type: ignore[return-value]


def _one_block(args, cts: list[Ciphertext]) -> Ciphertext:
    if not cts:
        raise CliError("--in ciphertext is required for this attack", EXIT_USAGE)
    if not 0 <= args.block < len(cts):
        raise CliError(f"--block {args.block} out of range", EXIT_USAGE)
    return cts[args.block]


def cmd_attack(args) -> int:
    kind = args.attack
    if kind == "bruteforce":
        n = args.n
        if args.pub and not args.fixture:
            n = _load_pub(args).n
        elif args.fixture:
            n = fixtures.N
        k_bits = derive_size_profile(n).k_bits
        if k_bits > MAX_KEY_BITS:
            raise CliError(f"refusing 2**{k_bits} session keys (limit 2**{MAX_KEY_BITS})", EXIT_BUDGET)

    pub, cts, truth = _target(args)
    ok = True
    if kind == "lattice":
        outcome = lattice_attack(pub, _one_block(args, cts), delta=args.delta, truth=truth)
        sys.stdout.write(outcome.report())
        ok = bool(outcome.candidates)
    elif kind == "bruteforce":
        try:
            outcome = bruteforce_dehp1(pub, _one_block(args, cts), truth=truth)
        except WorkBudgetExceeded as exc:
            raise CliError(str(exc), EXIT_BUDGET) from None
        sys.stdout.write(outcome.report())
        ok = bool(outcome.candidates)
    elif kind == "gaussian":
        for i, ct in enumerate(cts):
            print(f"block {i}: sigma_log2: {gaussian_heuristic(ct.c):.4f}")
        print(f"message_bits: {pub.profile.m_bits}")
    elif kind == "coppersmith-bound":
        for name, value in coppersmith_cases(pub).items():
            print(f"{name}: {value:.4f}")
    elif kind == "factor":
        ok = _factor(args, pub, cts)
    return EXIT_MISMATCH if args.assert_success and not ok else 0


def _factor(args, pub: PublicKey, cts: list[Ciphertext]) -> bool:
    try:
        f1, f2 = factor_semiprime(pub.e1, args.budget)
    except WorkBudgetExceeded as exc:
        raise CliError(str(exc), EXIT_BUDGET) from None
    if f2 == 1:
        raise CliError(str(MalformedKeyError("e1 is prime")), EXIT_FORMAT)
    candidates = private_key_candidates(pub, f1, f2)
    chosen, plaintext = candidates[0], None
    if cts:
        # the right factor is the one whose decryption has valid padding
        for key in candidates:
            try:
                plaintext = decode_blocks([decrypt(key, ct) for ct in cts], pub.profile.m_bits)
            except PaddingError:
                continue
            chosen = key
            break
    print(f"factors: {f1} {f2}")
    print(f"p: {chosen.p}")
    print(f"v: {chosen.v}")
    if cts:
        print(f"plaintext_recovered: {'yes' if plaintext is not None else 'no'}")
        if plaintext is not None and args.out:
            _write(args.out, plaintext)
        return plaintext is not None
    return True


def _demo_reference() -> int:
    kp = fixtures.reference_keypair()
    s = kp.secrets
    ct = encrypt_with_keys(kp.public, fixtures.M, SessionKeys(fixtures.K1, fixtures.K2))
    m = decrypt(kp.private, ct)
    checks = [
        ("a1", s.a1, fixtures.A1),
        ("a2", s.a2, fixtures.A2),
        ("a3", s.a3, fixtures.A3),
        ("v", kp.private.v, fixtures.V),
        ("e1", kp.public.e1, fixtures.E1),
        ("e2", kp.public.e2, fixtures.E2),
        ("p", kp.private.p, fixtures.P),
        ("q", kp.public.e1 // kp.private.p, fixtures.Q),
        ("k1", fixtures.K1, 33),
        ("k2", fixtures.K2, 32),
        ("C", ct.c, fixtures.C),
        ("C mod p", ct.c % kp.private.p, fixtures.C_MOD_P),
        ("m", m, fixtures.M),
    ]
    bad = 0
    for name, got, want in checks:
        flag = "ok" if got == want else f"MISMATCH (expected {want})"
        bad += got != want
        print(f"{name:>8} = {got}  {flag}")
    print(f"expansion ratio: {expansion_ratio(kp.public):.4f}")
    print("PASS" if not bad else "FAIL")
    return 0 if not bad else EXIT_MISMATCH


def cmd_demo(args) -> int:
    if args.demo == "paper-example":
        return _demo_reference()
    if args.demo == "keyexchange":
        text = keyexchange_transcript()
        sys.stdout.write(text)
        return 0 if "forgery: SUCCESS" in text else EXIT_MISMATCH
    text = improper_size_transcript(_rng(args))
    sys.stdout.write(text)
    return 0 if "recovery: SUCCESS" in text else EXIT_MISMATCH


def cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",")]
    if any(s < 128 for s in sizes):
        raise CliError("bench sizes must be strict-mode valid (n >= 128)", EXIT_USAGE)
    report = run_bench(sizes, args.trials, _rng(args))
    sys.stdout.write(report.to_csv() if args.csv else report.to_table())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aabeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *flags):
        if "n" in flags:
            p.add_argument("--n", type=int, default=512, help="prime size in bits (default 512)")
        if "mode" in flags:
            p.add_argument("--mode", choices=(STRICT, TOY), default=STRICT)
        if "seed" in flags:
            p.add_argument("--seed", type=int, default=None, help="deterministic seed (tests only)")
        if "io" in flags:
            p.add_argument("--in", dest="input", default=None)
            p.add_argument("--out", default=None)
        if "pub" in flags:
            p.add_argument("--pub", default=None, help="public key file")
        if "key" in flags:
            p.add_argument("--key", default=None, help="private key file")

    p = sub.add_parser("keygen", help="generate a key pair")
    common(p, "n", "mode", "seed")
    p.add_argument("--out", required=False, help="path prefix for .pub and .key")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a file")
    common(p, "seed", "io", "pub")
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    common(p, "io", "key")
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("attack", help="run an attack or estimate")
    p.add_argument(
        "attack", choices=("lattice", "bruteforce", "factor", "gaussian", "coppersmith-bound")
    )
    common(p, "n", "io", "pub")
    p.add_argument("--fixture", action="store_true", help="use the built-in n=32 reference instance")
    p.add_argument("--truth", default=None, help="known k1,k2,m for success reporting")
    p.add_argument("--block", type=int, default=0, help="ciphertext block to attack")
    p.add_argument("--delta", type=float, default=0.99, help="LLL parameter")
    p.add_argument("--budget", type=int, default=1 << 22, help="factoring step budget")
    p.add_argument("--assert", dest="assert_success", action="store_true",
                   help="exit 1 when the attack recovers nothing")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("demo", help="replay worked examples")
    p.add_argument("demo", choices=("keyexchange", "improper-size", "paper-example"))
    common(p, "seed")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("bench", help="timing and expansion report")
    p.add_argument("--sizes", default="256,512,1024,2048")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--csv", action="store_true")
    common(p, "seed")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) == "attack" and args.attack != "bruteforce" and not args.fixture:
        if not args.pub:
            print("error: --pub or --fixture is required", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
