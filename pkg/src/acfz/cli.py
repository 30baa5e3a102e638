"""Command-line front end: keygen, encrypt, decrypt, analyze, fis.

Exit codes are stable: 0 success, 2 bad input file, 3 bad key file,
4 internal invariant failure, 5 container or key integrity failure,
6 dimension mismatch, 7 FIS configuration failure. Diagnostics go to
stdout/stderr and never affect file outputs.
"""

import argparse
import secrets
import sys

import numpy as np

from . import fis, imgio, keyschedule, metrics, pipeline
from .chaos import DEFAULT_BURN_IN, DEFAULT_MU
from .primitives import sha512

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_BAD_KEY = 3
EXIT_INTERNAL = 4
EXIT_INTEGRITY = 5
EXIT_DIMENSION = 6
EXIT_FIS_CONFIG = 7


def _read_master_key(path: str) -> bytes:
    try:
        with open(path, "rb") as f:
            key = f.read()
    except OSError as e:
        raise _CliError(EXIT_BAD_KEY, f"cannot read key file: {e}") from None
    if len(key) != keyschedule.MASTER_KEY_SIZE:
        raise _CliError(
            EXIT_BAD_KEY,
            f"master key file must be {keyschedule.MASTER_KEY_SIZE} bytes, "
            f"got {len(key)}",
        )
    return key


def _load_image(path: str) -> np.ndarray:
    try:
        return imgio.load_gray(path)
    except (imgio.UnsupportedFormat, imgio.CorruptHeader, imgio.MaxvalNot255, OSError) as e:
        raise _CliError(EXIT_BAD_INPUT, f"cannot load image {path}: {e}") from None


def _load_fis(path: str | None):
    if path is None:
        return None
    try:
        with open(path, "r", encoding="utf-8") as f:
            return fis.load_fis_config(f.read())
    except (fis.ParseError, fis.ValidationError, OSError) as e:
        raise _CliError(EXIT_FIS_CONFIG, f"bad FIS config {path}: {e}") from None


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def cmd_keygen(args) -> int:
    if args.seed is not None:
        key = sha512(args.seed.encode("utf-8"))
    else:
        key = secrets.token_bytes(keyschedule.MASTER_KEY_SIZE)
    try:
        with open(args.out, "wb") as f:
            f.write(key)
    except OSError as e:
        print(f"error: cannot write key: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    print(f"wrote {len(key)}-byte master key to {args.out}")
    return EXIT_OK


def cmd_encrypt(args) -> int:
    img = _load_image(args.image)
    master = _read_master_key(args.key)
    try:
        config = pipeline.RunConfig(
            sec=args.sec,
            mu=args.mu,
            t1=args.t1,
            t2=args.t2,
            burn_in=args.burn_in,
            fis1=_load_fis(args.fis1),
            fis2=_load_fis(args.fis2),
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        result = pipeline.encrypt_image(img, master, config)
        imgio.store_cipher(
            result.payload, result.width, result.height, args.out_cipher
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    with open(args.out_key, "wb") as f:
        f.write(result.decryption_key)
    cipher_entropy = metrics.entropy(np.frombuffer(result.payload, dtype=np.uint8))
    print(f"s_dive    {result.s_dive:.6f}")
    print(f"aes_flag  {result.aes_flag}")
    print(f"xor_count {result.xor_count}")
    print(f"d_dive    {result.d_dive_history[-1]:.6f}")
    print(f"entropy   {cipher_entropy:.4f}")
    return EXIT_OK


def cmd_decrypt(args) -> int:
    try:
        payload, width, height = imgio.load_cipher(args.cipher)
    except OSError as e:
        print(f"error: cannot read container: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (imgio.BadMagic, imgio.UnknownVersion, imgio.LengthMismatch,
            imgio.CorruptHeader) as e:
        print(f"error: container integrity: {e}", file=sys.stderr)
        return EXIT_INTEGRITY
    try:
        with open(args.key, "rb") as f:
            key_file = f.read()
    except OSError as e:
        print(f"error: cannot read key file: {e}", file=sys.stderr)
        return EXIT_BAD_KEY
    try:
        img = pipeline.decrypt_payload(
            payload, width, height, key_file, args.mu, args.burn_in
        )
    except keyschedule.WrongLength as e:
        print(f"error: key file: {e}", file=sys.stderr)
        return EXIT_BAD_KEY
    except (keyschedule.UnknownVersion, keyschedule.NonzeroPadding) as e:
        print(f"error: key integrity: {e}", file=sys.stderr)
        return EXIT_INTEGRITY
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    imgio.store_gray(img, args.out)
    print(f"wrote decrypted image to {args.out}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    img = _load_image(args.image)
    pair = _load_image(args.pair) if args.pair else None
    try:
        report = metrics.build_report(img, pair)
    except metrics.DimensionMismatch as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DIMENSION
    text = metrics.report_text(report)
    print(text, end="")
    if args.out:
        with open(args.out + ".txt", "w", encoding="utf-8") as f:
            f.write(text)
        with open(args.out + ".json", "w", encoding="utf-8") as f:
            f.write(metrics.report_json(report))
        with open(args.out + ".hist.csv", "w", encoding="utf-8") as f:
            f.write(metrics.histogram_csv(report))
        print(f"reports written to {args.out}.txt/.json/.hist.csv")
    return EXIT_OK


def cmd_fis(args) -> int:
    try:
        with open(args.config, "r", encoding="utf-8") as f:
            config = fis.load_fis_config(f.read())
    except (fis.ParseError, fis.ValidationError, OSError) as e:
        print(f"error: bad FIS config: {e}", file=sys.stderr)
        return EXIT_FIS_CONFIG
    values = {}
    for item in args.inputs:
        if "=" not in item:
            print(f"error: inputs must be name=value, got {item!r}", file=sys.stderr)
            return EXIT_FIS_CONFIG
        name, _, raw = item.partition("=")
        try:
            values[name.strip()] = float(raw)
        except ValueError:
            print(f"error: bad number in {item!r}", file=sys.stderr)
            return EXIT_FIS_CONFIG
    try:
        strengths = fis.firing_strengths(config, values)
        crisp = fis.evaluate(config, values)
    except fis.UnknownVariable as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FIS_CONFIG
    for i, (rule, s) in enumerate(zip(config.rules, strengths), start=1):
        ant = " AND ".join(f"{v} IS {t}" for v, t in rule.antecedents)
        cv, ct = rule.consequent
        print(f"rule {i}: IF {ant} THEN {cv} IS {ct}  [firing {s:.6f}]")
    print(f"{config.output.name} = {crisp:.6f}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acfz",
        description="Adaptive chaotic-fuzzy grayscale image encryption toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a 64-byte master key file")
    p.add_argument("out", help="output key path")
    p.add_argument("--seed", help="derive the key from a seed string (tests only)")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a grayscale image")
    p.add_argument("image", help="input image (P5 PGM or grayscale PNG)")
    p.add_argument("key", help="64-byte master key file")
    p.add_argument("out_cipher", help="output cipher container path")
    p.add_argument("out_key", help="output 130-byte decryption key path")
    p.add_argument("--sec", type=float, default=80.0,
                   help="requested security level 0..100 (default 80)")
    p.add_argument("--mu", type=float, default=DEFAULT_MU)
    p.add_argument("--t1", type=float, default=0.5)
    p.add_argument("--t2", type=float, default=0.5)
    p.add_argument("--burn-in", type=int, default=DEFAULT_BURN_IN, dest="burn_in")
    p.add_argument("--fis1", help="FIS config file for the S-Dive gate")
    p.add_argument("--fis2", help="FIS config file for the D-Dive gate")
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a cipher container")
    p.add_argument("cipher", help="cipher container path")
    p.add_argument("key", help="130-byte decryption key file")
    p.add_argument("out", help="output image path (P5 PGM)")
    p.add_argument("--mu", type=float, default=DEFAULT_MU,
                   help="must match the encrypting run")
    p.add_argument("--burn-in", type=int, default=DEFAULT_BURN_IN, dest="burn_in",
                   help="must match the encrypting run")
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("analyze", help="security report for one or two images")
    p.add_argument("image", help="image to analyze")
    p.add_argument("pair", nargs="?", help="optional second image for NPCR/UACI")
    p.add_argument("-o", "--out", help="base path for .txt/.json/.hist.csv reports")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("fis", help="evaluate a FIS config on given inputs")
    p.add_argument("config", help="FIS configuration file")
    p.add_argument("inputs", nargs="+", help="input assignments, e.g. Entropy=7.9")
    p.set_defaults(func=cmd_fis)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
