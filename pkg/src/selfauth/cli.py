"""Command-line interface.

    selfauth embed in.ppm out.ppm --key 4
    selfauth verify stego.ppm --key 4 --tamper-map mask.pgm --json
    selfauth metrics a.ppm b.ppm
    selfauth report corpus/ --key 4 --csv table.csv

Exit codes: 0 success/authentic, 1 tampered, 2 error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import authenticator, metrics
from .embedding import DEFAULT_KEY, KEY_MAX, KEY_MIN, EmbedKey
from .errors import SelfAuthError
from .image_io import load_ppm, save_ppm

EXIT_OK, EXIT_TAMPERED, EXIT_ERROR = 0, 1, 2


@dataclass
class CliConfig:
    command: str
    inputs: list[str]
    output: str | None = None
    key_s: int = DEFAULT_KEY
    max_mismatch: int = 0
    emit_json: bool = False
    tamper_map_path: str | None = None
    csv_path: str | None = None


def fmt(value: float) -> str:
    if math.isinf(value) or math.isnan(value):
        return str(value)
    return f"{value:.6f}"


def _json_number(value: float):
    # JSON has no inf/nan literals
    return str(value) if math.isinf(value) or math.isnan(value) else value


def _key_arg(text: str) -> int:
    try:
        s = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"key must be an integer, got {text!r}")
    if not KEY_MIN <= s <= KEY_MAX:
        raise argparse.ArgumentTypeError(f"key must be in [{KEY_MIN}, {KEY_MAX}]")
    return s


def _count_arg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def cmd_embed(cfg: CliConfig) -> int:
    cover = load_ppm(cfg.inputs[0])
    stego = authenticator.encode(cover, EmbedKey(cfg.key_s))
    save_ppm(stego, cfg.output)
    m = metrics.measure(cover, stego)
    print(f"{'MSE':>12} {'PSNR':>12} {'IF':>12}")
    print(f"{fmt(m.mse):>12} {fmt(m.psnr):>12} {fmt(m.image_fidelity):>12}")
    return EXIT_OK


def cmd_verify(cfg: CliConfig) -> int:
    candidate = load_ppm(cfg.inputs[0])
    report = authenticator.verify(candidate, EmbedKey(cfg.key_s))
    passed = report.mismatched_bytes <= cfg.max_mismatch
    if cfg.tamper_map_path:
        Path(cfg.tamper_map_path).write_bytes(authenticator.tamper_mask_to_pgm(report))
    if cfg.emit_json:
        out = report.to_dict()
        out["authentic"] = passed
        print(json.dumps(out))
    else:
        verdict = "AUTHENTIC" if passed else "TAMPERED"
        print(
            f"{verdict}: {report.mismatched_bytes} of "
            f"{report.total_payload_bytes} payload bytes mismatched"
        )
    return EXIT_OK if passed else EXIT_TAMPERED


def cmd_metrics(cfg: CliConfig) -> int:
    a, b = (load_ppm(p) for p in cfg.inputs)
    m = metrics.measure(a, b)
    rows = [
        ("mse", m.mse),
        ("psnr", m.psnr),
        ("if", m.image_fidelity),
        ("sd_a", m.std_dev_orig),
        ("sd_b", m.std_dev_stego),
    ]
    if cfg.emit_json:
        print(json.dumps({k: _json_number(v) for k, v in rows}))
    else:
        for k, v in rows:
            print(f"{k.upper():<6}{fmt(v):>14}")
    return EXIT_OK


def cmd_report(cfg: CliConfig) -> int:
    directory = Path(cfg.inputs[0])
    if not directory.is_dir():
        raise SelfAuthError(f"{directory} is not a directory")
    key = EmbedKey(cfg.key_s)
    rows = []
    for path in sorted(directory.glob("*.ppm"), key=lambda p: p.name):
        try:
            cover = load_ppm(path)
            stego = authenticator.encode(cover, key)
        except (OSError, SelfAuthError) as exc:
            print(f"selfauth: warning: skipping {path.name}: {exc}", file=sys.stderr)
            continue
        m = metrics.measure(cover, stego)
        rows.append((path.stem, m.mse, m.psnr, m.image_fidelity))
    if not rows:
        raise SelfAuthError(f"no readable PPM images in {directory}")

    n = len(rows)
    average = (
        "average",
        sum(r[1] for r in rows) / n,
        sum(r[2] for r in rows) / n,
        sum(r[3] for r in rows) / n,
    )
    width = max(len(r[0]) for r in rows + [average])
    print(f"{'name':<{width}} {'MSE':>12} {'PSNR':>12} {'IF':>12}")
    for name, *vals in rows + [average]:
        print(f"{name:<{width}} " + " ".join(f"{fmt(v):>12}" for v in vals))

    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["name", "mse", "psnr", "if"])
            for name, *vals in rows + [average]:
                writer.writerow([name, *(repr(float(v)) for v in vals)])
    return EXIT_OK


COMMANDS = {
    "embed": cmd_embed,
    "verify": cmd_verify,
    "metrics": cmd_metrics,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selfauth",
        description="Self-authenticating color images via a wavelet digest hidden in blue.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_key(p):
        p.add_argument("--key", "-k", type=_key_arg, default=DEFAULT_KEY,
                       help=f"secret key S in [{KEY_MIN}, {KEY_MAX}] (default {DEFAULT_KEY})")

    p = sub.add_parser("embed", help="watermark a PPM image")
    p.add_argument("input")
    p.add_argument("output")
    add_key(p)

    p = sub.add_parser("verify", help="authenticate a watermarked PPM image")
    p.add_argument("input")
    add_key(p)
    p.add_argument("--tamper-map", metavar="OUT.pgm")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-mismatch", type=_count_arg, default=0,
                   help="mismatched payload bytes tolerated (default 0)")

    p = sub.add_parser("metrics", help="quality metrics between two PPM images")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("report", help="embed every PPM in a directory and tabulate metrics")
    p.add_argument("directory")
    add_key(p)
    p.add_argument("--csv", metavar="OUT.csv")
    return parser


def parse_config(argv=None) -> CliConfig:
    args = build_parser().parse_args(argv)
    if args.command == "embed":
        inputs, output = [args.input], args.output
    elif args.command == "verify":
        inputs, output = [args.input], None
    elif args.command == "metrics":
        inputs, output = [args.a, args.b], None
    else:
        inputs, output = [args.directory], None
    return CliConfig(
        command=args.command,
        inputs=inputs,
        output=output,
        key_s=getattr(args, "key", DEFAULT_KEY),
        max_mismatch=getattr(args, "max_mismatch", 0),
        emit_json=getattr(args, "json", False),
        tamper_map_path=getattr(args, "tamper_map", None),
        csv_path=getattr(args, "csv", None),
    )


def main(argv=None) -> int:
    cfg = parse_config(argv)
    try:
        return COMMANDS[cfg.command](cfg)
    except (SelfAuthError, OSError) as exc:
        print(f"selfauth: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
