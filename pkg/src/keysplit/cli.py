"""Command-line front end.

Exit codes: 0 success (skipped malformed lines included), 1 malformed
input under --on-malformed fail or an output I/O failure, 2 usage or
configuration errors, 3 input file could not be opened.
"""

import argparse
import sys

from .engine import PartitionConfig, partition
from .errors import ConfigError, IoFailure, MalformedInput
from .keying import KeySpec
from .records import ParseMode, RenderMode
from .report import render_status, write_report
from .sinks import APPEND_EXISTING, DEFAULT_CAPACITY, FRESH


def _delimiter(text: str) -> bytes:
    raw = text.encode("utf-8")
    if len(raw) != 1:
        raise argparse.ArgumentTypeError(f"delimiter must be a single byte: {text!r}")
    return raw


def _key_columns(text: str) -> tuple[int, ...]:
    try:
        columns = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"key columns must be integers: {text!r}")
    if not columns or any(c < 0 for c in columns):
        raise argparse.ArgumentTypeError(f"key columns must be non-negative: {text!r}")
    return columns


def _capacity(text: str) -> int | None:
    if text == "unbounded":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'unbounded': {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"max open files must be positive: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="keysplit",
        description="Split a delimited flat text file into per-composite-key output files.",
    )
    parser.add_argument("--input", required=True, help="input flat text file")
    parser.add_argument("--output-dir", required=True, help="directory for the per-key files")
    parser.add_argument("--delimiter", type=_delimiter, default=b",",
                        help="single field-separator character (default ',')")
    parser.add_argument("--key-columns", type=_key_columns, default=(0, 2), metavar="I,J,...",
                        help="comma-separated 0-based key column indices (default 0,2)")
    parser.add_argument("--key-joiner", default="_", help="text joining key components (default '_')")
    parser.add_argument("--suffix", default=".txt", help="output filename suffix (default '.txt')")
    parser.add_argument("--parse-mode", choices=[m.value for m in ParseMode],
                        default=ParseMode.LEGACY.value,
                        help="legacy drops trailing empty fields; keep_all keeps every field")
    parser.add_argument("--render-mode", choices=[m.value for m in RenderMode],
                        default=RenderMode.SPACED.value,
                        help="spaced writes ' f1 f2 ...'; passthrough writes the raw line")
    parser.add_argument("--max-open-files", type=_capacity, default=DEFAULT_CAPACITY,
                        metavar="N|unbounded", help="open output-file budget (default 512)")
    parser.add_argument("--on-malformed", choices=["skip", "fail"], default="skip",
                        help="skip counts unroutable lines; fail aborts on the first one")
    parser.add_argument("--run-policy", choices=[FRESH, APPEND_EXISTING], default=FRESH,
                        help="fresh truncates pre-existing output files; append_existing appends")
    parser.add_argument("--report", default=None, metavar="PATH",
                        help="also write the run report as JSON to PATH")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        config = PartitionConfig(
            input_path=args.input,
            output_dir=args.output_dir,
            delimiter=args.delimiter,
            key_spec=KeySpec(columns=args.key_columns, joiner=args.key_joiner),
            suffix=args.suffix,
            parse_mode=ParseMode(args.parse_mode),
            render_mode=RenderMode(args.render_mode),
            pool_capacity=args.max_open_files,
            on_malformed=args.on_malformed,
            run_policy=args.run_policy,
        )
    except ConfigError as exc:
        print(f"keysplit: {exc}", file=sys.stderr)
        return 2

    try:
        report = partition(config)
    except IoFailure as exc:
        print(f"keysplit: {exc}", file=sys.stderr)
        return 3 if exc.op == "open_input" else 1
    except MalformedInput as exc:
        print(f"keysplit: {exc}", file=sys.stderr)
        return 1
    except ConfigError as exc:
        print(f"keysplit: {exc}", file=sys.stderr)
        return 2

    sys.stdout.write(render_status(report))
    if args.report is not None:
        try:
            write_report(report, args.report)
        except IoFailure as exc:
            print(f"keysplit: {exc}", file=sys.stderr)
            return 1
    return 0


def main() -> None:
    sys.exit(run())
