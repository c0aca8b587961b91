"""Partition the bundled traffic corpus and print the status summary."""

import argparse
import sys
from pathlib import Path

from keysplit.cli import run

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--output-dir",
        default=str(ROOT / "out" / "traffic_sample"),
        help="where the per-key files go (default: out/traffic_sample)",
    )
    args = parser.parse_args()
    corpus = ROOT / "data" / "traffic_sample.txt"
    return run(["--input", str(corpus), "--output-dir", args.output_dir])


if __name__ == "__main__":
    sys.exit(main())
