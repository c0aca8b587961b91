"""Regenerate golden/traffic_sample from the bundled corpus.

The golden tree is what the tests compare against byte for byte, so only
rerun this after an intentional output-format change, and review the diff.
"""

import sys
from pathlib import Path

from keysplit.cli import run

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    corpus = ROOT / "data" / "traffic_sample.txt"
    golden = ROOT / "golden" / "traffic_sample"
    code = run(["--input", str(corpus), "--output-dir", str(golden)])
    if code == 0:
        names = sorted(p.name for p in golden.iterdir())
        print(f"regenerated {len(names)} files in {golden}: {', '.join(names)}")
    return code


if __name__ == "__main__":
    sys.exit(main())
