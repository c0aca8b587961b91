"""Throughput smoke test: partition the bundled corpus repeated N times.

Builds a large input by concatenation, runs the engine once, and reports
records/second plus the sink pool's high-water mark.
"""

import argparse
import sys
import tempfile
import time
from pathlib import Path

from keysplit.engine import PartitionConfig, partition
from keysplit.sinks import SinkPool

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=10_000)
    parser.add_argument("--capacity", type=int, default=512)
    args = parser.parse_args()

    body = (ROOT / "data" / "traffic_sample.txt").read_bytes()
    pools: list[SinkPool] = []

    def factory(*f_args, **f_kwargs):
        pool = SinkPool(*f_args, **f_kwargs)
        pools.append(pool)
        return pool

    with tempfile.TemporaryDirectory(prefix="keysplit-stress-") as workdir:
        work = Path(workdir)
        big = work / "big.txt"
        with open(big, "wb") as sink:
            for _ in range(args.repeats):
                sink.write(body)

        started = time.perf_counter()
        report = partition(
            PartitionConfig(big, work / "out", pool_capacity=args.capacity),
            pool_factory=factory,
        )
        elapsed = time.perf_counter() - started

    rate = report.records_read / elapsed if elapsed else float("inf")
    print(f"records read   {report.records_read}")
    print(f"distinct keys  {len(report.per_key)}")
    print(f"high water     {pools[0].high_water}")
    print(f"elapsed        {elapsed:.2f}s ({rate:,.0f} records/s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
