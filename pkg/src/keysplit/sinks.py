"""Bounded pool of append-mode output files with LRU eviction.

The pool keeps at most ``capacity`` files open at once. A write to an
evicted file transparently reopens it in append mode, so final file
contents are byte-identical whatever the capacity (capacity affects
open/close traffic only, never content).

Under the default fresh-run policy the first acquire of a filename in
this run truncates any pre-existing file, making reruns deterministic.
The append-existing policy keeps strict ">>" behaviour instead: a rerun
appends to last run's output.

A pool instance is single-owner: use it from one thread at a time.
"""

from collections import OrderedDict
from pathlib import Path
from typing import BinaryIO

from .errors import ConfigError, IoFailure

FRESH = "fresh"
APPEND_EXISTING = "append_existing"

#: safely below common per-process descriptor limits
DEFAULT_CAPACITY = 512


class SinkPool:
    def __init__(
        self,
        output_dir: str | Path,
        capacity: int | None = DEFAULT_CAPACITY,
        run_policy: str = FRESH,
    ):
        if capacity is not None and capacity < 1:
            raise ConfigError(f"pool capacity must be positive or unbounded: {capacity}")
        if run_policy not in (FRESH, APPEND_EXISTING):
            raise ConfigError(f"unknown run policy: {run_policy!r}")
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)
        self.capacity = capacity
        self.run_policy = run_policy
        self.created: set[str] = set()
        self.bytes_written: dict[str, int] = {}
        self.high_water = 0
        self._open: OrderedDict[str, BinaryIO] = OrderedDict()

    def open_count(self) -> int:
        return len(self._open)

    def is_open(self, filename: str) -> bool:
        return filename in self._open

    def acquire(self, filename: str) -> BinaryIO:
        """Return an open append-mode sink for ``filename``, creating it
        and evicting the least-recently-used sink as needed."""
        sink = self._open.get(filename)
        if sink is not None:
            self._open.move_to_end(filename)
            return sink
        if self.capacity is not None and len(self._open) >= self.capacity:
            old_name, old_sink = self._open.popitem(last=False)
            self._close(old_name, old_sink)
        first_touch = filename not in self.created
        mode = "wb" if (first_touch and self.run_policy == FRESH) else "ab"
        try:
            sink = open(self.output_dir / filename, mode)
        except OSError as exc:
            raise IoFailure(
                "open", filename, f"Could not open file for writing. ({filename}: {exc})"
            ) from exc
        self.created.add(filename)
        self.bytes_written.setdefault(filename, 0)
        self._open[filename] = sink
        if len(self._open) > self.high_water:
            self.high_water = len(self._open)
        return sink

    def write_line(self, filename: str, line: bytes) -> None:
        """Append one already-terminated line to ``filename``."""
        sink = self.acquire(filename)
        try:
            sink.write(line)
        except OSError as exc:
            raise IoFailure("write", filename, f"write failed: {filename}: {exc}") from exc
        self.bytes_written[filename] += len(line)

    def close_all(self) -> dict[str, int]:
        """Flush and close every open sink; return per-file byte counts."""
        while self._open:
            name, sink = self._open.popitem(last=False)
            self._close(name, sink)
        return dict(self.bytes_written)

    def _close(self, name: str, sink: BinaryIO) -> None:
        try:
            sink.close()
        except OSError as exc:
            raise IoFailure("flush", name, f"flush failed: {name}: {exc}") from exc
