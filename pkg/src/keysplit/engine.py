"""Single-pass partition loop: stream, parse, key, route, render, write.

Streaming contract: at most one input record is buffered at any moment;
per-run memory grows only with the number of distinct keys (the counter
map) and the sink pool capacity. Routing depends only on the key
columns, so records with equal keys always land in the same file, in
input order.
"""

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO, Callable, Iterator

from .errors import ConfigError, IoFailure, MalformedInput
from .keying import KeySpec, extract_key, sanitize_stem, target_filename
from .records import MalformedReason, ParseMode, RenderMode, parse_record, render_record
from .report import FileStat, RunReport
from .sinks import DEFAULT_CAPACITY, FRESH, SinkPool

SKIP = "skip"
FAIL = "fail"


@dataclass(frozen=True, slots=True)
class PartitionConfig:
    input_path: str | Path
    output_dir: str | Path
    delimiter: bytes = b","
    key_spec: KeySpec = field(default_factory=KeySpec)
    suffix: str = ".txt"
    parse_mode: ParseMode = ParseMode.LEGACY
    render_mode: RenderMode = RenderMode.SPACED
    pool_capacity: int | None = DEFAULT_CAPACITY
    on_malformed: str = SKIP
    run_policy: str = FRESH

    def __post_init__(self):
        if isinstance(self.delimiter, str):
            object.__setattr__(self, "delimiter", self.delimiter.encode("utf-8"))
        if len(self.delimiter) != 1:
            raise ConfigError(f"delimiter must be a single byte: {self.delimiter!r}")
        if self.pool_capacity is not None and self.pool_capacity < 1:
            raise ConfigError(f"pool capacity must be positive or unbounded: {self.pool_capacity}")
        if self.on_malformed not in (SKIP, FAIL):
            raise ConfigError(f"unknown malformed-line policy: {self.on_malformed!r}")


def scan_lines(stream: BinaryIO) -> Iterator[bytes]:
    """Yield lines without their terminator (\\n or \\r\\n), incrementally."""
    for line in stream:
        if line.endswith(b"\n"):
            line = line[:-2] if line.endswith(b"\r\n") else line[:-1]
        yield line


def route(record, config: PartitionConfig) -> str | MalformedReason:
    """Target filename for one parsed record; depends only on key columns."""
    key = extract_key(record, config.key_spec)
    if isinstance(key, MalformedReason):
        return key
    return target_filename(sanitize_stem(key.text), config.suffix)


def partition(
    config: PartitionConfig,
    pool_factory: Callable[..., SinkPool] = SinkPool,
) -> RunReport:
    """Partition the input file by composite key and return the run report.

    Every well-formed record is appended to exactly one output file;
    malformed lines are counted and skipped (or abort the run under the
    fail policy). ``pool_factory`` exists so callers can instrument the
    sink pool; it receives (output_dir, capacity=..., run_policy=...).
    """
    started = time.perf_counter()
    input_path = Path(config.input_path)
    try:
        stream = open(input_path, "rb")
    except OSError as exc:
        raise IoFailure(
            "open_input", str(input_path), f"Could not open file for reading. ({input_path}: {exc})"
        ) from exc

    output_dir = Path(config.output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    input_resolved = input_path.resolve()

    pool = pool_factory(output_dir, capacity=config.pool_capacity, run_policy=config.run_policy)
    # key text -> [target filename, record count]; the only per-key state kept
    table: dict[bytes, list] = {}
    records_read = 0
    records_routed = 0
    malformed_count = 0

    with stream:
        for line_number, raw in enumerate(scan_lines(stream), start=1):
            records_read += 1
            record = parse_record(raw, config.delimiter, config.parse_mode, line_number)
            if isinstance(record, MalformedReason):
                malformed_count += 1
                if config.on_malformed == FAIL:
                    pool.close_all()
                    raise MalformedInput(record)
                continue
            key = extract_key(record, config.key_spec)
            if isinstance(key, MalformedReason):
                malformed_count += 1
                if config.on_malformed == FAIL:
                    pool.close_all()
                    raise MalformedInput(key)
                continue
            entry = table.get(key.text)
            if entry is None:
                filename = target_filename(sanitize_stem(key.text), config.suffix)
                if (output_dir / filename).resolve() == input_resolved:
                    pool.close_all()
                    raise ConfigError(
                        f"input file would be overwritten by routing target {filename!r}"
                    )
                entry = table[key.text] = [filename, 0]
            pool.write_line(entry[0], render_record(record, config.render_mode))
            entry[1] += 1
            records_routed += 1

    byte_counts = pool.close_all()
    files = tuple(
        sorted(
            (FileStat(name, count, byte_counts[name]) for name, count in table.values()),
            key=lambda f: f.filename,
        )
    )
    report = RunReport(
        input_path=str(config.input_path),
        records_read=records_read,
        records_routed=records_routed,
        malformed_count=malformed_count,
        per_key={key.decode("latin-1"): count for key, (_, count) in table.items()},
        files=files,
        duration_ms=int((time.perf_counter() - started) * 1000),
    )
    report.validate()
    return report
