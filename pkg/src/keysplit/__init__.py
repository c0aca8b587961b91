"""keysplit: stream a delimited flat text file into per-composite-key files."""

from .engine import PartitionConfig, partition, route, scan_lines
from .errors import ConfigError, IoFailure, MalformedInput
from .keying import CompositeKey, KeySpec, extract_key, sanitize_stem, target_filename
from .records import (
    MalformedReason,
    ParseMode,
    ParsedRecord,
    RenderMode,
    parse_record,
    render_record,
)
from .report import FileStat, RunReport, read_report, render_status, write_report
from .sinks import SinkPool

__version__ = "0.1.0"

__all__ = [
    "CompositeKey",
    "ConfigError",
    "FileStat",
    "IoFailure",
    "KeySpec",
    "MalformedInput",
    "MalformedReason",
    "ParseMode",
    "ParsedRecord",
    "PartitionConfig",
    "RenderMode",
    "RunReport",
    "SinkPool",
    "extract_key",
    "parse_record",
    "partition",
    "read_report",
    "render_record",
    "render_status",
    "route",
    "sanitize_stem",
    "scan_lines",
    "target_filename",
    "write_report",
]
