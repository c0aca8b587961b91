"""Run statistics: the status display and the machine-readable report.

The JSON document is byte-deterministic for equal report content: fixed
key order, sorted per_key and files sections, and no timing-dependent
field other than duration_ms.
"""

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import IoFailure

STATUS_SENTENCE = "SRr has performed the text mining operations on input file"


@dataclass(frozen=True, slots=True)
class FileStat:
    filename: str
    records: int
    bytes: int


@dataclass(frozen=True, slots=True)
class RunReport:
    input_path: str
    records_read: int
    records_routed: int
    malformed_count: int
    per_key: dict[str, int]
    files: tuple[FileStat, ...]
    duration_ms: int

    def validate(self) -> None:
        """Check the count algebra and the sort order; raise on violation."""
        if self.records_read != self.records_routed + self.malformed_count:
            raise ValueError(
                f"count algebra violated: {self.records_read} read != "
                f"{self.records_routed} routed + {self.malformed_count} malformed"
            )
        if sum(self.per_key.values()) != self.records_routed:
            raise ValueError("per-key counts do not sum to records_routed")
        names = [f.filename for f in self.files]
        if names != sorted(names):
            raise ValueError("files are not sorted by filename")


def render_status(report: RunReport) -> str:
    """Human-readable end-of-run summary: totals, then a per-key table."""
    lines = [f" {STATUS_SENTENCE} {report.input_path}", ""]
    totals = [
        ("records read", report.records_read),
        ("records routed", report.records_routed),
        ("malformed", report.malformed_count),
        ("files created", len(report.files)),
        ("duration_ms", report.duration_ms),
    ]
    for label, value in totals:
        lines.append(f" {label:<15} {value}")
    lines.append("")
    key_width = max([len(k) for k in report.per_key], default=3)
    key_width = max(key_width, len("key"))
    lines.append(f" {'key':<{key_width}}  records")
    for key in sorted(report.per_key):
        lines.append(f" {key:<{key_width}}  {report.per_key[key]}")
    return "\n".join(lines) + "\n"


def report_to_dict(report: RunReport) -> dict:
    return {
        "input_path": report.input_path,
        "records_read": report.records_read,
        "records_routed": report.records_routed,
        "malformed_count": report.malformed_count,
        "per_key": {k: report.per_key[k] for k in sorted(report.per_key)},
        "files": [
            {"filename": f.filename, "records": f.records, "bytes": f.bytes}
            for f in sorted(report.files, key=lambda f: f.filename)
        ],
        "duration_ms": report.duration_ms,
    }


def report_from_dict(doc: dict) -> RunReport:
    return RunReport(
        input_path=doc["input_path"],
        records_read=doc["records_read"],
        records_routed=doc["records_routed"],
        malformed_count=doc["malformed_count"],
        per_key=dict(doc["per_key"]),
        files=tuple(FileStat(f["filename"], f["records"], f["bytes"]) for f in doc["files"]),
        duration_ms=doc["duration_ms"],
    )


def render_report_json(report: RunReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def write_report(report: RunReport, path: str | Path) -> None:
    try:
        Path(path).write_text(render_report_json(report), encoding="utf-8")
    except OSError as exc:
        raise IoFailure("write_report", str(path), f"could not write report: {exc}") from exc


def read_report(path: str | Path) -> RunReport:
    return report_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
