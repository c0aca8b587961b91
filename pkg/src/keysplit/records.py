"""Parse delimited lines into field lists and render them back out.

Contracts:
- Lines are handled as bytes end to end; no decoding, no transcoding.
- The caller strips line terminators before parsing; ``raw`` never
  contains \\n or \\r.
- Legacy mode reproduces the classic split behaviour: the maximal
  trailing run of empty fields is dropped. Keep-all mode keeps every
  field, so count(fields) == count(delimiter) + 1.
- Quoted fields are not a thing here: a delimiter byte always splits.
"""

import enum
from dataclasses import dataclass


class ParseMode(enum.Enum):
    LEGACY = "legacy"
    KEEP_ALL = "keep_all"


class RenderMode(enum.Enum):
    #: one leading space, fields joined by single spaces, one newline
    SPACED = "spaced"
    #: the raw input line verbatim, one newline
    PASSTHROUGH = "passthrough"


@dataclass(frozen=True, slots=True)
class ParsedRecord:
    """One input line split into fields, plus where it came from."""

    fields: tuple[bytes, ...]
    line_number: int
    raw: bytes


@dataclass(frozen=True, slots=True)
class MalformedReason:
    """Why a line could not be routed.

    ``kind`` is "empty_line" or "missing_key_column"; ``column`` carries
    the offending key column index for the latter.
    """

    kind: str
    line_number: int
    detail: str = ""
    column: int | None = None


EMPTY_LINE = "empty_line"
MISSING_KEY_COLUMN = "missing_key_column"


def parse_record(
    line: bytes,
    delimiter: bytes,
    mode: ParseMode,
    line_number: int,
) -> ParsedRecord | MalformedReason:
    """Split ``line`` (terminator already stripped) on every delimiter byte.

    Returns a MalformedReason of kind "empty_line" for the empty line;
    splitting itself cannot fail. In legacy mode an all-empty split
    collapses to the single empty field rather than to no fields.
    """
    if len(delimiter) != 1:
        raise ValueError(f"delimiter must be a single byte, got {delimiter!r}")
    if not line:
        return MalformedReason(EMPTY_LINE, line_number, "line is empty")
    fields = line.split(delimiter)
    if mode is ParseMode.LEGACY:
        while fields and fields[-1] == b"":
            fields.pop()
        if not fields:
            fields = [b""]
    return ParsedRecord(tuple(fields), line_number, line)


def render_record(record: ParsedRecord, mode: RenderMode) -> bytes:
    """Render one output line, including exactly one trailing newline."""
    if mode is RenderMode.PASSTHROUGH:
        return record.raw + b"\n"
    return b" " + b" ".join(record.fields) + b"\n"
