"""Composite-key extraction and key-to-filename mapping.

Key comparison is exact byte equality; no case folding, no trimming.
Filenames are derived through an injective percent-encoding, so two
distinct keys can never collide on disk.
"""

from dataclasses import dataclass

from .errors import ConfigError
from .records import MISSING_KEY_COLUMN, MalformedReason, ParsedRecord


@dataclass(frozen=True, slots=True)
class KeySpec:
    """Which columns make up the key and how they are joined."""

    columns: tuple[int, ...] = (0, 2)
    joiner: bytes = b"_"

    def __post_init__(self):
        if isinstance(self.joiner, str):
            object.__setattr__(self, "joiner", self.joiner.encode("utf-8"))
        object.__setattr__(self, "columns", tuple(self.columns))
        if not self.columns:
            raise ConfigError("key columns must be non-empty")
        if any(c < 0 for c in self.columns):
            raise ConfigError(f"key column indices must be non-negative: {self.columns}")


@dataclass(frozen=True, slots=True)
class CompositeKey:
    text: bytes
    components: tuple[bytes, ...]


def extract_key(record: ParsedRecord, spec: KeySpec) -> CompositeKey | MalformedReason:
    """Pick the configured columns out of ``record`` and join them.

    Duplicate column indices are allowed and repeat the same value.
    A column index beyond the last field makes the record malformed.
    """
    fields = record.fields
    n = len(fields)
    for col in spec.columns:
        if col >= n:
            return MalformedReason(
                MISSING_KEY_COLUMN,
                record.line_number,
                f"key column {col} missing ({n} fields present)",
                column=col,
            )
    components = tuple(fields[c] for c in spec.columns)
    return CompositeKey(spec.joiner.join(components), components)


_SAFE = frozenset(b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789._-")


def sanitize_stem(key_text: bytes) -> str:
    """Map a key to a filesystem-safe filename stem, injectively.

    Bytes outside [A-Za-z0-9._-] become %XX (uppercase hex); "%" itself is
    always encoded. The results "." and ".." and the empty stem are replaced
    by "%2E", "%2E%2E" and "%00EMPTY" so no stem is ever a reserved name.
    """
    out = []
    for b in key_text:
        if b in _SAFE:
            out.append(chr(b))
        else:
            out.append(f"%{b:02X}")
    stem = "".join(out)
    if stem == "":
        return "%00EMPTY"
    if stem == ".":
        return "%2E"
    if stem == "..":
        return "%2E%2E"
    return stem


def target_filename(stem: str, suffix: str = ".txt") -> str:
    """Append the output suffix to an already-sanitized stem."""
    return stem + suffix
