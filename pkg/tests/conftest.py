from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent

# per-key record counts for the bundled traffic corpus
EXPECTED_COUNTS = {
    "1_IDOT": 3,
    "1_MT": 9,
    "7_TRANSCOM": 5,
    "16_INDOT": 11,
    "16_MT": 8,
    "17_MDSHA": 9,
    "17_MT": 8,
}

EXPECTED_FILES = sorted(f"{key}.txt" for key in EXPECTED_COUNTS)


@pytest.fixture(scope="session")
def corpus_path() -> Path:
    return ROOT / "data" / "traffic_sample.txt"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return ROOT / "golden" / "traffic_sample"


def tree_bytes(directory: Path) -> dict[str, bytes]:
    """Snapshot a flat output directory as {filename: content}."""
    return {p.name: p.read_bytes() for p in directory.iterdir() if p.is_file()}
