"""Report, manifest and CSV writers.

Reports are JSON with complex numbers as [re, im]; the hash of a report ignores
`timings` so identical inputs give identical hashes.
"""

import csv
import hashlib
import json
import logging
import os
from typing import IO, Iterable, List

logger = logging.getLogger(__name__)

VOLATILE_KEYS = ("timings",)
SPECTRUM_COLUMNS = ["index", "re", "im", "residual", "tag"]


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False)


def _strip_volatile(data):
    if isinstance(data, dict):
        return {k: _strip_volatile(v) for k, v in data.items() if k not in VOLATILE_KEYS}
    if isinstance(data, list):
        return [_strip_volatile(v) for v in data]
    return data


def content_hash(data) -> str:
    """sha256 of the canonical JSON of `data` without timing fields."""
    return hashlib.sha256(canonical_json(_strip_volatile(data)).encode("utf-8")).hexdigest()


def report_filename(index: int, label: str) -> str:
    safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in label)
    return f"{index:03d}_{safe}.json"


def write_json(path: str, data) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True, ensure_ascii=False, allow_nan=False)
        f.write("\n")
    logger.debug(f"wrote {path}")
    return path


def read_json(path: str):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def write_spectrum_csv(rows: Iterable[dict], stream: IO[str]) -> int:
    """Eigenvalue table (index, re, im, residual, tag); returns the row count."""
    writer = csv.DictWriter(stream, fieldnames=SPECTRUM_COLUMNS, lineterminator="\n")
    writer.writeheader()
    count = 0
    for index, row in enumerate(rows):
        writer.writerow({"index": index, **{k: row.get(k) for k in SPECTRUM_COLUMNS[1:]}})
        count += 1
    return count


def write_table_csv(rows: List[dict], stream: IO[str]) -> int:
    """Flat CSV of homogeneous dict rows, columns in first-row order."""
    if not rows:
        return 0
    writer = csv.DictWriter(stream, fieldnames=list(rows[0].keys()), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    writer.writerows(rows)
    return len(rows)
