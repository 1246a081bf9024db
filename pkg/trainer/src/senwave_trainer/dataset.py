"""SenWave dataset adapter.

SenWave is distributed under a research agreement and cannot be bundled,
so this module only maps a user-supplied copy (CSV or JSONL) onto
training examples. Column headers vary slightly between copies
("Official report" vs "OfficialReport"); names are matched after
dropping case, spaces, and underscores.

The label order below is the wire contract of the export directory the
classifier consumes; training and export both use it verbatim.
"""

from __future__ import annotations

import csv
import json
import random
from dataclasses import dataclass
from pathlib import Path

from .errors import DatasetMissingError, DatasetSchemaError

#: Canonical label order of the export manifest.
CANONICAL_LABELS = (
    "Optimistic",
    "Thankful",
    "Empathetic",
    "Pessimistic",
    "Anxious",
    "Sad",
    "Annoyed",
    "Denial",
    "OfficialReport",
    "Surprise",
    "Joking",
)

#: The common 10-label training target: everything except OfficialReport.
TEN_LABELS = tuple(l for l in CANONICAL_LABELS if l != "OfficialReport")

_TEXT_COLUMN_CANDIDATES = ("tweet", "text", "tweettext", "content")

MISSING_DATASET_HINT = (
    "SenWave is not bundled with this package (research license). "
    "Request the dataset from its maintainers, then pass the path of the "
    "labeled English file, e.g. labeledEn.csv with a Tweet column and one "
    "0/1 column per label: " + ", ".join(CANONICAL_LABELS)
)


@dataclass(frozen=True)
class SenWaveExample:
    text: str
    labels: tuple[int, ...]


def _squash(name: str) -> str:
    return name.strip().lower().replace(" ", "").replace("_", "")


_CANONICAL_BY_SQUASH = {_squash(name): name for name in CANONICAL_LABELS}


def resolve_label_columns(
    header: list[str], wanted: tuple[str, ...]
) -> dict[str, str]:
    """Map each wanted canonical label to the actual column carrying it."""
    by_squash = {}
    for column in header:
        canonical = _CANONICAL_BY_SQUASH.get(_squash(column))
        if canonical:
            by_squash[canonical] = column
    missing = [name for name in wanted if name not in by_squash]
    if missing:
        raise DatasetSchemaError(
            f"dataset is missing label columns {missing}; found {sorted(by_squash)}"
        )
    return {name: by_squash[name] for name in wanted}


def _find_text_column(header: list[str]) -> str:
    for column in header:
        if _squash(column) in _TEXT_COLUMN_CANDIDATES:
            return column
    raise DatasetSchemaError(
        f"no text column among {header}; expected one of {_TEXT_COLUMN_CANDIDATES}"
    )


def _binary(value, column: str, row_no: int) -> int:
    text = str(value).strip()
    if text in ("0", "1"):
        return int(text)
    raise DatasetSchemaError(
        f"row {row_no}: column {column!r} holds {value!r}, expected 0 or 1"
    )


def load_senwave(
    path: str | Path,
    labels: tuple[str, ...] = TEN_LABELS,
    text_column: str | None = None,
) -> list[SenWaveExample]:
    """Load SenWave rows as (text, binary label vector) examples.

    `labels` picks and orders the target columns; the default is the
    10-label set without OfficialReport. Rows with empty text are
    skipped.
    """
    path = Path(path)
    if not path.is_file():
        raise DatasetMissingError(f"{path} does not exist. {MISSING_DATASET_HINT}")
    unknown = [name for name in labels if name not in CANONICAL_LABELS]
    if unknown:
        raise DatasetSchemaError(f"unknown labels requested: {unknown}")

    if path.suffix.lower() in (".jsonl", ".ndjson", ".json"):
        rows = _read_jsonl(path)
    else:
        rows = _read_csv(path)
    try:
        header_row = next(rows)
    except StopIteration:
        raise DatasetSchemaError(f"{path} is empty") from None
    header = list(header_row)
    column_of = resolve_label_columns(header, labels)
    text_col = text_column or _find_text_column(header)
    if text_col not in header:
        raise DatasetSchemaError(f"text column {text_col!r} not in {header}")

    examples = []
    for row_no, row in enumerate(rows, start=2):
        text = str(row.get(text_col, "")).strip()
        if not text:
            continue
        vector = tuple(
            _binary(row.get(column_of[name]), column_of[name], row_no)
            for name in labels
        )
        examples.append(SenWaveExample(text=text, labels=vector))
    if not examples:
        raise DatasetSchemaError(f"{path} holds no usable rows")
    return examples


def _read_csv(path: Path):
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            yield []
            return
        yield list(reader.fieldnames)
        yield from reader


def _read_jsonl(path: Path):
    with open(path, encoding="utf-8") as fh:
        first = None
        rows = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            row = json.loads(line)
            if not isinstance(row, dict):
                raise DatasetSchemaError(f"{path}: lines must be JSON objects")
            if first is None:
                first = list(row)
            rows.append(row)
    if first is None:
        yield []
        return
    yield first
    yield from rows


def train_val_split(
    examples: list[SenWaveExample], val_frac: float, seed: int = 0
) -> tuple[list[SenWaveExample], list[SenWaveExample]]:
    """Deterministic shuffled split; val_frac of the data goes to validation."""
    if not 0.0 <= val_frac < 1.0:
        raise DatasetSchemaError(f"val_frac must be in [0, 1), got {val_frac}")
    order = list(examples)
    random.Random(seed).shuffle(order)
    cut = int(round(len(order) * val_frac))
    return order[cut:], order[:cut]
