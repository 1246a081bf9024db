"""Loading, validation, deduplication, and filtering of tweet corpora.

Input files are already-hydrated records (JSONL or CSV); malformed rows
are counted and reported rather than silently dropped, and a corpus is
immutable once loaded.
"""

from __future__ import annotations

import csv
import json
import logging
import re
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .errors import EmptyCorpusError, IngestError, InvalidRangeError, SchemaError

logger = logging.getLogger(__name__)

_COUNTRY_RE = re.compile(r"^[A-Za-z]{2}$")
_MONTH_RE = re.compile(r"^(\d{4})-(\d{2})$")

TWEET_FIELDS = ("id", "created_at", "country", "text")
CASE_FIELDS = ("country", "month", "new_cases")


@dataclass(frozen=True)
class TweetRecord:
    """One hydrated tweet."""

    id: str
    timestamp: datetime  # always timezone-aware UTC
    country: str | None  # ISO 3166-1 alpha-2, upper-case
    text: str


@dataclass(frozen=True)
class CaseSeries:
    """Monthly new-case counts for one country, months ascending."""

    country: str
    points: tuple[tuple[str, int], ...]  # (YYYY-MM, count)


@dataclass
class LoadResult:
    """Outcome of one corpus load.

    Conservation: valid_rows == len(records) + duplicate_rows.
    """

    records: list[TweetRecord]
    total_rows: int = 0
    valid_rows: int = 0
    rejected_rows: int = 0
    duplicate_rows: int = 0
    reject_reasons: list[str] = field(default_factory=list)


@dataclass
class CaseLoadResult:
    series: list[CaseSeries]
    total_rows: int = 0
    rejected_rows: int = 0
    reject_reasons: list[str] = field(default_factory=list)


def month_key(ts: datetime) -> str:
    """UTC calendar month of a timestamp, as YYYY-MM."""
    ts = ts.astimezone(timezone.utc)
    return f"{ts.year:04d}-{ts.month:02d}"


def parse_timestamp(value: str) -> datetime:
    """Parse an ISO-8601 instant; naive values are taken as UTC."""
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    ts = datetime.fromisoformat(text)
    if ts.tzinfo is None:
        return ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def _build_record(raw: dict, row_no: int, result: LoadResult) -> TweetRecord | None:
    """Validate one raw row; on failure, record the reason and return None."""

    def reject(reason: str) -> None:
        result.rejected_rows += 1
        result.reject_reasons.append(f"row {row_no}: {reason}")
        logger.warning("rejected row %d: %s", row_no, reason)

    tweet_id = raw.get("id")
    if tweet_id is None or not str(tweet_id).strip():
        reject("missing id")
        return None
    created_at = raw.get("created_at")
    if created_at is None or not str(created_at).strip():
        reject("missing created_at")
        return None
    try:
        ts = parse_timestamp(str(created_at))
    except ValueError:
        reject(f"unparseable created_at {created_at!r}")
        return None
    text = raw.get("text")
    if text is None or not str(text).strip():
        reject("missing or empty text")
        return None
    country = raw.get("country")
    if country is not None and str(country).strip():
        country = str(country).strip()
        if not _COUNTRY_RE.match(country):
            reject(f"country {country!r} is not an ISO alpha-2 code")
            return None
        country = country.upper()
    else:
        country = None
    return TweetRecord(
        id=str(tweet_id).strip(), timestamp=ts, country=country, text=str(text)
    )


def _iter_jsonl(path: Path):
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                yield line_no, None
                continue
            yield line_no, obj if isinstance(obj, dict) else None


def _iter_csv(path: Path):
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        missing = [c for c in TWEET_FIELDS if c not in (reader.fieldnames or [])]
        if missing:
            raise SchemaError(f"{path}: tweet CSV is missing columns {missing}")
        for row_no, row in enumerate(reader, start=2):
            yield row_no, {k: (v if v != "" else None) for k, v in row.items()}


def load_tweets(path: str | Path, format: str | None = None) -> LoadResult:
    """Load a JSONL or CSV tweet file into an ordered, deduplicated corpus.

    `format` is "jsonl" or "csv"; when omitted it is taken from the file
    suffix. Later occurrences of a duplicate id are discarded and counted.
    Raises IngestError for unreadable files and EmptyCorpusError when no
    valid rows remain.
    """
    path = Path(path)
    if format is None:
        suffix = path.suffix.lower()
        if suffix == ".csv":
            format = "csv"
        elif suffix in (".jsonl", ".ndjson", ".json"):
            format = "jsonl"
        else:
            raise IngestError(
                f"cannot infer corpus format from {path.name!r}; pass format="
            )
    if format not in ("jsonl", "csv"):
        raise IngestError(f"unknown corpus format {format!r}")
    rows = _iter_csv(path) if format == "csv" else _iter_jsonl(path)

    result = LoadResult(records=[])
    seen_ids: set[str] = set()
    try:
        for row_no, raw in rows:
            result.total_rows += 1
            if raw is None:
                result.rejected_rows += 1
                result.reject_reasons.append(f"row {row_no}: not a JSON object")
                logger.warning("rejected row %d: not a JSON object", row_no)
                continue
            record = _build_record(raw, row_no, result)
            if record is None:
                continue
            result.valid_rows += 1
            if record.id in seen_ids:
                result.duplicate_rows += 1
                logger.warning("duplicate id %s at row %d", record.id, row_no)
                continue
            seen_ids.add(record.id)
            result.records.append(record)
    except OSError as exc:
        raise IngestError(f"cannot read corpus file {path}: {exc}") from exc
    if not result.records:
        raise EmptyCorpusError(f"{path}: no valid tweet rows")
    return result


def _parse_month(value: str) -> str | None:
    m = _MONTH_RE.match(value.strip())
    if not m or not 1 <= int(m.group(2)) <= 12:
        return None
    return value.strip()


def filter_corpus(
    records: list[TweetRecord],
    country: str | None = None,
    date_range: tuple[str, str] | None = None,
) -> list[TweetRecord]:
    """Keep records matching all supplied predicates, preserving order.

    `date_range` is a half-open [start, end) pair of UTC months (YYYY-MM);
    records without a country never match a country filter.
    """
    if date_range is not None:
        start, end = date_range
        if _parse_month(start) is None or _parse_month(end) is None:
            raise InvalidRangeError(f"malformed month in range {date_range!r}")
        if start >= end:
            raise InvalidRangeError(f"empty date range: {start!r} >= {end!r}")
    if country is not None:
        country = country.upper()

    kept = []
    for record in records:
        if country is not None and record.country != country:
            continue
        if date_range is not None:
            month = month_key(record.timestamp)
            if not (date_range[0] <= month < date_range[1]):
                continue
        kept.append(record)
    return kept


def load_case_counts(path: str | Path) -> CaseLoadResult:
    """Load a `country,month,new_cases` CSV into per-country series.

    Rows with negative counts, malformed months, or duplicate
    (country, month) pairs are rejected and counted.
    """
    path = Path(path)
    result = CaseLoadResult(series=[])
    per_country: dict[str, dict[str, int]] = {}

    def reject(row_no: int, reason: str) -> None:
        result.rejected_rows += 1
        result.reject_reasons.append(f"row {row_no}: {reason}")
        logger.warning("rejected case row %d: %s", row_no, reason)

    try:
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            missing = [c for c in CASE_FIELDS if c not in (reader.fieldnames or [])]
            if missing:
                raise SchemaError(f"{path}: case CSV is missing columns {missing}")
            for row_no, row in enumerate(reader, start=2):
                result.total_rows += 1
                country = (row.get("country") or "").strip()
                if not _COUNTRY_RE.match(country):
                    reject(row_no, f"bad country {row.get('country')!r}")
                    continue
                country = country.upper()
                month = _parse_month(row.get("month") or "")
                if month is None:
                    reject(row_no, f"unparseable month {row.get('month')!r}")
                    continue
                try:
                    count = int(row.get("new_cases") or "")
                except ValueError:
                    reject(row_no, f"non-integer new_cases {row.get('new_cases')!r}")
                    continue
                if count < 0:
                    reject(row_no, f"negative new_cases {count}")
                    continue
                months = per_country.setdefault(country, {})
                if month in months:
                    reject(row_no, f"duplicate month {month} for {country}")
                    continue
                months[month] = count
    except OSError as exc:
        raise IngestError(f"cannot read case file {path}: {exc}") from exc

    for country in sorted(per_country):
        points = tuple(sorted(per_country[country].items()))
        result.series.append(CaseSeries(country=country, points=points))
    return result
