"""End-to-end run: load, normalize, classify, score, aggregate, write.

The pipeline is split into stages that map one-to-one onto process exit
codes, so a failed run tells the caller which stage broke:

    2  configuration (bad file, bad flag, bad value)
    3  ingest (unreadable corpus, no valid rows, bad filter bounds)
    4  classification (backend missing, prediction missing, bad vector)
    5  aggregation (nothing left to aggregate)

All outputs are deterministic: fixed column orders, sorted JSON keys,
LF line endings, shortest-round-trip float text, and no timestamps.
Running twice on the same inputs produces byte-identical files. The run
manifest records a sha256 digest of every input and output so a reader
can verify exactly that.
"""

from __future__ import annotations

import csv
import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import aggregate as agg
from .ngrams import (
    NgramCount,
    POLARITY_GROUPS,
    default_stopwords,
    load_stopwords,
    top_k,
    top_k_by_group,
)
from .classify import (
    ClassifierBackend,
    ExportedModelBackend,
    PrecomputedBackend,
    classify,
    default_rule_backend,
    threshold,
)
from .config import PipelineConfig, config_as_dict
from .corpus import (
    CaseSeries,
    LoadResult,
    TweetRecord,
    filter_corpus,
    load_case_counts,
    load_tweets,
    month_key,
)
from .errors import (
    BackendUnavailableError,
    EmptyCorpusError,
    IngestError,
    InvalidParameterError,
    InvalidRangeError,
    SchemaError,
    VaxsentError,
)
from .labels import format_label_set
from .normalize import (
    SubstitutionTable,
    default_substitution_table,
    load_substitution_table,
    normalize,
)
from .polarity import (
    ScoredTweet,
    WeightTable,
    default_polarity_lexicon,
    default_weight_table,
    display_score,
    load_polarity_lexicon,
    load_weight_table,
    score_tweet,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INGEST = 3
EXIT_CLASSIFY = 4
EXIT_AGGREGATE = 5

#: ngrams.csv scopes, in output order.
NGRAM_SCOPES = ("overall",) + POLARITY_GROUPS

SCORED_COLUMNS = (
    "id",
    "country",
    "month",
    "text",
    "labels",
    "vaccine_score",
    "display_score",
    "stance",
    "naive_score",
    "polarity_group",
)

MONTHLY_COLUMNS = (
    "country",
    "month",
    "tweet_count",
    "mean_vaccine_score",
    "mean_naive_score",
    "new_cases",
)


class StageError(VaxsentError):
    """A pipeline stage failed; carries the exit code for that stage."""

    def __init__(self, stage: str, exit_code: int, message: str):
        super().__init__(message)
        self.stage = stage
        self.exit_code = exit_code


@dataclass(frozen=True)
class PipelineResult:
    config: PipelineConfig
    load: LoadResult
    records: tuple[TweetRecord, ...]
    scored: tuple[ScoredTweet, ...]
    cases: tuple[CaseSeries, ...]
    aggregates: tuple[agg.MonthlyAggregate, ...]
    ngram_tables: dict[str, tuple[NgramCount, ...]]
    summary: dict


def build_backend(config: PipelineConfig) -> ClassifierBackend:
    if config.backend == "rule-lexicon":
        return default_rule_backend()
    if config.backend == "precomputed":
        try:
            return PrecomputedBackend.from_csv(config.predictions)
        except OSError as exc:
            raise StageError(
                "classify", EXIT_CLASSIFY, f"cannot read predictions: {exc}"
            ) from exc
    return ExportedModelBackend(config.model_dir)


def load_tables(
    config: PipelineConfig,
) -> tuple[SubstitutionTable, WeightTable, dict[str, float], frozenset[str]]:
    """Resolve the four lookup tables, falling back to the bundled ones.

    A table file that is missing or malformed is a configuration
    problem, not a data problem, so failures here exit with code 2.
    """
    try:
        substitutions = (
            load_substitution_table(config.substitutions)
            if config.substitutions
            else default_substitution_table()
        )
        weights = (
            load_weight_table(config.weights)
            if config.weights
            else default_weight_table()
        )
        lexicon = (
            load_polarity_lexicon(config.lexicon)
            if config.lexicon
            else default_polarity_lexicon()
        )
        stopwords = (
            load_stopwords(config.stopwords)
            if config.stopwords
            else default_stopwords()
        )
    except (SchemaError, InvalidParameterError, OSError) as exc:
        raise StageError("config", EXIT_CONFIG, str(exc)) from exc
    return substitutions, weights, lexicon, stopwords


def load_stage(config: PipelineConfig) -> tuple[LoadResult, tuple[TweetRecord, ...]]:
    if not config.corpus:
        raise StageError("ingest", EXIT_INGEST, "no corpus file configured")
    try:
        result = load_tweets(config.corpus, format=config.corpus_format)
        records = result.records
        if config.countries:
            wanted = set(config.countries)
            records = tuple(r for r in records if r.country in wanted)
        if config.date_start or config.date_end:
            # Either bound may be omitted for an open-ended range.
            start = config.date_start or "0000-01"
            end = config.date_end or "9999-12"
            records = filter_corpus(records, date_range=(start, end))
    except (IngestError, InvalidRangeError) as exc:
        raise StageError("ingest", EXIT_INGEST, str(exc)) from exc
    return result, tuple(records)


def classify_stage(
    records: Sequence[TweetRecord],
    backend: ClassifierBackend,
    config: PipelineConfig,
    substitutions: SubstitutionTable,
    weights: WeightTable,
    lexicon: dict[str, float],
) -> tuple[ScoredTweet, ...]:
    scored = []
    try:
        for record in records:
            normalized = normalize(record.text, substitutions)
            vector = classify(normalized.text, backend, tweet_id=record.id)
            labels = threshold(vector, tau=config.tau)
            scored.append(
                score_tweet(record, normalized, labels, table=weights, lexicon=lexicon)
            )
    except (BackendUnavailableError, SchemaError, InvalidParameterError) as exc:
        raise StageError("classify", EXIT_CLASSIFY, str(exc)) from exc
    return tuple(scored)


def aggregate_stage(
    scored: Sequence[ScoredTweet],
    cases: Sequence[CaseSeries],
    config: PipelineConfig,
    stopwords: frozenset[str],
) -> tuple[tuple[agg.MonthlyAggregate, ...], dict[str, tuple[NgramCount, ...]], dict]:
    try:
        if not scored:
            raise EmptyCorpusError("no tweets left after filtering")
        aggregates = tuple(agg.aggregate_monthly(scored, cases))
        tables: dict[str, tuple[NgramCount, ...]] = {
            "overall": tuple(top_k(scored, config.ngram_n, config.ngram_k, stopwords))
        }
        by_group = top_k_by_group(scored, config.ngram_n, config.ngram_k, stopwords)
        for group in POLARITY_GROUPS:
            tables[group] = tuple(by_group[group])
        summary = build_summary(scored)
    except (EmptyCorpusError, InvalidParameterError) as exc:
        raise StageError("aggregate", EXIT_AGGREGATE, str(exc)) from exc
    return aggregates, tables, summary


def build_summary(scored: Sequence[ScoredTweet]) -> dict:
    """Corpus-level roll-up written to summary.json."""
    countries = sorted({t.record.country or agg.UNKNOWN_COUNTRY for t in scored})
    stats = {}
    for country in countries:
        s = agg.score_distribution_stats(scored, country)
        stats[country] = {
            "min": s.min,
            "q1": s.q1,
            "median": s.median,
            "q3": s.q3,
            "max": s.max,
            "mean": s.mean,
        }
    return {
        "tweet_count": len(scored),
        "label_count_distribution": agg.label_count_distribution(list(scored)),
        "sentiment_totals": {
            label.canonical_name: count
            for label, count in agg.sentiment_totals(scored).items()
        },
        "sentiment_share_by_country": {
            country: {label.canonical_name: share for label, share in shares.items()}
            for country, shares in agg.sentiment_share_by_country(scored).items()
        },
        "vaccine_score_stats": stats,
    }


def run_pipeline(config: PipelineConfig) -> PipelineResult:
    substitutions, weights, lexicon, stopwords = load_tables(config)
    backend = build_backend(config)
    load_result, records = load_stage(config)
    cases: tuple[CaseSeries, ...] = ()
    if config.cases:
        try:
            cases = tuple(load_case_counts(config.cases).series)
        except IngestError as exc:
            raise StageError("ingest", EXIT_INGEST, str(exc)) from exc
    scored = classify_stage(records, backend, config, substitutions, weights, lexicon)
    aggregates, tables, summary = aggregate_stage(scored, cases, config, stopwords)
    return PipelineResult(
        config=config,
        load=load_result,
        records=records,
        scored=scored,
        cases=cases,
        aggregates=aggregates,
        ngram_tables=tables,
        summary=summary,
    )


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _write_csv(path: Path, header: Sequence[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _float_text(value: float) -> str:
    return repr(float(value))


def write_scored_csv(path: Path, scored: Sequence[ScoredTweet]) -> None:
    rows = []
    for t in scored:
        rows.append(
            [
                t.record.id,
                t.record.country or "",
                month_key(t.record.timestamp),
                t.normalized.text,
                format_label_set(t.labels),
                _float_text(t.vaccine_score),
                f"{display_score(t.vaccine_score):.2f}",
                t.stance,
                _float_text(t.naive_score),
                t.polarity_group,
            ]
        )
    _write_csv(path, SCORED_COLUMNS, rows)


def write_monthly_csv(path: Path, aggregates: Sequence[agg.MonthlyAggregate]) -> None:
    from .labels import ALL_LABELS

    header = list(MONTHLY_COLUMNS)
    header.extend(f"count_{label.canonical_name}" for label in ALL_LABELS)
    header.extend(f"labels_{bucket}" for bucket in ("0", "1", "2", "3plus"))
    rows = []
    for a in aggregates:
        row = [
            a.country,
            a.month,
            a.tweet_count,
            _float_text(a.mean_vaccine_score),
            _float_text(a.mean_naive_score),
            "" if a.new_cases is None else a.new_cases,
        ]
        row.extend(a.per_label_counts[label] for label in ALL_LABELS)
        row.extend(a.label_count_histogram[bucket] for bucket in agg.HISTOGRAM_BUCKETS)
        rows.append(row)
    _write_csv(path, header, rows)


def write_ngrams_csv(path: Path, tables: dict[str, tuple[NgramCount, ...]]) -> None:
    rows = []
    for scope in NGRAM_SCOPES:
        for rank, entry in enumerate(tables.get(scope, ()), start=1):
            rows.append([scope, rank, " ".join(entry.gram), entry.count])
    _write_csv(path, ("scope", "rank", "gram", "count"), rows)


def write_report(result: PipelineResult, output_dir: str | Path) -> list[Path]:
    """Write every output file plus the digest manifest; returns the paths."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)

    written: list[Path] = []
    scored_path = out / "scored.csv"
    write_scored_csv(scored_path, result.scored)
    written.append(scored_path)

    monthly_path = out / "monthly.csv"
    write_monthly_csv(monthly_path, result.aggregates)
    written.append(monthly_path)

    ngrams_path = out / "ngrams.csv"
    write_ngrams_csv(ngrams_path, result.ngram_tables)
    written.append(ngrams_path)

    summary_path = out / "summary.json"
    summary_path.write_text(
        json.dumps(result.summary, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    written.append(summary_path)

    from . import __version__

    inputs = {}
    config = result.config
    for name, given in (
        ("corpus", config.corpus),
        ("cases", config.cases),
        ("substitutions", config.substitutions),
        ("weights", config.weights),
        ("lexicon", config.lexicon),
        ("stopwords", config.stopwords),
        ("predictions", config.predictions),
    ):
        if given:
            inputs[name] = {"path": given, "sha256": _sha256(Path(given))}

    manifest = {
        "tool": "vaxsent",
        "version": __version__,
        "config": config_as_dict(config),
        "inputs": inputs,
        "outputs": {path.name: _sha256(path) for path in written},
        "load": {
            "total_rows": result.load.total_rows,
            "valid_rows": result.load.valid_rows,
            "rejected_rows": result.load.rejected_rows,
            "duplicate_rows": result.load.duplicate_rows,
            "reject_reasons": list(result.load.reject_reasons),
        },
    }
    manifest_path = out / "manifest.json"
    manifest_path.write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    written.append(manifest_path)
    logger.info("wrote %d files to %s", len(written), out)
    return written
