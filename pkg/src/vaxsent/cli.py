"""Command-line entry point.

Subcommands:

    validate   load the corpus and report row accounting
    score      normalize + classify + score, write scored.csv
    aggregate  monthly aggregates and corpus summary
    ngrams     top n-gram tables, overall and per polarity group
    report     every output file plus the digest manifest
    inspect    full per-tweet breakdown for one tweet id

Settings come from an optional JSON config file (--config) and flags;
a flag always beats the file. Exit codes: 0 success, 2 bad
configuration, 3 ingest failure, 4 classification failure, 5
aggregation failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import pipeline as pl
from .config import PipelineConfig, resolve_config
from .classify import classify, threshold
from .corpus import load_tweets, month_key
from .errors import ConfigError, IngestError, InvalidRangeError, VaxsentError
from .labels import ALL_LABELS, format_label_set
from .normalize import normalize
from .polarity import display_score, score_tweet

logger = logging.getLogger(__name__)

_OVERRIDE_FLAGS = {
    # dest -> config field
    "corpus": "corpus",
    "format": "corpus_format",
    "cases": "cases",
    "substitutions": "substitutions",
    "weights": "weights",
    "lexicon": "lexicon",
    "stopwords": "stopwords",
    "backend": "backend",
    "predictions": "predictions",
    "model_dir": "model_dir",
    "tau": "tau",
    "countries": "countries",
    "date_start": "date_start",
    "date_end": "date_end",
    "ngram_n": "ngram_n",
    "ngram_k": "ngram_k",
    "output_dir": "output_dir",
    "seed": "seed",
}


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--corpus", help="tweet corpus (.jsonl or .csv)")
    parser.add_argument("--format", choices=("jsonl", "csv"), help="corpus format override")
    parser.add_argument("--cases", help="per-country monthly case counts CSV")
    parser.add_argument("--substitutions", help="substitution table CSV")
    parser.add_argument("--weights", help="sentiment weight table CSV")
    parser.add_argument("--lexicon", help="word polarity lexicon CSV")
    parser.add_argument("--stopwords", help="stopword list, one word per line")
    parser.add_argument(
        "--backend", choices=("rule-lexicon", "precomputed", "exported-model")
    )
    parser.add_argument("--predictions", help="CSV for the precomputed backend")
    parser.add_argument("--model-dir", help="directory for the exported-model backend")
    parser.add_argument("--tau", type=float, help="label threshold, strictly in (0, 1)")
    parser.add_argument("--countries", help="comma-separated ISO country codes to keep")
    parser.add_argument("--date-start", help="first month to keep, YYYY-MM inclusive")
    parser.add_argument("--date-end", help="end month, YYYY-MM exclusive")
    parser.add_argument("--ngram-n", type=int, help="n-gram order")
    parser.add_argument("--ngram-k", type=int, help="n-grams kept per table")
    parser.add_argument("--output-dir", help="directory for output files")
    parser.add_argument("--seed", type=int, help="seed recorded in the manifest")
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="debug-level logging"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vaxsent",
        description="Multi-label sentiment scoring for vaccine tweet corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("validate", "load the corpus and report row accounting"),
        ("score", "write per-tweet labels and polarity scores"),
        ("aggregate", "write monthly aggregates and the corpus summary"),
        ("ngrams", "write top n-gram tables"),
        ("report", "write all outputs plus the digest manifest"),
        ("inspect", "print the full breakdown for one tweet"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        _add_common_flags(cmd)
        if name == "inspect":
            cmd.add_argument("tweet_id", help="id of the tweet to inspect")
    return parser


def _config_from_args(args: argparse.Namespace) -> PipelineConfig:
    overrides = {
        field: getattr(args, dest)
        for dest, field in _OVERRIDE_FLAGS.items()
        if getattr(args, dest, None) is not None
    }
    return resolve_config(args.config, overrides)


def cmd_validate(config: PipelineConfig) -> int:
    if not config.corpus:
        print("no corpus file configured", file=sys.stderr)
        return pl.EXIT_INGEST
    try:
        result = load_tweets(config.corpus, format=config.corpus_format)
    except IngestError as exc:
        print(f"ingest failed: {exc}", file=sys.stderr)
        return pl.EXIT_INGEST
    print(f"total rows:     {result.total_rows}")
    print(f"valid rows:     {result.valid_rows}")
    print(f"rejected rows:  {result.rejected_rows}")
    print(f"duplicate ids:  {result.duplicate_rows}")
    print(f"records kept:   {len(result.records)}")
    for reason in result.reject_reasons:
        print(f"  rejected {reason}")
    return pl.EXIT_OK


def cmd_score(config: PipelineConfig) -> int:
    substitutions, weights, lexicon, _ = pl.load_tables(config)
    backend = pl.build_backend(config)
    _, records = pl.load_stage(config)
    scored = pl.classify_stage(records, backend, config, substitutions, weights, lexicon)
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / "scored.csv"
    pl.write_scored_csv(path, scored)
    print(f"scored {len(scored)} tweets -> {path}")
    return pl.EXIT_OK


def cmd_aggregate(config: PipelineConfig) -> int:
    result = pl.run_pipeline(config)
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    monthly = out / "monthly.csv"
    pl.write_monthly_csv(monthly, result.aggregates)
    summary = out / "summary.json"
    summary.write_text(
        json.dumps(result.summary, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(f"wrote {monthly} ({len(result.aggregates)} country-months) and {summary}")
    return pl.EXIT_OK


def cmd_ngrams(config: PipelineConfig) -> int:
    result = pl.run_pipeline(config)
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / "ngrams.csv"
    pl.write_ngrams_csv(path, result.ngram_tables)
    print(f"wrote {path}")
    return pl.EXIT_OK


def cmd_report(config: PipelineConfig) -> int:
    result = pl.run_pipeline(config)
    written = pl.write_report(result, config.output_dir)
    for path in written:
        print(f"wrote {path}")
    return pl.EXIT_OK


def cmd_inspect(config: PipelineConfig, tweet_id: str) -> int:
    substitutions, weights, lexicon, _ = pl.load_tables(config)
    backend = pl.build_backend(config)
    _, records = pl.load_stage(config)
    record = next((r for r in records if r.id == tweet_id), None)
    if record is None:
        print(f"tweet id {tweet_id!r} not found in corpus", file=sys.stderr)
        return pl.EXIT_INGEST
    normalized = normalize(record.text, substitutions)
    vector = classify(normalized.text, backend, tweet_id=record.id)
    labels = threshold(vector, tau=config.tau)
    scored = score_tweet(record, normalized, labels, table=weights, lexicon=lexicon)
    print(f"id:          {record.id}")
    print(f"country:     {record.country or '(none)'}")
    print(f"month:       {month_key(record.timestamp)}")
    print(f"raw text:    {record.text}")
    print(f"normalized:  {normalized.text}")
    print("probabilities:")
    for label in ALL_LABELS:
        marker = "*" if label in labels else " "
        print(f"  {marker} {label.canonical_name:<15} {vector[label.index]:.3f}")
    print(f"labels:      {format_label_set(labels) or '(none)'}")
    print(f"vaccine score:  {scored.vaccine_score!r} (display {display_score(scored.vaccine_score):.2f})")
    print(f"stance:         {scored.stance}")
    print(f"naive score:    {scored.naive_score!r}")
    print(f"polarity group: {scored.polarity_group}")
    return pl.EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = _config_from_args(args)
        if args.command == "validate":
            return cmd_validate(config)
        if args.command == "score":
            return cmd_score(config)
        if args.command == "aggregate":
            return cmd_aggregate(config)
        if args.command == "ngrams":
            return cmd_ngrams(config)
        if args.command == "report":
            return cmd_report(config)
        return cmd_inspect(config, args.tweet_id)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return pl.EXIT_CONFIG
    except pl.StageError as exc:
        print(f"{exc.stage} error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (IngestError, InvalidRangeError) as exc:
        print(f"ingest error: {exc}", file=sys.stderr)
        return pl.EXIT_INGEST
    except VaxsentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return pl.EXIT_CLASSIFY


if __name__ == "__main__":
    sys.exit(main())
