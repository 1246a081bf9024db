"""Vaccine polarity scoring and the naive lexicon baseline.

The vaccine polarity score of a tweet is the sum of fixed integer
weights over its assigned sentiment labels, divided by a fixed divisor
(11 by default), so a single Annoyed label scores -1/11 and
Annoyed+Denial scores -6/11. Stance is the sign of that score. The
naive score is the mean word polarity over lexicon hits, the baseline
the published analysis grouped tweets by.

Published sample tables print scores with two decimals truncated toward
zero (-6/11 appears as -0.54, not -0.55); display_score reproduces that
convention exactly.
"""

from __future__ import annotations

import csv
import functools
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .corpus import TweetRecord
from .errors import SchemaError
from .labels import SentimentLabel, parse_label
from .normalize import NormalizedText

#: Per-sentiment weights used for the vaccine polarity score.
DEFAULT_WEIGHTS: dict[SentimentLabel, int] = {
    SentimentLabel.OPTIMISTIC: 2,
    SentimentLabel.THANKFUL: 3,
    SentimentLabel.EMPATHETIC: 0,
    SentimentLabel.PESSIMISTIC: -4,
    SentimentLabel.ANXIOUS: -2,
    SentimentLabel.SAD: -3,
    SentimentLabel.ANNOYED: -1,
    SentimentLabel.DENIAL: -5,
    SentimentLabel.OFFICIAL_REPORT: 0,
    SentimentLabel.SURPRISE: 0,
    SentimentLabel.JOKING: 1,
}

DEFAULT_DIVISOR = 11

STANCE_ANTI = "anti"
STANCE_NEUTRAL = "neutral"
STANCE_PRO = "pro"

GROUP_NEGATIVE = "negative"
GROUP_NEUTRAL = "neutral"
GROUP_POSITIVE = "positive"

#: Naive-score cutoffs for the negative / neutral / positive partition.
GROUP_NEGATIVE_MAX = -0.2  # inclusive
GROUP_POSITIVE_MIN = 0.2  # exclusive


@dataclass(frozen=True)
class WeightTable:
    """Sentiment weights plus the fixed normalization divisor."""

    weights: Mapping[SentimentLabel, float]
    divisor: int = DEFAULT_DIVISOR

    def __post_init__(self):
        if self.divisor <= 0:
            raise SchemaError(f"divisor must be positive, got {self.divisor}")
        missing = [l.canonical_name for l in SentimentLabel if l not in self.weights]
        if missing:
            raise SchemaError(f"weight table is missing labels {missing}")


@functools.lru_cache(maxsize=1)
def default_weight_table() -> WeightTable:
    return WeightTable(weights=dict(DEFAULT_WEIGHTS), divisor=DEFAULT_DIVISOR)


def load_weight_table(path: str | Path) -> WeightTable:
    """Load a `label,weight` CSV; an optional `divisor` row overrides 11."""
    weights: dict[SentimentLabel, float] = {}
    divisor = DEFAULT_DIVISOR
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != ["label", "weight"]:
            raise SchemaError(f"weight table {path}: expected header 'label,weight'")
        for row in reader:
            name = row["label"].strip()
            try:
                value = float(row["weight"])
            except ValueError:
                raise SchemaError(
                    f"weight table {path}: bad weight {row['weight']!r}"
                ) from None
            if name.lower() == "divisor":
                if value <= 0 or value != int(value):
                    raise SchemaError(f"weight table {path}: bad divisor {value}")
                divisor = int(value)
            else:
                weights[parse_label(name)] = value
    return WeightTable(weights=weights, divisor=divisor)


def vaccine_polarity(
    labels: Iterable[SentimentLabel], table: WeightTable | None = None
) -> float:
    """Sum of the labels' weights divided by the divisor; empty set -> 0."""
    if table is None:
        table = default_weight_table()
    return sum(table.weights[label] for label in labels) / table.divisor


def stance(vaccine_score: float) -> str:
    """pro / anti by strict sign, neutral exactly at zero."""
    if vaccine_score > 0:
        return STANCE_PRO
    if vaccine_score < 0:
        return STANCE_ANTI
    return STANCE_NEUTRAL


def naive_polarity(tokens: Iterable[str], lexicon: Mapping[str, float]) -> float:
    """Mean lexicon polarity over the tokens found in the lexicon.

    Tokens outside the lexicon are ignored; no hits means 0. The result
    is clamped to [-1, 1].
    """
    hits = [lexicon[token] for token in tokens if token in lexicon]
    if not hits:
        return 0.0
    return max(-1.0, min(1.0, sum(hits) / len(hits)))


def polarity_group(p: float) -> str:
    """negative for p <= -0.2, positive for p > 0.2, neutral between."""
    if p <= GROUP_NEGATIVE_MAX:
        return GROUP_NEGATIVE
    if p > GROUP_POSITIVE_MIN:
        return GROUP_POSITIVE
    return GROUP_NEUTRAL


def display_score(score: float) -> float:
    """Two-decimal presentation of a polarity score, truncated toward zero.

    This is the convention the published sample tables use; rounding
    half away from zero would print -6/11 as -0.55 instead of the
    published -0.54. The small epsilon guard keeps values that are exact
    hundredths (up to float representation) from being eaten by the
    truncation.
    """
    cents = math.trunc(round(score * 100, 6))
    return cents / 100.0


def load_polarity_lexicon(path: str | Path) -> dict[str, float]:
    """Load a `word,polarity` CSV with polarities in [-1, 1]."""
    lexicon: dict[str, float] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != ["word", "polarity"]:
            raise SchemaError(f"lexicon {path}: expected header 'word,polarity'")
        for row in reader:
            word = row["word"].strip().lower()
            try:
                value = float(row["polarity"])
            except ValueError:
                raise SchemaError(f"lexicon {path}: bad polarity {row!r}") from None
            if not -1.0 <= value <= 1.0:
                raise SchemaError(f"lexicon {path}: polarity outside [-1,1]: {row!r}")
            lexicon[word] = value
    return lexicon


@functools.lru_cache(maxsize=1)
def default_polarity_lexicon() -> dict[str, float]:
    ref = resources.files("vaxsent.data") / "polarity_lexicon.csv"
    with resources.as_file(ref) as path:
        return load_polarity_lexicon(path)


@dataclass(frozen=True)
class ScoredTweet:
    """A tweet joined with its labels and every derived score."""

    record: TweetRecord
    normalized: NormalizedText
    labels: frozenset[SentimentLabel]
    vaccine_score: float
    naive_score: float
    stance: str
    polarity_group: str


def score_tweet(
    record: TweetRecord,
    normalized: NormalizedText,
    labels: frozenset[SentimentLabel],
    table: WeightTable | None = None,
    lexicon: Mapping[str, float] | None = None,
) -> ScoredTweet:
    """Attach vaccine score, naive score, stance, and polarity group."""
    if lexicon is None:
        lexicon = default_polarity_lexicon()
    v_score = vaccine_polarity(labels, table)
    n_score = naive_polarity(normalized.text.split(), lexicon)
    return ScoredTweet(
        record=record,
        normalized=normalized,
        labels=labels,
        vaccine_score=v_score,
        naive_score=n_score,
        stance=stance(v_score),
        polarity_group=polarity_group(n_score),
    )
