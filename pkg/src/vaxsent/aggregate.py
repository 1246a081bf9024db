"""Per-country, per-month statistics over a scored corpus.

Everything here is a pure fold over immutable scored tweets: monthly
aggregates, the label-count histogram, per-sentiment totals and shares,
and score distribution summaries. Months with zero tweets are omitted
rather than emitted as zeros, so "no data collected" stays
distinguishable from "zero activity".
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import CaseSeries, month_key
from .errors import EmptyCorpusError
from .labels import ALL_LABELS, SentimentLabel
from .polarity import ScoredTweet

#: Country bucket for records that carry no country tag.
UNKNOWN_COUNTRY = "ALL"

HISTOGRAM_BUCKETS = ("0", "1", "2", "3+")


@dataclass(frozen=True)
class MonthlyAggregate:
    country: str
    month: str
    tweet_count: int
    mean_vaccine_score: float
    mean_naive_score: float
    per_label_counts: dict[SentimentLabel, int]
    label_count_histogram: dict[str, int]
    new_cases: int | None = None


@dataclass(frozen=True)
class ScoreStats:
    min: float
    q1: float
    median: float
    q3: float
    max: float
    mean: float


def _country_of(tweet: ScoredTweet) -> str:
    return tweet.record.country or UNKNOWN_COUNTRY


def _histogram_bucket(label_count: int) -> str:
    return str(label_count) if label_count < 3 else "3+"


def aggregate_monthly(
    corpus: Iterable[ScoredTweet],
    cases: Sequence[CaseSeries] | None = None,
) -> list[MonthlyAggregate]:
    """One aggregate per (country, UTC month) that has at least one tweet.

    Case counts are joined where a series covers the same country and
    month. Output is sorted by (country, month) and independent of the
    corpus iteration order.
    """
    buckets: dict[tuple[str, str], list[ScoredTweet]] = defaultdict(list)
    for tweet in corpus:
        key = (_country_of(tweet), month_key(tweet.record.timestamp))
        buckets[key].append(tweet)

    case_lookup: dict[tuple[str, str], int] = {}
    for series in cases or []:
        for month, count in series.points:
            case_lookup[(series.country, month)] = count

    aggregates = []
    for (country, month), tweets in sorted(buckets.items()):
        histogram = {bucket: 0 for bucket in HISTOGRAM_BUCKETS}
        label_counts = {label: 0 for label in ALL_LABELS}
        for tweet in tweets:
            histogram[_histogram_bucket(len(tweet.labels))] += 1
            for label in tweet.labels:
                label_counts[label] += 1
        n = len(tweets)
        aggregates.append(
            MonthlyAggregate(
                country=country,
                month=month,
                tweet_count=n,
                mean_vaccine_score=sum(t.vaccine_score for t in tweets) / n,
                mean_naive_score=sum(t.naive_score for t in tweets) / n,
                per_label_counts=label_counts,
                label_count_histogram=histogram,
                new_cases=case_lookup.get((country, month)),
            )
        )
    return aggregates


def label_count_distribution(corpus: Sequence[ScoredTweet]) -> dict[str, float]:
    """Fraction of tweets carrying 0, 1, 2, and 3+ sentiment labels."""
    if not corpus:
        raise EmptyCorpusError("label-count distribution needs a non-empty corpus")
    counts = Counter(_histogram_bucket(len(tweet.labels)) for tweet in corpus)
    total = len(corpus)
    return {bucket: counts.get(bucket, 0) / total for bucket in HISTOGRAM_BUCKETS}


def sentiment_totals(corpus: Iterable[ScoredTweet]) -> dict[SentimentLabel, int]:
    """Tweets per sentiment; a multi-label tweet counts in every label it carries."""
    totals = {label: 0 for label in ALL_LABELS}
    for tweet in corpus:
        for label in tweet.labels:
            totals[label] += 1
    return totals


def _quantile(sorted_values: Sequence[float], q: float) -> float:
    # linear interpolation between closest ranks on an (n-1) basis
    pos = (len(sorted_values) - 1) * q
    lower = math.floor(pos)
    upper = math.ceil(pos)
    if lower == upper:
        return sorted_values[lower]
    frac = pos - lower
    return sorted_values[lower] * (1 - frac) + sorted_values[upper] * frac


def score_distribution_stats(
    corpus: Iterable[ScoredTweet],
    country: str,
    score: str = "vaccine",
) -> ScoreStats:
    """Five-number summary plus mean of one country's polarity scores.

    `score` selects the vaccine score or the naive baseline. Quartiles
    use linear interpolation between closest ranks, the convention fixed
    artifact-wide.
    """
    if score not in ("vaccine", "naive"):
        raise ValueError(f"score must be 'vaccine' or 'naive', got {score!r}")
    values = [
        t.vaccine_score if score == "vaccine" else t.naive_score
        for t in corpus
        if _country_of(t) == country
    ]
    if not values:
        raise EmptyCorpusError(f"no tweets for country {country!r}")
    values.sort()
    return ScoreStats(
        min=values[0],
        q1=_quantile(values, 0.25),
        median=_quantile(values, 0.5),
        q3=_quantile(values, 0.75),
        max=values[-1],
        mean=sum(values) / len(values),
    )


def sentiment_share_by_country(
    corpus: Iterable[ScoredTweet],
) -> dict[str, dict[SentimentLabel, float]]:
    """Per country: fraction of its tweets carrying each sentiment."""
    totals: dict[str, int] = defaultdict(int)
    label_counts: dict[str, dict[SentimentLabel, int]] = defaultdict(
        lambda: {label: 0 for label in ALL_LABELS}
    )
    for tweet in corpus:
        country = _country_of(tweet)
        totals[country] += 1
        for label in tweet.labels:
            label_counts[country][label] += 1
    return {
        country: {
            label: label_counts[country][label] / totals[country]
            for label in ALL_LABELS
        }
        for country in sorted(totals)
    }


def monthly_sentiment_trend(
    corpus: Iterable[ScoredTweet], country: str
) -> dict[str, dict[SentimentLabel, int]]:
    """Per-month sentiment totals for one country, months ascending."""
    trend: dict[str, dict[SentimentLabel, int]] = {}
    for tweet in corpus:
        if _country_of(tweet) != country:
            continue
        month = month_key(tweet.record.timestamp)
        counts = trend.setdefault(month, {label: 0 for label in ALL_LABELS})
        for label in tweet.labels:
            counts[label] += 1
    return dict(sorted(trend.items()))
