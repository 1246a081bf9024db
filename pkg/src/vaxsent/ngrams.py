"""Word-level n-gram frequency analysis, overall and per polarity group."""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InvalidParameterError
from .polarity import GROUP_NEGATIVE, GROUP_NEUTRAL, GROUP_POSITIVE, ScoredTweet

POLARITY_GROUPS = (GROUP_NEGATIVE, GROUP_NEUTRAL, GROUP_POSITIVE)


@dataclass(frozen=True)
class NgramCount:
    gram: tuple[str, ...]
    count: int


def ngrams(tokens: Sequence[str], n: int) -> list[tuple[str, ...]]:
    """All length-n windows of the token list, in positional order."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    return [tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)]


def top_k(
    corpus: Iterable[ScoredTweet],
    n: int,
    k: int,
    stopwords: frozenset[str] = frozenset(),
) -> list[NgramCount]:
    """The k most frequent n-grams over a scored corpus.

    Grams containing any stopword are excluded before counting; ties are
    broken lexicographically ascending so the ranking is deterministic.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    counts: Counter[tuple[str, ...]] = Counter()
    for tweet in corpus:
        for gram in ngrams(tweet.normalized.text.split(), n):
            if not any(word in stopwords for word in gram):
                counts[gram] += 1
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return [NgramCount(gram=gram, count=count) for gram, count in ranked[:k]]


def top_k_by_group(
    corpus: Iterable[ScoredTweet],
    n: int,
    k: int,
    stopwords: frozenset[str] = frozenset(),
) -> dict[str, list[NgramCount]]:
    """top_k applied independently to each naive-polarity group."""
    by_group: dict[str, list[ScoredTweet]] = {g: [] for g in POLARITY_GROUPS}
    for tweet in corpus:
        by_group[tweet.polarity_group].append(tweet)
    return {
        group: top_k(tweets, n, k, stopwords) for group, tweets in by_group.items()
    }


def load_stopwords(path: str | Path) -> frozenset[str]:
    """One lowercase word per line; blank lines and # comments ignored."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip().lower()
            if word and not word.startswith("#"):
                words.add(word)
    return frozenset(words)


@functools.lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    ref = resources.files("vaxsent.data") / "stopwords.txt"
    with resources.as_file(ref) as path:
        return load_stopwords(path)
