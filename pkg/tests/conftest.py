"""Shared fixtures: paths to the committed corpus and small record builders."""

from datetime import datetime, timezone
from pathlib import Path

import pytest

from vaxsent import TweetRecord, normalize, score_tweet

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def tweets_path() -> Path:
    return FIXTURES / "tweets.jsonl"


@pytest.fixture(scope="session")
def cases_path() -> Path:
    return FIXTURES / "cases.csv"


def make_record(
    id: str = "t1",
    month: str = "2021-03",
    country: str | None = "AU",
    text: str = "placeholder",
) -> TweetRecord:
    year, mon = month.split("-")
    ts = datetime(int(year), int(mon), 15, 12, 0, tzinfo=timezone.utc)
    return TweetRecord(id=id, timestamp=ts, country=country, text=text)


def make_scored(
    labels,
    id: str = "t1",
    month: str = "2021-03",
    country: str | None = "AU",
    text: str = "placeholder",
):
    """Build a ScoredTweet with an explicit label set, skipping the backend."""
    record = make_record(id=id, month=month, country=country, text=text)
    return score_tweet(record, normalize(record.text), frozenset(labels))
