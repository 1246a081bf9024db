"""Corpus loading: accounting, rejection reasons, filters, case counts."""

import json
from datetime import timezone

import pytest

from vaxsent import (
    EmptyCorpusError,
    IngestError,
    InvalidRangeError,
    filter_corpus,
    load_case_counts,
    load_tweets,
    month_key,
    parse_timestamp,
)
from conftest import make_record


def test_fixture_accounting(tweets_path):
    result = load_tweets(tweets_path)
    assert result.total_rows == 205
    assert result.valid_rows == 202
    assert result.rejected_rows == 3
    assert result.duplicate_rows == 2
    assert len(result.records) == 200
    # conservation: every valid row is either kept or a duplicate
    assert result.valid_rows == len(result.records) + result.duplicate_rows
    assert result.total_rows == result.valid_rows + result.rejected_rows
    assert len(result.reject_reasons) == 3


def test_duplicate_keeps_first_occurrence(tweets_path):
    result = load_tweets(tweets_path)
    by_id = {r.id: r for r in result.records}
    assert "duplicate payload" not in by_id["t0025"].text
    assert "duplicate payload" not in by_id["t0138"].text
    assert len(by_id) == len(result.records)


def test_parse_timestamp_variants():
    utc = parse_timestamp("2021-03-05T10:00:00Z")
    assert utc == parse_timestamp("2021-03-05T10:00:00+00:00")
    assert utc.tzinfo is not None
    naive = parse_timestamp("2021-03-05T10:00:00")
    assert naive.tzinfo == timezone.utc


def test_month_key_is_utc():
    # 08:00 on April 1st in UTC+9 is still March in UTC.
    ts = parse_timestamp("2021-04-01T08:00:00+09:00")
    assert month_key(ts) == "2021-03"
    assert month_key(parse_timestamp("2021-04-01T10:00:00+09:00")) == "2021-04"


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")


GOOD_ROW = {
    "id": "a1",
    "created_at": "2021-01-02T03:04:05Z",
    "country": "au",
    "text": "hello",
}


def test_rejects_are_counted_with_reasons(tmp_path):
    path = tmp_path / "t.jsonl"
    write_jsonl(
        path,
        [
            GOOD_ROW,
            {**GOOD_ROW, "id": "a2", "created_at": "not-a-date"},
            {**GOOD_ROW, "id": "a3", "country": "Australia"},
            {**GOOD_ROW, "id": "a4", "text": "   "},
            {**GOOD_ROW, "id": ""},
        ],
    )
    result = load_tweets(path)
    assert [r.id for r in result.records] == ["a1"]
    assert result.rejected_rows == 4
    assert any("row 2" in reason for reason in result.reject_reasons)
    # country codes are normalized to upper case
    assert result.records[0].country == "AU"


def test_missing_country_becomes_none(tmp_path):
    path = tmp_path / "t.jsonl"
    write_jsonl(path, [{**GOOD_ROW, "country": None}, {**GOOD_ROW, "id": "a2", "country": ""}])
    result = load_tweets(path)
    assert [r.country for r in result.records] == [None, None]


def test_only_bad_rows_is_an_empty_corpus(tmp_path):
    path = tmp_path / "t.jsonl"
    write_jsonl(path, [{**GOOD_ROW, "created_at": "nope"}])
    with pytest.raises(EmptyCorpusError):
        load_tweets(path)


def test_missing_file_is_ingest_error(tmp_path):
    with pytest.raises(IngestError):
        load_tweets(tmp_path / "absent.jsonl")


def test_csv_corpus_round_trip(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text(
        "id,created_at,country,text\n"
        "c1,2021-02-01T00:00:00Z,JP,first tweet\n"
        "c2,2021-02-02T00:00:00Z,,second tweet\n",
        encoding="utf-8",
    )
    result = load_tweets(path)
    assert [r.id for r in result.records] == ["c1", "c2"]
    assert result.records[1].country is None


def test_format_override_beats_suffix(tmp_path):
    path = tmp_path / "corpus.txt"
    write_jsonl(path, [GOOD_ROW])
    assert len(load_tweets(path, format="jsonl").records) == 1
    with pytest.raises(IngestError):
        load_tweets(path)  # no known suffix, no format given


def test_filter_by_country():
    records = [
        make_record(id="r1", country="AU"),
        make_record(id="r2", country="JP"),
        make_record(id="r3", country=None),
    ]
    assert [r.id for r in filter_corpus(records, country="au")] == ["r1"]
    # records without a country never match a country filter
    assert filter_corpus(records, country="ZZ") == []


def test_filter_date_range_is_half_open():
    records = [
        make_record(id="r1", month="2021-01"),
        make_record(id="r2", month="2021-02"),
        make_record(id="r3", month="2021-03"),
    ]
    kept = filter_corpus(records, date_range=("2021-01", "2021-03"))
    assert [r.id for r in kept] == ["r1", "r2"]


@pytest.mark.parametrize(
    "date_range",
    [("2021-03", "2021-01"), ("2021-01", "2021-01"), ("2021/01", "2021-03"), ("2021-13", "2022-01")],
)
def test_bad_date_range_raises(date_range):
    with pytest.raises(InvalidRangeError):
        filter_corpus([make_record()], date_range=date_range)


def test_case_counts_fixture(cases_path):
    result = load_case_counts(cases_path)
    assert [s.country for s in result.series] == ["AU", "BR", "ID", "IN", "JP"]
    for series in result.series:
        months = [m for m, _ in series.points]
        assert months == sorted(months)
        assert all(count >= 0 for _, count in series.points)


def test_case_counts_rejects_bad_rows(tmp_path):
    path = tmp_path / "cases.csv"
    path.write_text(
        "country,month,new_cases\n"
        "AU,2021-01,10\n"
        "AU,2021-01,11\n"
        "AU,2021-14,5\n"
        "AU,2021-02,-3\n"
        "Australia,2021-02,7\n",
        encoding="utf-8",
    )
    result = load_case_counts(path)
    assert result.rejected_rows == 4
    assert result.series[0].points == (("2021-01", 10),)
