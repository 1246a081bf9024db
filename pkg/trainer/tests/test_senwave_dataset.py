"""Dataset adapter tests against files shaped like real SenWave exports."""

import csv
import json

import pytest

from senwave_trainer import (
    CANONICAL_LABELS,
    TEN_LABELS,
    load_senwave,
    train_val_split,
)
from senwave_trainer.dataset import SenWaveExample, resolve_label_columns
from senwave_trainer.errors import DatasetMissingError, DatasetSchemaError

# The header of the distributed English file, quirks included: a tweet
# id column, "Tweet" for the text, and "Official report" with a space.
SENWAVE_HEADER = [
    "Tweet ID",
    "Tweet",
    "Optimistic",
    "Thankful",
    "Empathetic",
    "Pessimistic",
    "Anxious",
    "Sad",
    "Annoyed",
    "Denial",
    "Official report",
    "Surprise",
    "Joking",
]


def write_senwave_csv(path, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SENWAVE_HEADER)
        writer.writerows(rows)
    return path


def sample_rows():
    return [
        ["1", "so thankful for the nurses", 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        ["2", "this is a hoax and i am angry", 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
        ["3", "new case numbers out today", 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
        ["4", "what a year lol", 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    ]


def test_csv_loads_with_real_header_aliases(tmp_path):
    path = write_senwave_csv(tmp_path / "labeled.csv", sample_rows())
    examples = load_senwave(path, labels=CANONICAL_LABELS)
    assert len(examples) == 4
    assert examples[0] == SenWaveExample(
        text="so thankful for the nurses",
        labels=(0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    )
    # "Official report" resolved onto the canonical name at index 8.
    assert examples[2].labels[8] == 1


def test_default_labels_drop_official_report(tmp_path):
    path = write_senwave_csv(tmp_path / "labeled.csv", sample_rows())
    examples = load_senwave(path)
    assert all(len(ex.labels) == 10 for ex in examples)
    # Row 3 carried only OfficialReport, so its 10-label vector is empty.
    assert examples[2].labels == (0,) * 10


def test_jsonl_rows_load(tmp_path):
    path = tmp_path / "labeled.jsonl"
    with open(path, "w", encoding="utf-8") as fh:
        for row in sample_rows():
            fh.write(json.dumps(dict(zip(SENWAVE_HEADER, row))) + "\n")
    examples = load_senwave(path, labels=CANONICAL_LABELS)
    assert [ex.labels[1] for ex in examples] == [1, 0, 0, 0]


def test_missing_file_explains_how_to_get_the_data(tmp_path):
    with pytest.raises(DatasetMissingError) as err:
        load_senwave(tmp_path / "nope.csv")
    message = str(err.value)
    assert "license" in message
    assert "Request" in message


def test_missing_label_column_is_a_schema_error(tmp_path):
    path = tmp_path / "short.csv"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["Tweet", "Optimistic"])
        writer.writerow(["hello", "1"])
    with pytest.raises(DatasetSchemaError, match="missing label columns"):
        load_senwave(path)


def test_non_binary_value_names_row_and_column(tmp_path):
    rows = sample_rows()
    rows[1][3] = "2"
    path = write_senwave_csv(tmp_path / "bad.csv", rows)
    with pytest.raises(DatasetSchemaError, match="row 3.*'Thankful'.*'2'"):
        load_senwave(path)


def test_empty_text_rows_are_skipped(tmp_path):
    rows = sample_rows()
    rows[0][1] = "   "
    path = write_senwave_csv(tmp_path / "gaps.csv", rows)
    examples = load_senwave(path)
    assert len(examples) == 3


def test_all_rows_unusable_is_a_schema_error(tmp_path):
    rows = [["1", "", 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]]
    path = write_senwave_csv(tmp_path / "empty.csv", rows)
    with pytest.raises(DatasetSchemaError, match="no usable rows"):
        load_senwave(path)


def test_unknown_requested_label_rejected(tmp_path):
    path = write_senwave_csv(tmp_path / "labeled.csv", sample_rows())
    with pytest.raises(DatasetSchemaError, match="unknown labels"):
        load_senwave(path, labels=("Optimistic", "Ecstatic"))


def test_text_column_override(tmp_path):
    path = tmp_path / "odd.csv"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["Body"] + list(CANONICAL_LABELS))
        writer.writerow(["some words"] + ["0"] * 11)
    with pytest.raises(DatasetSchemaError, match="no text column"):
        load_senwave(path)
    examples = load_senwave(path, text_column="Body")
    assert examples[0].text == "some words"


def test_text_column_override_must_exist(tmp_path):
    path = write_senwave_csv(tmp_path / "labeled.csv", sample_rows())
    with pytest.raises(DatasetSchemaError, match="'Body' not in"):
        load_senwave(path, text_column="Body")


def test_empty_file_is_a_schema_error(tmp_path):
    path = tmp_path / "void.csv"
    path.write_text("", encoding="utf-8")
    with pytest.raises(DatasetSchemaError):
        load_senwave(path)


def test_resolve_label_columns_matches_loosely():
    header = ["tweet", "OFFICIAL_REPORT", "joking "]
    mapping = resolve_label_columns(header, ("OfficialReport", "Joking"))
    assert mapping == {"OfficialReport": "OFFICIAL_REPORT", "Joking": "joking "}


def test_split_is_deterministic_and_partitions():
    examples = [
        SenWaveExample(text=f"t{i}", labels=(i % 2,) * 10) for i in range(20)
    ]
    train_a, val_a = train_val_split(examples, 0.25, seed=3)
    train_b, val_b = train_val_split(examples, 0.25, seed=3)
    assert train_a == train_b and val_a == val_b
    assert len(val_a) == 5
    assert sorted(ex.text for ex in train_a + val_a) == sorted(ex.text for ex in examples)


def test_split_rejects_bad_fraction():
    examples = [SenWaveExample(text="t", labels=(0,) * 10)]
    with pytest.raises(DatasetSchemaError):
        train_val_split(examples, 1.0)
    with pytest.raises(DatasetSchemaError):
        train_val_split(examples, -0.1)


def test_ten_label_tuple_omits_official_report_only():
    assert set(CANONICAL_LABELS) - set(TEN_LABELS) == {"OfficialReport"}
    assert TEN_LABELS == tuple(l for l in CANONICAL_LABELS if l != "OfficialReport")
