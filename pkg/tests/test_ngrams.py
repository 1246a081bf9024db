"""N-gram extraction and ranked counting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vaxsent import (
    InvalidParameterError,
    SentimentLabel,
    default_stopwords,
    load_stopwords,
    ngrams,
    top_k,
    top_k_by_group,
)
from conftest import make_scored


def test_ngram_windows():
    tokens = ["a", "b", "c", "d"]
    assert ngrams(tokens, 1) == [("a",), ("b",), ("c",), ("d",)]
    assert ngrams(tokens, 2) == [("a", "b"), ("b", "c"), ("c", "d")]
    assert ngrams(tokens, 4) == [("a", "b", "c", "d")]
    assert ngrams(tokens, 5) == []


def test_ngram_rejects_nonpositive_n():
    with pytest.raises(InvalidParameterError):
        ngrams(["a"], 0)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.text(min_size=1, max_size=4), max_size=30), st.integers(1, 5))
def test_ngram_count_property(tokens, n):
    assert len(ngrams(tokens, n)) == max(0, len(tokens) - n + 1)


def corpus_of(*texts):
    return [
        make_scored({SentimentLabel.OPTIMISTIC}, id=f"t{i}", text=text)
        for i, text in enumerate(texts)
    ]


def test_top_k_counts_and_orders():
    corpus = corpus_of("jab done jab done", "jab done again")
    top = top_k(corpus, n=2, k=3)
    assert [(c.gram, c.count) for c in top] == [
        (("jab", "done"), 3),
        (("done", "again"), 1),
        (("done", "jab"), 1),
    ]


def test_top_k_ties_break_alphabetically():
    corpus = corpus_of("zz aa", "bb cc")
    top = top_k(corpus, n=2, k=2)
    assert [c.gram for c in top] == [("bb", "cc"), ("zz", "aa")]


def test_top_k_excludes_stopword_grams_before_counting():
    # "of the" would outrank everything if stopwords were applied after
    corpus = corpus_of("of the of the of the jab rollout", "jab rollout")
    top = top_k(corpus, n=2, k=2, stopwords=frozenset({"of", "the"}))
    assert top[0].gram == ("jab", "rollout")
    assert all("of" not in c.gram and "the" not in c.gram for c in top)


def test_top_k_rejects_bad_k():
    with pytest.raises(InvalidParameterError):
        top_k(corpus_of("a b"), n=2, k=0)


def test_top_k_by_group_partitions():
    negative = make_scored(
        {SentimentLabel.DENIAL, SentimentLabel.ANNOYED}, id="n1", text="total hoax nonsense"
    )
    positive = make_scored(
        {SentimentLabel.OPTIMISTIC, SentimentLabel.THANKFUL}, id="p1", text="grateful and hopeful"
    )
    tables = top_k_by_group([negative, positive], n=1, k=5)
    assert set(tables) == {"negative", "neutral", "positive"}
    negative_grams = {c.gram for c in tables["negative"]}
    positive_grams = {c.gram for c in tables["positive"]}
    assert ("hoax",) in negative_grams
    assert ("grateful",) in positive_grams
    assert tables["neutral"] == []


def test_stopword_file_roundtrip(tmp_path):
    path = tmp_path / "stop.txt"
    path.write_text("# comment line\nthe\nand\n\n  of  \n", encoding="utf-8")
    assert load_stopwords(path) == frozenset({"the", "and", "of"})


def test_default_stopwords_cover_function_words():
    stop = default_stopwords()
    assert {"the", "and", "a", "to"} <= stop
    # topic words must stay countable
    assert "vaccine" not in stop and "covid" not in stop
