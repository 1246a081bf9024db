"""Sentiment scoring and longitudinal aggregation for vaccine tweet corpora."""

__version__ = "0.1.0"

from .aggregate import (
    HISTOGRAM_BUCKETS,
    UNKNOWN_COUNTRY,
    MonthlyAggregate,
    ScoreStats,
    aggregate_monthly,
    label_count_distribution,
    monthly_sentiment_trend,
    score_distribution_stats,
    sentiment_share_by_country,
    sentiment_totals,
)
from .classify import (
    ClassifierBackend,
    ExportedModelBackend,
    PrecomputedBackend,
    RuleLexiconBackend,
    classify,
    default_rule_backend,
    load_rule_cues,
    threshold,
)
from .config import PipelineConfig, config_as_dict, load_config_file, resolve_config
from .corpus import (
    CaseLoadResult,
    CaseSeries,
    LoadResult,
    TweetRecord,
    filter_corpus,
    load_case_counts,
    load_tweets,
    month_key,
    parse_timestamp,
)
from .errors import (
    BackendUnavailableError,
    ConfigError,
    EmptyCorpusError,
    IngestError,
    InvalidParameterError,
    InvalidRangeError,
    MissingPredictionError,
    SchemaError,
    VaxsentError,
)
from .labels import (
    ALL_LABELS,
    NUM_LABELS,
    SentimentLabel,
    format_label_set,
    parse_label,
    parse_label_set,
    validate_label_vector,
)
from .ngrams import (
    NgramCount,
    default_stopwords,
    load_stopwords,
    ngrams,
    top_k,
    top_k_by_group,
)
from .normalize import (
    NormalizedText,
    SubstitutionTable,
    default_substitution_table,
    load_substitution_table,
    normalize,
    tokenize,
)
from .pipeline import PipelineResult, StageError, run_pipeline, write_report
from .polarity import (
    DEFAULT_WEIGHTS,
    ScoredTweet,
    WeightTable,
    default_polarity_lexicon,
    default_weight_table,
    display_score,
    load_polarity_lexicon,
    load_weight_table,
    naive_polarity,
    polarity_group,
    score_tweet,
    stance,
    vaccine_polarity,
)

__all__ = [
    "ALL_LABELS",
    "BackendUnavailableError",
    "CaseLoadResult",
    "CaseSeries",
    "ClassifierBackend",
    "ConfigError",
    "DEFAULT_WEIGHTS",
    "EmptyCorpusError",
    "ExportedModelBackend",
    "HISTOGRAM_BUCKETS",
    "IngestError",
    "InvalidParameterError",
    "InvalidRangeError",
    "LoadResult",
    "MissingPredictionError",
    "MonthlyAggregate",
    "NUM_LABELS",
    "NgramCount",
    "NormalizedText",
    "PipelineConfig",
    "PipelineResult",
    "PrecomputedBackend",
    "RuleLexiconBackend",
    "SchemaError",
    "ScoreStats",
    "ScoredTweet",
    "SentimentLabel",
    "StageError",
    "SubstitutionTable",
    "TweetRecord",
    "UNKNOWN_COUNTRY",
    "VaxsentError",
    "WeightTable",
    "aggregate_monthly",
    "classify",
    "config_as_dict",
    "default_polarity_lexicon",
    "default_rule_backend",
    "default_stopwords",
    "default_substitution_table",
    "default_weight_table",
    "display_score",
    "filter_corpus",
    "format_label_set",
    "label_count_distribution",
    "load_case_counts",
    "load_config_file",
    "load_polarity_lexicon",
    "load_rule_cues",
    "load_stopwords",
    "load_substitution_table",
    "load_tweets",
    "load_weight_table",
    "month_key",
    "monthly_sentiment_trend",
    "naive_polarity",
    "ngrams",
    "normalize",
    "parse_label",
    "parse_label_set",
    "parse_timestamp",
    "polarity_group",
    "resolve_config",
    "run_pipeline",
    "score_distribution_stats",
    "score_tweet",
    "sentiment_share_by_country",
    "sentiment_totals",
    "stance",
    "threshold",
    "tokenize",
    "top_k",
    "top_k_by_group",
    "vaccine_polarity",
    "validate_label_vector",
    "write_report",
]
