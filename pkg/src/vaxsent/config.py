"""Run configuration: a JSON file merged with command-line overrides.

A config file is optional. Every field has a default, any field may be
set in the file, and any field set on the command line wins over the
file. Unknown keys and out-of-range values raise ConfigError so typos
fail loudly instead of silently running with defaults.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Mapping

from .errors import ConfigError

BACKEND_NAMES = ("rule-lexicon", "precomputed", "exported-model")


@dataclass(frozen=True)
class PipelineConfig:
    """Everything a pipeline run needs, resolved and validated."""

    corpus: str | None = None
    corpus_format: str | None = None  # inferred from suffix when None
    cases: str | None = None
    substitutions: str | None = None  # None        -> bundled table
    weights: str | None = None  # None        -> bundled weights
    lexicon: str | None = None  # None        -> bundled lexicon
    stopwords: str | None = None  # None        -> bundled list
    backend: str = "rule-lexicon"
    predictions: str | None = None  # precomputed backend input
    model_dir: str | None = None  # exported-model backend input
    tau: float = 0.5
    countries: tuple[str, ...] | None = None
    date_start: str | None = None  # YYYY-MM, inclusive
    date_end: str | None = None  # YYYY-MM, exclusive
    ngram_n: int = 2
    ngram_k: int = 20
    output_dir: str = "out"
    seed: int = 0


def _validate(config: PipelineConfig) -> PipelineConfig:
    if not 0.0 < config.tau < 1.0:
        raise ConfigError(f"tau must be strictly between 0 and 1, got {config.tau}")
    if config.backend not in BACKEND_NAMES:
        raise ConfigError(
            f"unknown backend {config.backend!r}; expected one of {', '.join(BACKEND_NAMES)}"
        )
    if config.backend == "precomputed" and not config.predictions:
        raise ConfigError("backend 'precomputed' requires a predictions file")
    if config.backend == "exported-model" and not config.model_dir:
        raise ConfigError("backend 'exported-model' requires a model directory")
    if config.ngram_n < 1:
        raise ConfigError(f"ngram_n must be at least 1, got {config.ngram_n}")
    if config.ngram_k < 1:
        raise ConfigError(f"ngram_k must be at least 1, got {config.ngram_k}")
    if config.corpus_format not in (None, "jsonl", "csv"):
        raise ConfigError(
            f"corpus_format must be 'jsonl' or 'csv', got {config.corpus_format!r}"
        )
    for side in (config.date_start, config.date_end):
        if side is not None and not _is_month(side):
            raise ConfigError(f"date bounds must look like YYYY-MM, got {side!r}")
    return config


def _is_month(value: Any) -> bool:
    if not isinstance(value, str) or len(value) != 7 or value[4] != "-":
        return False
    year, month = value[:4], value[5:]
    return year.isdigit() and month.isdigit() and 1 <= int(month) <= 12


def _coerce(name: str, value: Any, target_type: Any) -> Any:
    if value is None:
        return None
    if name == "countries":
        if isinstance(value, str):
            value = [c for c in value.split(",") if c]
        if not isinstance(value, (list, tuple)) or not all(
            isinstance(c, str) for c in value
        ):
            raise ConfigError(f"countries must be a list of codes, got {value!r}")
        return tuple(c.strip().upper() for c in value)
    if target_type is float and isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if target_type is int and isinstance(value, int) and not isinstance(value, bool):
        return value
    if target_type is str and isinstance(value, str):
        return value
    raise ConfigError(f"config field {name!r} has the wrong type: {value!r}")


_FIELD_TYPES = {
    "corpus": str,
    "corpus_format": str,
    "cases": str,
    "substitutions": str,
    "weights": str,
    "lexicon": str,
    "stopwords": str,
    "backend": str,
    "predictions": str,
    "model_dir": str,
    "tau": float,
    "countries": tuple,
    "date_start": str,
    "date_end": str,
    "ngram_n": int,
    "ngram_k": int,
    "output_dir": str,
    "seed": int,
}


def load_config_file(path: str | Path) -> dict[str, Any]:
    """Parse a JSON config file into a plain mapping of known fields."""
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    unknown = set(data) - set(_FIELD_TYPES)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return data


def resolve_config(
    config_path: str | Path | None = None,
    overrides: Mapping[str, Any] | None = None,
) -> PipelineConfig:
    """Merge defaults, the optional config file, and overrides, then validate.

    Precedence, lowest to highest: built-in defaults, config file,
    overrides (command-line flags). Override values of None mean "not
    given" and never mask a file value.
    """
    merged: dict[str, Any] = {}
    if config_path is not None:
        merged.update(load_config_file(config_path))
    for key, value in (overrides or {}).items():
        if key not in _FIELD_TYPES:
            raise ConfigError(f"unknown config key: {key}")
        if value is not None:
            merged[key] = value
    coerced = {
        name: _coerce(name, value, _FIELD_TYPES[name]) for name, value in merged.items()
    }
    return _validate(PipelineConfig(**coerced))


def config_as_dict(config: PipelineConfig) -> dict[str, Any]:
    """JSON-friendly view of a config, suitable for the run manifest."""
    out: dict[str, Any] = {}
    for field in fields(config):
        value = getattr(config, field.name)
        out[field.name] = list(value) if isinstance(value, tuple) else value
    return out
