"""Configuration resolution: defaults, file values, flag overrides."""

import json

import pytest

from vaxsent import ConfigError, PipelineConfig, config_as_dict, resolve_config


def test_defaults():
    config = resolve_config()
    assert config.backend == "rule-lexicon"
    assert config.tau == 0.5
    assert config.ngram_n == 2
    assert config.ngram_k == 20
    assert config.output_dir == "out"
    assert config.countries is None


def test_file_overrides_defaults(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"tau": 0.3, "ngram_k": 5}), encoding="utf-8")
    config = resolve_config(config_path=path)
    assert config.tau == 0.3
    assert config.ngram_k == 5
    assert config.ngram_n == 2


def test_flags_override_file(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"tau": 0.3, "output_dir": "from_file"}), encoding="utf-8")
    config = resolve_config(config_path=path, overrides={"tau": 0.7})
    assert config.tau == 0.7
    assert config.output_dir == "from_file"


def test_none_overrides_are_ignored(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"tau": 0.3}), encoding="utf-8")
    config = resolve_config(config_path=path, overrides={"tau": None})
    assert config.tau == 0.3


def test_countries_normalize_to_upper_tuple():
    assert resolve_config(overrides={"countries": "au, jp"}).countries == ("AU", "JP")
    assert resolve_config(overrides={"countries": ["br"]}).countries == ("BR",)


@pytest.mark.parametrize(
    "overrides",
    [
        {"tau": 0.0},
        {"tau": 1.0},
        {"tau": True},
        {"backend": "neural-net"},
        {"backend": "precomputed"},
        {"backend": "exported-model"},
        {"ngram_n": 0},
        {"ngram_k": 0},
        {"date_start": "2021-1"},
        {"corpus_format": "xml"},
    ],
)
def test_invalid_values_raise(overrides):
    with pytest.raises(ConfigError):
        resolve_config(overrides=overrides)


def test_backend_path_requirements_satisfied(tmp_path):
    preds = tmp_path / "p.csv"
    config = resolve_config(overrides={"backend": "precomputed", "predictions": str(preds)})
    assert config.backend == "precomputed"
    config = resolve_config(overrides={"backend": "exported-model", "model_dir": str(tmp_path)})
    assert config.model_dir == str(tmp_path)


def test_unknown_file_key_raises(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"taus": 0.3}), encoding="utf-8")
    with pytest.raises(ConfigError):
        resolve_config(config_path=path)


def test_non_object_config_raises(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps([1, 2]), encoding="utf-8")
    with pytest.raises(ConfigError):
        resolve_config(config_path=path)


def test_malformed_json_raises(tmp_path):
    path = tmp_path / "run.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError):
        resolve_config(config_path=path)


def test_config_as_dict_is_json_ready():
    config = resolve_config(overrides={"countries": "au,jp"})
    as_dict = config_as_dict(config)
    assert as_dict["countries"] == ["AU", "JP"]
    json.dumps(as_dict)
    assert set(as_dict) == set(PipelineConfig.__dataclass_fields__)
