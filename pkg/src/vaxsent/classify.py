"""Sentiment classification backends.

Every backend maps a normalized tweet to 11 per-label probabilities and
is deterministic and immutable once constructed; downstream code never
cares which backend produced a vector. Three implementations:

* RuleLexiconBackend - keyword cues, no model artifact needed; the test
  suite and the bundled fixtures run entirely on this one.
* PrecomputedBackend - replays predictions from an `id -> probs` file.
* ExportedModelBackend - runs a fine-tuned encoder exported as a
  TorchScript directory (optional torch/transformers dependency, loaded
  lazily; a loaded backend is a shareable read-only session).
"""

from __future__ import annotations

import csv
import functools
import json
import logging
from importlib import resources
from pathlib import Path

from .errors import (
    BackendUnavailableError,
    InvalidParameterError,
    MissingPredictionError,
    SchemaError,
)
from .labels import (
    ALL_LABELS,
    NUM_LABELS,
    SentimentLabel,
    parse_label,
    parse_label_set,
    validate_label_vector,
)
logger = logging.getLogger(__name__)

EXPORT_MANIFEST_NAME = "manifest.json"
EXPORT_FORMAT = "vaxsent-torchscript-v1"


class ClassifierBackend:
    """Contract: predict() returns 11 probabilities in canonical order."""

    name = "abstract"

    def predict(self, text: str, tweet_id: str | None = None) -> tuple[float, ...]:
        raise NotImplementedError


def classify(
    text: str,
    backend: ClassifierBackend,
    tweet_id: str | None = None,
) -> tuple[float, ...]:
    """Run one backend over one normalized tweet and validate its output."""
    return validate_label_vector(backend.predict(text, tweet_id=tweet_id))


def threshold(vector: tuple[float, ...], tau: float = 0.5) -> frozenset[SentimentLabel]:
    """Labels whose probability is >= tau; tau must lie strictly in (0, 1)."""
    if not 0.0 < tau < 1.0:
        raise InvalidParameterError(f"tau must be in (0, 1), got {tau}")
    return frozenset(
        label for label, p in zip(ALL_LABELS, vector) if p >= tau
    )


class RuleLexiconBackend(ClassifierBackend):
    """Probability 1.0 for a label iff any of its cue words occurs."""

    name = "rule-lexicon"

    def __init__(self, cues: dict[str, frozenset[SentimentLabel]]):
        self.cues = dict(cues)

    def predict(self, text: str, tweet_id: str | None = None) -> tuple[float, ...]:
        hit: set[SentimentLabel] = set()
        for token in text.split():
            labels = self.cues.get(token)
            if labels:
                hit.update(labels)
        return tuple(1.0 if label in hit else 0.0 for label in ALL_LABELS)


def load_rule_cues(path: str | Path) -> dict[str, frozenset[SentimentLabel]]:
    """Load a `cue,label` CSV; a cue may appear on several rows."""
    cues: dict[str, set[SentimentLabel]] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != ["cue", "label"]:
            raise SchemaError(f"rule lexicon {path}: expected header 'cue,label'")
        for row in reader:
            cue = row["cue"].strip().lower()
            if not cue:
                raise SchemaError(f"rule lexicon {path}: empty cue")
            cues.setdefault(cue, set()).add(parse_label(row["label"]))
    return {cue: frozenset(labels) for cue, labels in cues.items()}


@functools.lru_cache(maxsize=1)
def default_rule_backend() -> RuleLexiconBackend:
    ref = resources.files("vaxsent.data") / "rule_cues.csv"
    with resources.as_file(ref) as path:
        return RuleLexiconBackend(load_rule_cues(path))


class PrecomputedBackend(ClassifierBackend):
    """Replays a fixed `tweet id -> label vector` table.

    Missing ids raise MissingPredictionError rather than returning a
    silent zero vector.
    """

    name = "precomputed"

    def __init__(self, predictions: dict[str, tuple[float, ...]]):
        self.predictions = dict(predictions)

    def predict(self, text: str, tweet_id: str | None = None) -> tuple[float, ...]:
        if tweet_id is None:
            raise MissingPredictionError("precomputed backend needs a tweet id")
        try:
            return self.predictions[tweet_id]
        except KeyError:
            raise MissingPredictionError(
                f"no precomputed prediction for id {tweet_id!r}"
            ) from None

    @classmethod
    def from_csv(cls, path: str | Path) -> "PrecomputedBackend":
        """Accepts either `id,p0..p10` probabilities or `id,labels` sets."""
        prob_header = ["id"] + [f"p{i}" for i in range(NUM_LABELS)]
        predictions: dict[str, tuple[float, ...]] = {}
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header == prob_header:
                for row in reader:
                    if len(row) != len(prob_header):
                        raise SchemaError(f"{path}: bad probability row {row!r}")
                    try:
                        vec = validate_label_vector(float(v) for v in row[1:])
                    except (ValueError, InvalidParameterError) as exc:
                        raise SchemaError(f"{path}: bad probability row {row!r}") from exc
                    predictions[row[0]] = vec
            elif header == ["id", "labels"]:
                for row in reader:
                    if len(row) != 2:
                        raise SchemaError(f"{path}: bad label row {row!r}")
                    labels = parse_label_set(row[1])
                    predictions[row[0]] = tuple(
                        1.0 if label in labels else 0.0 for label in ALL_LABELS
                    )
            else:
                raise SchemaError(
                    f"{path}: header must be 'id,p0,...,p10' or 'id,labels'"
                )
        return cls(predictions)


class ExportedModelBackend(ClassifierBackend):
    """Local inference over an exported fine-tuned encoder.

    The export directory holds a TorchScript model, a saved tokenizer,
    and a manifest naming the output labels in canonical order (10-wide
    exports omit OfficialReport, which is then reported as 0.0). The
    loaded session is immutable and may be shared across threads.
    """

    name = "exported-model"

    def __init__(self, model_dir: str | Path):
        model_dir = Path(model_dir)
        manifest_path = model_dir / EXPORT_MANIFEST_NAME
        if not manifest_path.is_file():
            raise BackendUnavailableError(f"no {EXPORT_MANIFEST_NAME} in {model_dir}")
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
        if manifest.get("format") != EXPORT_FORMAT:
            raise BackendUnavailableError(
                f"{manifest_path}: unsupported format {manifest.get('format')!r}"
            )
        self.labels = _check_manifest_labels(manifest.get("labels", []))
        self.max_length = int(manifest.get("max_length", 128))
        model_file = model_dir / manifest.get("model_file", "model.pt")
        tokenizer_dir = model_dir / manifest.get("tokenizer_dir", "tokenizer")
        if not model_file.is_file():
            raise BackendUnavailableError(f"model file missing: {model_file}")
        if not tokenizer_dir.is_dir():
            raise BackendUnavailableError(f"tokenizer dir missing: {tokenizer_dir}")
        try:
            import torch
            from transformers import AutoTokenizer
        except ImportError as exc:
            raise BackendUnavailableError(
                "the exported-model backend needs the optional 'model' extras "
                "(pip install vaxsent[model])"
            ) from exc
        self._torch = torch
        self.model = torch.jit.load(str(model_file), map_location="cpu")
        self.model.eval()
        self.tokenizer = AutoTokenizer.from_pretrained(str(tokenizer_dir))
        logger.info("loaded exported model from %s (%d labels)", model_dir, len(self.labels))

    def predict(self, text: str, tweet_id: str | None = None) -> tuple[float, ...]:
        torch = self._torch
        encoded = self.tokenizer(
            text,
            return_tensors="pt",
            truncation=True,
            padding="max_length",
            max_length=self.max_length,
        )
        with torch.inference_mode():
            probs = self.model(encoded["input_ids"], encoded["attention_mask"])
        row = probs[0].tolist()
        by_label = dict(zip(self.labels, row))
        return tuple(float(by_label.get(label, 0.0)) for label in ALL_LABELS)


def _check_manifest_labels(names: list[str]) -> tuple[SentimentLabel, ...]:
    labels = tuple(parse_label(name) for name in names)
    if len(set(labels)) != len(labels):
        raise SchemaError("export manifest repeats a label")
    if list(labels) != sorted(labels, key=lambda l: l.index):
        raise SchemaError("export manifest labels are not in canonical order")
    if len(labels) == NUM_LABELS:
        return labels
    if len(labels) == NUM_LABELS - 1:
        missing = set(ALL_LABELS) - set(labels)
        if missing != {SentimentLabel.OFFICIAL_REPORT}:
            raise SchemaError(
                "a 10-label export may only omit OfficialReport, "
                f"but omits {sorted(l.canonical_name for l in missing)}"
            )
        return labels
    raise SchemaError(f"export manifest must name 10 or 11 labels, got {len(labels)}")
