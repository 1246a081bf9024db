"""Export a trained classifier as a TorchScript inference directory.

The directory layout is the loading contract of the downstream
classifier: model.pt (traced module returning sigmoid probabilities),
tokenizer/ (saved tokenizer files), and manifest.json naming the
format, the ordered output labels, and the padding length.
"""

from __future__ import annotations

import json
from pathlib import Path

import torch
from torch import nn

from .dataset import CANONICAL_LABELS
from .errors import ExportMismatchError
from .model import MultiLabelClassifier
from .train import predict_probabilities

EXPORT_FORMAT = "vaxsent-torchscript-v1"
ROUND_TRIP_TOLERANCE = 1e-4


class _SigmoidWrapper(nn.Module):
    """Bakes the sigmoid in so consumers get probabilities, not logits."""

    def __init__(self, model: MultiLabelClassifier):
        super().__init__()
        self.model = model

    def forward(self, input_ids: torch.Tensor, attention_mask: torch.Tensor) -> torch.Tensor:
        return torch.sigmoid(self.model(input_ids, attention_mask))


def check_label_names(label_names: list[str] | tuple[str, ...]) -> tuple[str, ...]:
    """Enforce canonical naming and order before anything hits disk.

    Either all 11 labels or the 10-label variant that drops only
    OfficialReport is accepted.
    """
    names = tuple(label_names)
    unknown = [n for n in names if n not in CANONICAL_LABELS]
    if unknown:
        raise ExportMismatchError(f"unknown label names: {unknown}")
    if len(set(names)) != len(names):
        raise ExportMismatchError("label names repeat")
    expected_order = tuple(n for n in CANONICAL_LABELS if n in names)
    if names != expected_order:
        raise ExportMismatchError(
            f"labels must follow canonical order {expected_order}, got {names}"
        )
    missing = set(CANONICAL_LABELS) - set(names)
    if missing and missing != {"OfficialReport"}:
        raise ExportMismatchError(
            f"an export may omit OfficialReport only, not {sorted(missing)}"
        )
    return names


def export_model(
    model: MultiLabelClassifier,
    tokenizer,
    label_names: list[str] | tuple[str, ...],
    out_dir: str | Path,
    max_length: int = 128,
    check_texts: tuple[str, ...] = (),
) -> Path:
    """Trace, save, and verify an inference directory; returns its path.

    `check_texts` are run through both the eager model and the loaded
    artifact; any probability differing by more than 1e-4 aborts the
    export with ExportMismatchError.
    """
    names = check_label_names(label_names)
    if len(names) != model.label_count:
        raise ExportMismatchError(
            f"manifest names {len(names)} labels but the head is {model.label_count} wide"
        )
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    model.eval()
    wrapper = _SigmoidWrapper(model)
    wrapper.eval()
    sample = tokenizer(
        ["a sample sentence for tracing", "another"],
        return_tensors="pt",
        truncation=True,
        padding="max_length",
        max_length=max_length,
    )
    with torch.inference_mode():
        traced = torch.jit.trace(wrapper, (sample["input_ids"], sample["attention_mask"]))
    traced.save(str(out_dir / "model.pt"))
    tokenizer.save_pretrained(str(out_dir / "tokenizer"))
    manifest = {
        "format": EXPORT_FORMAT,
        "labels": list(names),
        "max_length": max_length,
        "model_file": "model.pt",
        "tokenizer_dir": "tokenizer",
    }
    with open(out_dir / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")

    if check_texts:
        verify_round_trip(model, tokenizer, out_dir, list(check_texts), max_length)
    return out_dir


def verify_round_trip(
    model: MultiLabelClassifier,
    tokenizer,
    export_dir: str | Path,
    texts: list[str],
    max_length: int = 128,
) -> float:
    """Compare eager and exported probabilities; returns the worst gap."""
    export_dir = Path(export_dir)
    loaded = torch.jit.load(str(export_dir / "model.pt"), map_location="cpu")
    loaded.eval()
    eager = predict_probabilities(model, tokenizer, texts, max_length)
    worst = 0.0
    for i, text in enumerate(texts):
        encoded = tokenizer(
            text,
            return_tensors="pt",
            truncation=True,
            padding="max_length",
            max_length=max_length,
        )
        with torch.inference_mode():
            probs = loaded(encoded["input_ids"], encoded["attention_mask"])[0].tolist()
        for j, p in enumerate(probs):
            worst = max(worst, abs(p - float(eager[i, j])))
    if worst > ROUND_TRIP_TOLERANCE:
        raise ExportMismatchError(
            f"exported model drifts from the trained one by {worst:.2e} "
            f"(tolerance {ROUND_TRIP_TOLERANCE:.0e})"
        )
    return worst
