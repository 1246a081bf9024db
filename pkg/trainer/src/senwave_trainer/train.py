"""Fine-tuning loop and multi-label evaluation metrics."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np
import torch
from sklearn.metrics import f1_score, hamming_loss, label_ranking_average_precision_score
from torch import nn

from .dataset import SenWaveExample, train_val_split
from .model import MultiLabelClassifier


@dataclass
class TrainConfig:
    max_length: int = 128
    batch_size: int = 16
    epochs: int = 4
    learning_rate: float = 2e-5
    val_frac: float = 0.1
    seed: int = 42
    # Cap on optimizer steps, mainly for smoke tests; None means run all epochs.
    max_steps: int | None = None


@dataclass
class TrainResult:
    final_train_loss: float
    steps: int
    metrics: dict[str, float] = field(default_factory=dict)


def encode_batch(tokenizer, texts: list[str], max_length: int) -> dict[str, torch.Tensor]:
    encoded = tokenizer(
        texts,
        padding=True,
        truncation=True,
        max_length=max_length,
        return_tensors="pt",
    )
    return {"input_ids": encoded["input_ids"], "attention_mask": encoded["attention_mask"]}


def _batches(examples: list[SenWaveExample], batch_size: int, rng: random.Random):
    order = list(range(len(examples)))
    rng.shuffle(order)
    for start in range(0, len(order), batch_size):
        yield [examples[i] for i in order[start : start + batch_size]]


def train_model(
    model: MultiLabelClassifier,
    tokenizer,
    examples: list[SenWaveExample],
    config: TrainConfig = TrainConfig(),
) -> TrainResult:
    """Fine-tune with a sigmoid-per-label binary cross entropy objective."""
    if not examples:
        raise ValueError("no training examples")
    widths = {len(ex.labels) for ex in examples}
    if widths != {model.label_count}:
        raise ValueError(
            f"label vectors have widths {sorted(widths)}, model expects {model.label_count}"
        )
    torch.manual_seed(config.seed)
    rng = random.Random(config.seed)
    train_set, val_set = train_val_split(examples, config.val_frac, seed=config.seed)
    if not train_set:
        raise ValueError("validation split consumed every example")

    optimizer = torch.optim.AdamW(model.parameters(), lr=config.learning_rate)
    criterion = nn.BCEWithLogitsLoss()
    model.train()
    steps = 0
    loss_value = float("nan")
    done = False
    for _ in range(config.epochs):
        for batch in _batches(train_set, config.batch_size, rng):
            inputs = encode_batch(tokenizer, [ex.text for ex in batch], config.max_length)
            targets = torch.tensor([ex.labels for ex in batch], dtype=torch.float32)
            optimizer.zero_grad()
            logits = model(**inputs)
            loss = criterion(logits, targets)
            loss.backward()
            optimizer.step()
            loss_value = loss.item()
            steps += 1
            if config.max_steps is not None and steps >= config.max_steps:
                done = True
                break
        if done:
            break

    metrics = {}
    if val_set:
        metrics = evaluate(model, tokenizer, val_set, config.max_length, config.batch_size)
    model.eval()
    return TrainResult(final_train_loss=loss_value, steps=steps, metrics=metrics)


@torch.no_grad()
def predict_probabilities(
    model: MultiLabelClassifier,
    tokenizer,
    texts: list[str],
    max_length: int = 128,
    batch_size: int = 32,
) -> np.ndarray:
    model.eval()
    chunks = []
    for start in range(0, len(texts), batch_size):
        inputs = encode_batch(tokenizer, texts[start : start + batch_size], max_length)
        chunks.append(torch.sigmoid(model(**inputs)).cpu().numpy())
    if not chunks:
        return np.zeros((0, model.label_count))
    return np.concatenate(chunks)


def evaluate(
    model: MultiLabelClassifier,
    tokenizer,
    examples: list[SenWaveExample],
    max_length: int = 128,
    batch_size: int = 32,
    threshold: float = 0.5,
) -> dict[str, float]:
    """Hamming loss, label ranking average precision, micro and macro F1."""
    probs = predict_probabilities(
        model, tokenizer, [ex.text for ex in examples], max_length, batch_size
    )
    truth = np.array([ex.labels for ex in examples])
    assigned = (probs >= threshold).astype(int)
    return {
        "hamming_loss": float(hamming_loss(truth, assigned)),
        "lrap": float(label_ranking_average_precision_score(truth, probs)),
        "f1_micro": float(f1_score(truth, assigned, average="micro", zero_division=0)),
        "f1_macro": float(f1_score(truth, assigned, average="macro", zero_division=0)),
    }
