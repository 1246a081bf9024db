"""Shared fixtures: a tiny offline encoder and synthetic labeled examples.

Everything here is built locally so the suite needs neither network
access nor a SenWave copy. The keyword corpus makes each label a
deterministic function of the text, which a small encoder can learn.
"""

from __future__ import annotations

import random

import pytest

from senwave_trainer import EncoderSpec, build_char_tokenizer, build_model
from senwave_trainer.dataset import SenWaveExample

KEYWORDS = (
    "vaccine",
    "glad",
    "sad",
    "angry",
    "hoax",
    "thanks",
    "report",
    "jab",
    "dose",
    "fear",
)


def make_keyword_examples(count: int, seed: int = 11, width: int = 10) -> list[SenWaveExample]:
    """Distinct texts whose label vector marks which keywords appear."""
    rng = random.Random(seed)
    examples: list[SenWaveExample] = []
    seen = set()
    while len(examples) < count:
        chosen = tuple(sorted(rng.sample(range(len(KEYWORDS)), rng.randint(1, 4))))
        if chosen in seen:
            continue
        seen.add(chosen)
        text = " ".join(KEYWORDS[i] for i in chosen)
        labels = tuple(1 if i in chosen else 0 for i in range(len(KEYWORDS)))
        if width > len(KEYWORDS):
            labels = labels + (0,) * (width - len(KEYWORDS))
        examples.append(SenWaveExample(text=text, labels=labels[:width]))
    return examples


@pytest.fixture(scope="session")
def tokenizer(tmp_path_factory):
    return build_char_tokenizer(tmp_path_factory.mktemp("tok"))


@pytest.fixture
def tiny_model():
    def build(label_count: int = 10, seed: int = 0):
        return build_model(label_count, EncoderSpec(), seed=seed)

    return build


@pytest.fixture
def keyword_examples():
    return make_keyword_examples
