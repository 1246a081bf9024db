"""Encoder-plus-head model and tokenizer construction.

The classifier is a bidirectional transformer encoder with a dropout
and a linear head over the [CLS] position, one logit per label. The
encoder either comes from a pretrained checkpoint (the normal case) or
is built freshly from a small config, which keeps the test suite off
the network.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from pathlib import Path

import torch
from torch import nn
from transformers import AutoModel, AutoTokenizer, BertConfig, BertModel, BertTokenizerFast


@dataclass(frozen=True)
class EncoderSpec:
    """Where the encoder comes from.

    `checkpoint` names a pretrained model directory or hub id. When it
    is None a small randomly initialised BERT is built from the sizing
    fields instead.
    """

    checkpoint: str | None = None
    hidden_size: int = 32
    num_layers: int = 2
    num_heads: int = 2
    intermediate_size: int = 64
    vocab_size: int = 64
    max_position_embeddings: int = 512


class MultiLabelClassifier(nn.Module):
    def __init__(self, encoder: nn.Module, label_count: int, dropout: float = 0.1):
        super().__init__()
        if label_count < 1:
            raise ValueError(f"label_count must be positive, got {label_count}")
        self.encoder = encoder
        self.dropout = nn.Dropout(dropout)
        self.head = nn.Linear(encoder.config.hidden_size, label_count)

    def forward(self, input_ids: torch.Tensor, attention_mask: torch.Tensor) -> torch.Tensor:
        # return_dict=False keeps the graph traceable for TorchScript.
        hidden = self.encoder(
            input_ids=input_ids, attention_mask=attention_mask, return_dict=False
        )[0]
        pooled = self.dropout(hidden[:, 0])
        return self.head(pooled)

    @property
    def label_count(self) -> int:
        return self.head.out_features


def build_model(label_count: int, spec: EncoderSpec = EncoderSpec(), seed: int | None = None) -> MultiLabelClassifier:
    if seed is not None:
        torch.manual_seed(seed)
    if spec.checkpoint:
        encoder = AutoModel.from_pretrained(spec.checkpoint)
    else:
        config = BertConfig(
            vocab_size=spec.vocab_size,
            hidden_size=spec.hidden_size,
            num_hidden_layers=spec.num_layers,
            num_attention_heads=spec.num_heads,
            intermediate_size=spec.intermediate_size,
            max_position_embeddings=spec.max_position_embeddings,
        )
        encoder = BertModel(config)
    return MultiLabelClassifier(encoder, label_count)


def load_tokenizer(checkpoint: str) -> AutoTokenizer:
    return AutoTokenizer.from_pretrained(checkpoint)


def build_char_tokenizer(directory: str | Path) -> BertTokenizerFast:
    """Write a throwaway lowercase-letter vocabulary and load it.

    Only used by tests and offline smoke runs; real training loads the
    tokenizer shipped with the pretrained checkpoint.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    specials = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"]
    letters = list(string.ascii_lowercase)
    vocab = specials + letters + ["##" + ch for ch in letters]
    (directory / "vocab.txt").write_text("\n".join(vocab) + "\n", encoding="utf-8")
    return BertTokenizerFast(str(directory / "vocab.txt"), do_lower_case=True)
