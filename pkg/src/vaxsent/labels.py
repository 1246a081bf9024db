"""The closed 11-sentiment label space and its canonical ordering.

Everything downstream (weight tables, classifier vectors, CSV columns)
indexes sentiments by this one ordering, so it must never change.
"""

from __future__ import annotations

import enum
from typing import Iterable

from .errors import InvalidParameterError, SchemaError


class SentimentLabel(enum.Enum):
    """One of the 11 sentiments, with a stable canonical index 0-10."""

    OPTIMISTIC = 0
    THANKFUL = 1
    EMPATHETIC = 2
    PESSIMISTIC = 3
    ANXIOUS = 4
    SAD = 5
    ANNOYED = 6
    DENIAL = 7
    OFFICIAL_REPORT = 8
    SURPRISE = 9
    JOKING = 10

    @property
    def index(self) -> int:
        return self.value

    @property
    def canonical_name(self) -> str:
        """CamelCase name used in data files and CSV output."""
        return _CANONICAL_NAMES[self.value]

    @property
    def display_name(self) -> str:
        """Human-facing name, e.g. "Official report"."""
        return _DISPLAY_NAMES[self.value]

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.canonical_name


_CANONICAL_NAMES = (
    "Optimistic",
    "Thankful",
    "Empathetic",
    "Pessimistic",
    "Anxious",
    "Sad",
    "Annoyed",
    "Denial",
    "OfficialReport",
    "Surprise",
    "Joking",
)

_DISPLAY_NAMES = (
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
)

#: All 11 labels in canonical index order.
ALL_LABELS: tuple[SentimentLabel, ...] = tuple(SentimentLabel)

NUM_LABELS = len(ALL_LABELS)

# Accepts canonical names, display names, bare "official", and any
# case/spacing/underscore variation of those.
_ALIASES: dict[str, SentimentLabel] = {}
for _label in ALL_LABELS:
    for _name in (_label.canonical_name, _label.display_name, _label.name):
        _ALIASES[_name.lower().replace(" ", "").replace("_", "")] = _label
_ALIASES["official"] = SentimentLabel.OFFICIAL_REPORT


def parse_label(name: str) -> SentimentLabel:
    """Resolve a label name as written in data files or the published tables.

    Raises SchemaError for anything outside the closed label set.
    """
    key = name.strip().lower().replace(" ", "").replace("_", "")
    try:
        return _ALIASES[key]
    except KeyError:
        raise SchemaError(f"unknown sentiment label: {name!r}") from None


# A label vector is a tuple of 11 probabilities in canonical order; a
# label set is a frozenset of SentimentLabel. Plain containers keep the
# hot paths cheap and hashable.
LabelVector = tuple
LabelSet = frozenset


def validate_label_vector(probs: Iterable[float]) -> tuple[float, ...]:
    """Check an 11-wide probability vector and return it as a tuple."""
    vec = tuple(float(p) for p in probs)
    if len(vec) != NUM_LABELS:
        raise InvalidParameterError(
            f"label vector must have {NUM_LABELS} entries, got {len(vec)}"
        )
    for label, p in zip(ALL_LABELS, vec):
        if not (0.0 <= p <= 1.0):
            raise InvalidParameterError(
                f"probability for {label.canonical_name} outside [0, 1]: {p}"
            )
    return vec


def format_label_set(labels: frozenset[SentimentLabel]) -> str:
    """Stable semicolon-joined rendering in canonical order."""
    return ";".join(l.canonical_name for l in sorted(labels, key=lambda l: l.index))


def parse_label_set(text: str) -> frozenset[SentimentLabel]:
    """Inverse of format_label_set; empty string means the empty set."""
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(parse_label(part) for part in text.split(";"))
