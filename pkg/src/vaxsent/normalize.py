"""Tweet text normalization.

Converts raw tweet text into a lowercase, single-spaced word sequence by
a fixed pipeline: strip URLs, strip @-mentions, un-hash hashtags, apply
emoji substitutions, lowercase, strip punctuation (keeping intra-word
apostrophes), apply word substitutions on whole tokens, collapse
whitespace. Word substitution runs on the final character set so the
result is a fixed point: normalize(normalize(x)) == normalize(x). The
substitution table enforces the other half of that guarantee by
rejecting replacements that are themselves patterns.
"""

from __future__ import annotations

import csv
import functools
import re
import unicodedata
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import SchemaError

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_MENTION_RE = re.compile(r"@\w+")
_HASHTAG_RE = re.compile(r"#(\w+)")
_CONTROL_RE = re.compile(r"[\x00-\x1f\x7f-\x9f]")
# apostrophe flanked by letters/digits on both sides survives the strip
_KEPT_APOSTROPHE_RE = re.compile(r"(?<=[a-z0-9])'(?=[a-z0-9])")
_DISALLOWED_RE = re.compile(r"[^a-z0-9\x00 ]")
_WORD_PATTERN_RE = re.compile(r"[a-z0-9]+")

# word-form patterns a loadable table must provide (the slang half of the
# bundled standardisation table), plus emoji mappings to these words
_REQUIRED_WORD_PATTERNS = (
    "omg",
    "tbh",
    "rt",
    "dm",
    "socialdistance",
    "fwiw",
    "covid19vax",
)
_REQUIRED_EMOJI_REPLACEMENTS = ("smile", "sad")

#: Every character a normalized text may contain.
_OUTPUT_CHARS = frozenset("abcdefghijklmnopqrstuvwxyz0123456789' ")


def _canonical_words(text: str) -> str:
    """Reduce a replacement string to the normalized output alphabet.

    Word replacements are spliced in after the character strip, so they
    must already be in final form; this applies the same character rules
    the pipeline does.
    """
    text = unicodedata.normalize("NFC", text).lower()
    text = text.replace("’", "'").replace("ʼ", "'")
    text = _KEPT_APOSTROPHE_RE.sub("\x00", text)
    text = _DISALLOWED_RE.sub(" ", text)
    text = text.replace("\x00", "'")
    return " ".join(text.split())


@dataclass(frozen=True)
class NormalizedText:
    """Normalized tweet body plus its whitespace token count."""

    text: str
    token_count: int

    @classmethod
    def from_text(cls, text: str) -> "NormalizedText":
        return cls(text=text, token_count=len(text.split()))


class SubstitutionTable:
    """Ordered pattern -> replacement mappings.

    Patterns made only of [a-z0-9] are word patterns, matched
    case-insensitively as whole tokens; anything else is an emoji or
    symbol sequence, matched on exact codepoints.
    """

    def __init__(self, entries: list[tuple[str, str]]):
        word_subs: dict[str, str] = {}
        emoji_subs: list[tuple[str, str]] = []
        seen: set[str] = set()
        for pattern, replacement in entries:
            pattern = pattern.strip()
            if not pattern:
                raise SchemaError("empty substitution pattern")
            key = pattern.lower()
            if key in seen:
                raise SchemaError(f"duplicate substitution pattern: {pattern!r}")
            seen.add(key)
            if _WORD_PATTERN_RE.fullmatch(key):
                word_subs[key] = _canonical_words(replacement)
            else:
                if all(ch in _OUTPUT_CHARS for ch in key):
                    raise SchemaError(
                        f"pattern {pattern!r} could match normalized output;"
                        " multi-word patterns are not supported"
                    )
                emoji_subs.append((pattern, _canonical_words(replacement)))
        # A replacement that is itself a pattern would rewrite again on a
        # second pass; idempotence of normalize() depends on rejecting it.
        for replacement in [*word_subs.values(), *(r for _, r in emoji_subs)]:
            for token in replacement.split():
                if token in word_subs:
                    raise SchemaError(
                        f"replacement token {token!r} is also a pattern"
                    )
        self.word_subs = word_subs
        # longest first so multi-codepoint sequences win over prefixes
        self.emoji_subs = tuple(sorted(emoji_subs, key=lambda e: -len(e[0])))
        if word_subs:
            alternation = "|".join(
                re.escape(p) for p in sorted(word_subs, key=len, reverse=True)
            )
            self._word_re: re.Pattern[str] | None = re.compile(
                r"\b(?:" + alternation + r")\b"
            )
        else:
            self._word_re = None

    def apply_words(self, text: str) -> str:
        """Replace whole-token word patterns; input must be lowercase."""
        if self._word_re is None:
            return text
        return self._word_re.sub(lambda m: self.word_subs[m.group(0)], text)

    def apply_emojis(self, text: str) -> str:
        """Replace exact emoji sequences, space-padded to keep tokens apart."""
        for pattern, replacement in self.emoji_subs:
            if pattern in text:
                text = text.replace(pattern, f" {replacement} ")
        return text


def load_substitution_table(path: str | Path) -> SubstitutionTable:
    """Load a `pattern,replacement` CSV and check the required core mappings."""
    entries: list[tuple[str, str]] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != ["pattern", "replacement"]:
            raise SchemaError(
                f"substitution table {path}: expected header 'pattern,replacement'"
            )
        for row in reader:
            entries.append((row["pattern"], row["replacement"]))
    table = SubstitutionTable(entries)
    missing = [p for p in _REQUIRED_WORD_PATTERNS if p not in table.word_subs]
    if missing:
        raise SchemaError(
            f"substitution table {path}: missing required patterns {missing}"
        )
    emoji_replacements = {r for _, r in table.emoji_subs}
    for needed in _REQUIRED_EMOJI_REPLACEMENTS:
        if needed not in emoji_replacements:
            raise SchemaError(
                f"substitution table {path}: no emoji mapping to {needed!r}"
            )
    return table


@functools.lru_cache(maxsize=1)
def default_substitution_table() -> SubstitutionTable:
    """The bundled table: slang expansions plus smile/sad emoji mappings."""
    ref = resources.files("vaxsent.data") / "substitutions.csv"
    with resources.as_file(ref) as path:
        return load_substitution_table(path)


def normalize(raw: str, table: SubstitutionTable | None = None) -> NormalizedText:
    """Run the full normalization pipeline over one raw tweet."""
    if table is None:
        table = default_substitution_table()
    text = unicodedata.normalize("NFC", raw)
    text = _CONTROL_RE.sub(" ", text)
    text = _URL_RE.sub(" ", text)
    text = _MENTION_RE.sub(" ", text)
    text = _HASHTAG_RE.sub(r"\1", text)
    text = table.apply_emojis(text)
    text = text.lower()
    text = text.replace("’", "'").replace("ʼ", "'")
    text = _KEPT_APOSTROPHE_RE.sub("\x00", text)
    text = _DISALLOWED_RE.sub(" ", text)
    text = text.replace("\x00", "'")
    text = table.apply_words(text)
    text = " ".join(text.split())
    return NormalizedText.from_text(text)


def tokenize(normalized: NormalizedText) -> list[str]:
    """Whitespace-split a normalized text; length equals token_count."""
    return normalized.text.split()
