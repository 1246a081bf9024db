"""Exception types shared across the toolkit.

Every error raised on purpose derives from VaxsentError so callers can
catch the whole family; the CLI maps subfamilies to stage exit codes.
"""

from __future__ import annotations


class VaxsentError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(VaxsentError):
    """Invalid or incomplete pipeline configuration."""


class SchemaError(VaxsentError):
    """A data file does not match its documented schema."""


class IngestError(VaxsentError):
    """Corpus or case-count ingestion failed."""


class EmptyCorpusError(IngestError):
    """An operation that needs at least one record got none."""


class InvalidRangeError(VaxsentError):
    """A half-open date range with start >= end."""


class InvalidParameterError(VaxsentError):
    """A numeric parameter outside its documented domain."""


class BackendUnavailableError(VaxsentError):
    """A classifier backend cannot serve predictions (missing model,
    missing optional dependency, or similar)."""


class MissingPredictionError(BackendUnavailableError):
    """The precomputed backend has no row for a requested tweet id."""
