"""Error types raised by the trainer."""


class TrainerError(Exception):
    """Base class for everything this package raises on purpose."""


class DatasetMissingError(TrainerError):
    """The SenWave file is not where the caller said it would be."""


class DatasetSchemaError(TrainerError):
    """The dataset file exists but its columns or values are wrong."""


class ExportMismatchError(TrainerError):
    """Exported model disagrees with the in-framework model beyond tolerance."""
