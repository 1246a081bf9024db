"""Fine-tune a transformer encoder on SenWave and export it for inference."""

from .dataset import (
    CANONICAL_LABELS,
    TEN_LABELS,
    SenWaveExample,
    load_senwave,
    train_val_split,
)
from .errors import (
    DatasetMissingError,
    DatasetSchemaError,
    ExportMismatchError,
    TrainerError,
)
from .export import EXPORT_FORMAT, ROUND_TRIP_TOLERANCE, export_model, verify_round_trip
from .model import EncoderSpec, MultiLabelClassifier, build_char_tokenizer, build_model
from .train import (
    TrainConfig,
    TrainResult,
    encode_batch,
    evaluate,
    predict_probabilities,
    train_model,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_LABELS",
    "TEN_LABELS",
    "SenWaveExample",
    "load_senwave",
    "train_val_split",
    "TrainerError",
    "DatasetMissingError",
    "DatasetSchemaError",
    "ExportMismatchError",
    "EXPORT_FORMAT",
    "ROUND_TRIP_TOLERANCE",
    "export_model",
    "verify_round_trip",
    "EncoderSpec",
    "MultiLabelClassifier",
    "build_char_tokenizer",
    "build_model",
    "TrainConfig",
    "TrainResult",
    "encode_batch",
    "evaluate",
    "predict_probabilities",
    "train_model",
    "__version__",
]
