"""Command-line entry point.

Fine-tunes an encoder on a local SenWave copy and writes an inference
directory the classifier's exported-model backend can load. Exit
codes: 0 success, 2 bad arguments, 3 dataset problems.
"""

from __future__ import annotations

import argparse
import logging
import sys
import tempfile
from typing import Sequence

from .dataset import CANONICAL_LABELS, TEN_LABELS, load_senwave
from .errors import DatasetMissingError, DatasetSchemaError, ExportMismatchError
from .export import export_model
from .model import EncoderSpec, build_char_tokenizer, build_model, load_tokenizer
from .train import TrainConfig, train_model

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATASET = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="senwave-trainer",
        description="Fine-tune a sentiment encoder on SenWave and export it.",
    )
    parser.add_argument("--dataset", required=True, help="labeled SenWave file (CSV or JSONL)")
    parser.add_argument("--output-dir", required=True, help="where the export directory goes")
    parser.add_argument(
        "--checkpoint",
        default="bert-base-uncased",
        help="pretrained encoder to start from",
    )
    parser.add_argument(
        "--tiny",
        action="store_true",
        help="train a small randomly initialised encoder instead of a checkpoint "
        "(offline smoke runs only; the result is not a usable model)",
    )
    parser.add_argument(
        "--with-official-report",
        action="store_true",
        help="train all 11 labels instead of dropping OfficialReport",
    )
    parser.add_argument("--epochs", type=int, default=4)
    parser.add_argument("--batch-size", type=int, default=16)
    parser.add_argument("--learning-rate", type=float, default=2e-5)
    parser.add_argument("--max-length", type=int, default=128)
    parser.add_argument("--val-frac", type=float, default=0.1)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--max-steps", type=int, help="stop after this many optimizer steps")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug-level logging")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    labels = CANONICAL_LABELS if args.with_official_report else TEN_LABELS

    try:
        examples = load_senwave(args.dataset, labels=labels)
    except (DatasetMissingError, DatasetSchemaError) as exc:
        print(f"dataset: {exc}", file=sys.stderr)
        return EXIT_DATASET

    if args.epochs < 1 or args.batch_size < 1 or args.max_length < 8:
        print("epochs and batch size must be positive, max length at least 8", file=sys.stderr)
        return EXIT_USAGE

    if args.tiny:
        with tempfile.TemporaryDirectory(prefix="senwave-tok-") as scratch:
            tokenizer = build_char_tokenizer(scratch)
        model = build_model(len(labels), EncoderSpec(), seed=args.seed)
    else:
        tokenizer = load_tokenizer(args.checkpoint)
        model = build_model(
            len(labels), EncoderSpec(checkpoint=args.checkpoint), seed=args.seed
        )

    config = TrainConfig(
        max_length=args.max_length,
        batch_size=args.batch_size,
        epochs=args.epochs,
        learning_rate=args.learning_rate,
        val_frac=args.val_frac,
        seed=args.seed,
        max_steps=args.max_steps,
    )
    logger.info("training on %d examples, %d labels", len(examples), len(labels))
    result = train_model(model, tokenizer, examples, config)
    print(f"steps:            {result.steps}")
    print(f"final train loss: {result.final_train_loss:.4f}")
    for name in sorted(result.metrics):
        print(f"{name + ':':<18}{result.metrics[name]:.4f}")

    check_texts = tuple(ex.text for ex in examples[:20])
    try:
        out = export_model(
            model,
            tokenizer,
            labels,
            args.output_dir,
            max_length=args.max_length,
            check_texts=check_texts,
        )
    except ExportMismatchError as exc:
        print(f"export: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"exported to {out}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
