"""Train and score the neural wug models from annotated exports."""

from __future__ import annotations

import argparse
import sys

from .artifact import load_artifact
from .data import NeuralDataError
from .scoring import score_file
from .training import TrainConfig, train_m1, train_m2, train_m3


def build_parser():
    parser = argparse.ArgumentParser(prog="anamorph-neural", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a model on an annotated export")
    p.add_argument("--model", choices=["m1", "m2", "m3"], required=True)
    p.add_argument("--train", required=True, help="annotated train TSV")
    p.add_argument("--out", required=True, help="model directory")
    p.add_argument(
        "--target-tag",
        default=None,
        help="required for m3 (task cells: eng V;PST;1;SG, nld V;PST;PL, deu V.PTCP;PST)",
    )
    p.add_argument("--layers", type=int, default=2)
    p.add_argument("--hidden", type=int, default=256)
    p.add_argument("--embed-dim", type=int, default=64)
    p.add_argument("--dropout", type=float, default=0.3)
    p.add_argument("--epochs", type=int, default=100)
    p.add_argument("--batch-size", type=int, default=32)
    p.add_argument("--lr", type=float, default=1e-3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dev-fraction", type=float, default=0.1)
    p.add_argument("--patience", type=int, default=10)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("score", help="score an annotated test file")
    p.add_argument("--model-dir", required=True)
    p.add_argument("--test", required=True, help="annotated test TSV")
    p.add_argument("--out", required=True, help="scored TSV")
    p.set_defaults(func=cmd_score)
    return parser


def cmd_train(args) -> int:
    cfg = TrainConfig(
        layers=args.layers,
        hidden=args.hidden,
        embed_dim=args.embed_dim,
        dropout=args.dropout,
        epochs=args.epochs,
        batch_size=args.batch_size,
        lr=args.lr,
        seed=args.seed,
        dev_fraction=args.dev_fraction,
        patience=args.patience,
    )
    if args.model == "m1":
        artifact = train_m1(args.train, cfg)
    elif args.model == "m2":
        artifact = train_m2(args.train, cfg)
    else:
        if not args.target_tag:
            raise NeuralDataError("m3 requires --target-tag")
        artifact = train_m3(args.train, args.target_tag, cfg)
    artifact.save(args.out)
    print(f"saved {args.model} model to {args.out}")
    return 0


def cmd_score(args) -> int:
    artifact = load_artifact(args.model_dir)
    header = [f"anamorph-neural model={artifact.model_type}"]
    score_file(artifact, args.test, args.out, header_lines=header)
    print(f"wrote {args.out}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except NeuralDataError as exc:
        sys.stderr.write(f"anamorph-neural: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
