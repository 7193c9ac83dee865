"""Command-line pipeline: stats | mine | score | evaluate | export-neural.

Every output file starts with comment lines embedding the run configuration
and a content hash of the inputs, so reruns over identical data are
byte-identical (JSON outputs embed the same metadata as fields instead,
since JSON has no comments).  Exit codes: 0 success, 1 usage, 2 data error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from .errors import DataError
from .evaluation import evaluate
from .fap import FapConfig, mine_faps
from .lexicon import (
    DEFAULT_MODIFIERS,
    DEFAULT_SEPARATORS,
    build_inventory,
    dataset_stats,
    load_dataset,
    merge_datasets,
    read_surfaces,
)
from .score import M4Scorer, score_file
from .series import FormPair, index_by_bap

DATASET_LABELS = ("train", "dev-attested", "dev-wug", "test-wug")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _add_common(parser):
    parser.add_argument(
        "--modifiers",
        default="".join(sorted(DEFAULT_MODIFIERS)),
        help="characters that glue onto the preceding base character",
    )
    parser.add_argument(
        "--separators",
        default="".join(sorted(DEFAULT_SEPARATORS)),
        help="particle separator characters",
    )
    parser.add_argument(
        "--schema",
        default=None,
        help="comma-separated column names (default: lemma,form,tag[,rating])",
    )
    parser.add_argument("--language", default="", help="language label")


def _schema(args):
    return tuple(args.schema.split(",")) if args.schema else None


def _workers(args) -> int:
    env = os.environ.get("ANAMORPH_WORKERS")
    if env:
        return max(1, int(env))
    if getattr(args, "workers", None):
        return max(1, args.workers)
    return os.cpu_count() or 1


def _sha256(path) -> str:
    h = hashlib.sha256()
    h.update(Path(path).read_bytes())
    return h.hexdigest()


def _run_config(args, command, paths, extra=None):
    # worker count deliberately omitted: outputs must not depend on it
    cfg = {
        "command": command,
        "language": args.language,
        "datasets": {label: Path(p).name for label, p in paths.items()},
        "modifiers": args.modifiers,
        "separators": args.separators,
        "schema": args.schema or "auto",
    }
    if extra:
        cfg.update(extra)
    return cfg


def _header_lines(run_config, paths):
    hashes = {Path(p).name: _sha256(p) for p in paths.values()}
    return [
        "anamorph-run " + json.dumps(run_config, sort_keys=True, ensure_ascii=False),
        "inputs-sha256 " + json.dumps(hashes, sort_keys=True),
    ], hashes


def _require(paths):
    for label, p in paths.items():
        if not Path(p).is_file():
            raise DataError(f"missing dataset: {label} ({p})")


def _load_shared(paths, args, *, allow_empty=True):
    """Load several files under one inventory built over all of them."""
    modifiers = frozenset(args.modifiers)
    separators = frozenset(args.separators)
    surfaces = []
    for p in paths.values():
        surfaces.extend(read_surfaces(p, _schema(args), separators=separators))
    inventory = build_inventory(surfaces, modifiers)
    loaded = {}
    judgments = {}
    for label, p in paths.items():
        ds, js = load_dataset(
            p,
            _schema(args),
            source_label=label,
            inventory=inventory,
            separators=separators,
            language=args.language,
            allow_empty=allow_empty,
        )
        loaded[label] = ds
        if js is not None:
            judgments[label] = js
    return loaded, judgments, inventory


def format_stats(stats) -> str:
    """Render a stats row the way the training-data table prints it."""

    def grp(n: int) -> str:
        return f"{n:,}".replace(",", " ")

    return (
        f"{grp(stats.entry_count)} / {stats.phoneme_count} / "
        f"{stats.tag_count} / {round(stats.syncretism_pct)}"
    )


def cmd_stats(args) -> int:
    ds, _ = load_dataset(
        args.train,
        _schema(args),
        source_label="train",
        modifier_set=frozenset(args.modifiers),
        separators=frozenset(args.separators),
        language=args.language,
    )
    label = args.language or Path(args.train).name
    print(f"{label}: {format_stats(dataset_stats(ds))}")
    return 0


def _fap_config(args) -> FapConfig:
    return FapConfig(
        min_pair_cov=args.min_pair_cov,
        min_form_cov=args.min_form_cov,
        exact_var_count=None if args.exact_var_count < 0 else args.exact_var_count,
        min_pair_frac=args.min_pair_frac,
        column_cap=args.column_cap,
        per_tag=args.per_tag,
    )


def _mine_paths(args):
    return {
        "train": args.train,
        "dev-attested": args.dev_attested,
        "dev-wug": args.dev_wug,
        "test-wug": args.test_wug,
    }


def _annotation_for(pair, result, inventory):
    assignment = result.assignments.get(pair)
    if assignment is None:
        return "", ""
    return (
        assignment.fap.wp1.surface(inventory),
        assignment.fap.wp2.surface(inventory),
    )


def _mine(args):
    paths = _mine_paths(args)
    _require(paths)
    loaded, _, inventory = _load_shared(paths, args)
    union = merge_datasets(*(loaded[label] for label in DATASET_LABELS))
    cfg = _fap_config(args)
    result = mine_faps(union, cfg, workers=_workers(args))
    return loaded, union, inventory, cfg, result, paths


def _write_annotated(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for line in header:
            fh.write(f"# {line}\n")
        for row in rows:
            fh.write("\t".join(row) + "\n")


def _pair_sort_key(inventory):
    def key(pair):
        return (inventory.decode(pair.f1), pair.tag, inventory.decode(pair.f2))

    return key


def cmd_mine(args) -> int:
    loaded, union, inventory, cfg, result, paths = _mine(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    run_config = _run_config(
        args,
        "mine",
        paths,
        extra={
            "min_pair_cov": cfg.min_pair_cov,
            "min_form_cov": cfg.min_form_cov,
            "exact_var_count": cfg.exact_var_count,
            "min_pair_frac": cfg.min_pair_frac,
            "column_cap": cfg.column_cap,
            "per_tag": cfg.per_tag,
        },
    )
    header, hashes = _header_lines(run_config, paths)

    # one row per distinct (lemma, form, tag) triple, canonical order
    pairs = [p for cls in result.index.values() for p in cls.pairs]
    pairs.sort(key=_pair_sort_key(inventory))
    bap_of = {}
    for key, cls in result.index.items():
        for p in cls.pairs:
            bap_of[p] = cls.bap
    rows = []
    for p in pairs:
        fap1, fap2 = _annotation_for(p, result, inventory)
        rows.append(
            (
                inventory.decode(p.f1),
                inventory.decode(p.f2),
                p.tag,
                bap_of[p].surface(inventory),
                fap1,
                fap2,
            )
        )
    _write_annotated(out_dir / "annotated.tsv", header, rows)

    class_rows = []
    for key in sorted(result.index, key=lambda k: result.index[k].bap.surface(inventory)):
        cls = result.index[key]
        class_rows.append(
            (
                cls.bap.surface(inventory),
                str(len(cls.pairs)),
                str(len(cls.col1)),
                str(len(cls.col2)),
            )
        )
    _write_annotated(out_dir / "classes.tsv", header, class_rows)

    classes_json = []
    for key in sorted(result.index, key=lambda k: result.index[k].bap.surface(inventory)):
        cls = result.index[key]
        usage: dict[str, int] = {}
        for p in cls.pairs:
            a = result.assignments.get(p)
            if a is not None:
                s = a.fap.surface(inventory)
                usage[s] = usage.get(s, 0) + 1
        classes_json.append(
            {
                "bap": cls.bap.surface(inventory),
                "pair_count": len(cls.pairs),
                "selected_faps": [
                    {"fap": fap, "usage_count": count}
                    for fap, count in sorted(
                        usage.items(), key=lambda kv: (-kv[1], kv[0])
                    )
                ],
            }
        )
    payload = {
        "run_config": run_config,
        "inputs_sha256": hashes,
        "classes": classes_json,
    }
    (out_dir / "patterns.json").write_text(
        json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    print(f"mined {len(result.index)} classes, {len(result.assignments)} FAP assignments")
    return 0


def cmd_export_neural(args) -> int:
    loaded, union, inventory, cfg, result, paths = _mine(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    run_config = _run_config(args, "export-neural", paths)
    header, _ = _header_lines(run_config, paths)
    bap_of = {}
    for cls in result.index.values():
        for p in cls.pairs:
            bap_of[p] = cls.bap
    for label in DATASET_LABELS:
        ds = loaded[label]
        rows = []
        for e in ds.entries:
            pair = FormPair(f1=e.lemma, f2=e.form, tag=e.tag)
            fap1, fap2 = _annotation_for(pair, result, inventory)
            rows.append(
                (
                    inventory.decode(e.lemma),
                    inventory.decode(e.form),
                    e.tag,
                    bap_of[pair].surface(inventory),
                    fap1,
                    fap2,
                )
            )
        name = label.replace("-", "_") + "_annotated.tsv"
        _write_annotated(out_dir / name, header, rows)
    print(f"exported annotated files to {out_dir}")
    return 0


def cmd_score(args) -> int:
    paths = {"train": args.train, "test-wug": args.test}
    _require(paths)
    loaded, _, inventory = _load_shared(paths, args, allow_empty=False)
    train_index = index_by_bap(loaded["train"])
    scorer = M4Scorer(
        train_index=train_index, inventory=inventory, same_tag=args.same_tag
    )
    run_config = _run_config(
        args, "score", paths, extra={"model": args.model, "same_tag": args.same_tag}
    )
    header, _ = _header_lines(run_config, paths)
    score_file(loaded["test-wug"], scorer, args.out, header_lines=header)
    print(f"wrote {args.out}")
    return 0


def _read_scores(path):
    rows = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").split("\n"), start=1
    ):
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise DataError(f"{path} line {lineno}: expected 4 columns")
        try:
            score = float(cols[3])
        except ValueError:
            raise DataError(
                f"{path} line {lineno}: score {cols[3]!r} is not a number"
            ) from None
        rows.append((cols[0], cols[1], cols[2], score))
    if not rows:
        raise DataError(f"{path}: no score rows")
    return rows


def cmd_evaluate(args) -> int:
    paths = {"scores": args.scores, "judgments": args.judgments}
    _require(paths)
    scored = _read_scores(args.scores)
    _, judgments = load_dataset(
        args.judgments,
        _schema(args),
        source_label="dev-wug",
        separators=frozenset(args.separators),
        modifier_set=frozenset(args.modifiers),
    )
    if judgments is None:
        raise DataError(f"{args.judgments}: no rating column")
    report = evaluate(scored, judgments)
    run_config = _run_config(args, "evaluate", paths)
    _, hashes = _header_lines(run_config, paths)
    payload = {"run_config": run_config, "inputs_sha256": hashes}
    payload.update(report.to_dict())
    Path(args.report).write_text(
        json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    print(
        f"n={report.n} pearson={report.pearson:.4f} "
        f"spearman={report.spearman:.4f} unmatched={report.unmatched}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="anamorph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="summarize a training file")
    p.add_argument("train", help="training TSV")
    _add_common(p)
    p.set_defaults(func=cmd_stats)

    for name, func in (("mine", cmd_mine), ("export-neural", cmd_export_neural)):
        p = sub.add_parser(name, help=f"{name} over the union of the four datasets")
        p.add_argument("--train", required=True)
        p.add_argument("--dev-attested", required=True)
        p.add_argument("--dev-wug", required=True)
        p.add_argument("--test-wug", required=True)
        p.add_argument("--out-dir", required=True)
        p.add_argument("--min-pair-cov", type=int, default=2)
        p.add_argument("--min-form-cov", type=int, default=2)
        p.add_argument(
            "--exact-var-count",
            type=int,
            default=1,
            help="required variables per FAP side; -1 disables the filter",
        )
        p.add_argument("--min-pair-frac", type=float, default=None)
        p.add_argument("--column-cap", type=int, default=2000)
        p.add_argument("--per-tag", action="store_true")
        p.add_argument("--workers", type=int, default=None)
        _add_common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("score", help="score wug forms")
    p.add_argument("model", choices=["m4"])
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--same-tag", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("evaluate", help="correlate scores with judgments")
    p.add_argument("--scores", required=True)
    p.add_argument("--judgments", required=True)
    p.add_argument("--report", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_evaluate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DataError as exc:
        sys.stderr.write(f"anamorph: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
