"""Score nonce (wug) forms by alternation-type frequency and evaluate the
scores against simulated human ratings, end to end through the CLI.

Run: python3 demos/03_wug_scoring.py
"""

import json
import tempfile
from pathlib import Path

from anamorph.cli import main

TRAIN = [
    ("aben", "abent", "PTCP"),
    ("oden", "odent", "PTCP"),
    ("ufen", "ufent", "PTCP"),
    ("ikeben", "ikebent", "PTCP"),
    ("ele", "eles", "PRS"),
    ("ine", "ines", "PRS"),
]
# wug pairs with made-up acceptability ratings: the ...ent pattern is common
# (4 training pairs), the ...es pattern rarer (2), the last pair unattested.
DEV_WUG = [
    ("eten", "etent", "PTCP", "5.1"),
    ("ogen", "ogent", "PTCP", "4.7"),
    ("ape", "apes", "PRS", "3.2"),
    ("uz", "zu", "PTCP", "1.0"),
]


def write(path, rows):
    path.write_text("\n".join("\t".join(r) for r in rows) + "\n", encoding="utf-8")


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    write(tmp / "train.tsv", TRAIN)
    write(tmp / "dev_wug.tsv", DEV_WUG)

    print("== score: type frequency of each wug pair's broad pattern ==")
    main(
        [
            "score",
            "m4",
            "--train",
            str(tmp / "train.tsv"),
            "--test",
            str(tmp / "dev_wug.tsv"),
            "--out",
            str(tmp / "scores.tsv"),
        ]
    )
    for line in (tmp / "scores.tsv").read_text(encoding="utf-8").splitlines():
        if not line.startswith("#"):
            print("   ", line.replace("\t", "  "))

    print("\n== evaluate: correlation with the ratings ==")
    main(
        [
            "evaluate",
            "--scores",
            str(tmp / "scores.tsv"),
            "--judgments",
            str(tmp / "dev_wug.tsv"),
            "--report",
            str(tmp / "report.json"),
        ]
    )
    report = json.loads((tmp / "report.json").read_text(encoding="utf-8"))
    print(f"    joined rows: {report['n']}")
    print(f"    pearson:     {report['pearson']:.4f}")
    print(f"    spearman:    {report['spearman']:.4f}")
