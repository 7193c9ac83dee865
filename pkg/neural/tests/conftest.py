import itertools
import random
import subprocess

import pytest

from anamorph_neural import TrainConfig, train_m1, train_m2, train_m3

TARGET_TAG = "V.PTCP;PRS"
OTHER_TAG = "V;PST"


def toy_language(seed=42):
    """A deterministic 20-verb toy language: CVC stems, two cells.

    The target cell suffixes -ent to the stem, the other -te; lemmas end in
    -en.  Ten rows (five verbs per cell, disjoint) are held out; every stem
    still occurs in training via its other cell.
    """
    rng = random.Random(seed)
    stems = ["".join(c) for c in itertools.product("ptkb", "ai", "ptkb")]
    rng.shuffle(stems)
    verbs, wug_stems = stems[:20], stems[20:30]
    rows = []
    for s in verbs:
        rows.append((s + "en", s + "ent", TARGET_TAG))
        rows.append((s + "en", s + "te", OTHER_TAG))
    ptcp_holdout = {verbs[i] for i in range(0, 10, 2)}
    pst_holdout = {verbs[i] for i in range(1, 11, 2)}
    train, heldout = [], []
    for lemma, form, tag in rows:
        stem = lemma[:-2]
        held = (tag == TARGET_TAG and stem in ptcp_holdout) or (
            tag == OTHER_TAG and stem in pst_holdout
        )
        (heldout if held else train).append((lemma, form, tag))
    wugs = [(s + "en", s + "ent", TARGET_TAG) for s in wug_stems[:3]]
    wugs += [(s + "en", s + "te", OTHER_TAG) for s in wug_stems[3:5]]
    # one scrambled pair: no recurrent pattern, so the miner leaves it bare
    s = wug_stems[5]
    wugs.append((s + "en", s[::-1] + "uq", OTHER_TAG))
    test_wugs = [(s + "en", s + "te", OTHER_TAG) for s in wug_stems[6:]]
    return train, heldout, wugs, test_wugs


def write_rows(path, rows, *, ratings=None):
    with open(path, "w", encoding="utf-8") as fh:
        for i, row in enumerate(rows):
            line = "\t".join(row)
            if ratings is not None:
                line += f"\t{ratings[i]}"
            fh.write(line + "\n")


@pytest.fixture(scope="session")
def toy_exports(tmp_path_factory):
    """Raw toy files annotated through the primary miner's CLI."""
    tmp = tmp_path_factory.mktemp("toy")
    train, heldout, wugs, test_wugs = toy_language()
    write_rows(tmp / "train.tsv", train)
    write_rows(tmp / "dev_attested.tsv", heldout)
    write_rows(tmp / "dev_wug.tsv", wugs, ratings=[3.0 + (i % 4) for i in range(len(wugs))])
    write_rows(tmp / "test_wug.tsv", test_wugs)
    out = tmp / "exports"
    subprocess.run(
        [
            "anamorph",
            "export-neural",
            "--train",
            str(tmp / "train.tsv"),
            "--dev-attested",
            str(tmp / "dev_attested.tsv"),
            "--dev-wug",
            str(tmp / "dev_wug.tsv"),
            "--test-wug",
            str(tmp / "test_wug.tsv"),
            "--out-dir",
            str(out),
        ],
        check=True,
        capture_output=True,
    )
    return {
        "dir": tmp,
        "train": out / "train_annotated.tsv",
        "dev_attested": out / "dev_attested_annotated.tsv",
        "dev_wug": out / "dev_wug_annotated.tsv",
        "test_wug": out / "test_wug_annotated.tsv",
        "judgments": tmp / "dev_wug.tsv",
    }


M1_CONFIG = TrainConfig(
    layers=1, hidden=128, embed_dim=32, dropout=0.1,
    epochs=300, batch_size=8, lr=3e-3, seed=0, dev_fraction=0.0,
)
SMALL_CONFIG = TrainConfig(
    layers=1, hidden=64, embed_dim=32, dropout=0.1,
    epochs=150, batch_size=8, lr=3e-3, seed=0, dev_fraction=0.0,
)


@pytest.fixture(scope="session")
def m1_artifact(toy_exports):
    return train_m1(toy_exports["train"], M1_CONFIG)


@pytest.fixture(scope="session")
def m2_artifact(toy_exports):
    return train_m2(toy_exports["train"], SMALL_CONFIG)


@pytest.fixture(scope="session")
def m3_artifact(toy_exports):
    return train_m3(toy_exports["train"], TARGET_TAG, SMALL_CONFIG)
