"""Wug scoring with trained artifacts.

M1 scores a wug pair by the forced-decoding joint probability of the given
inflected form; M2 by the joint probability of the pair's FAP second half
(0 with a warning when the miner found none); M3 by the classifier
probability of the form.  Output follows the shared scored-TSV contract:
lemma, form, tag, score to six decimal places, input order preserved.
"""

from __future__ import annotations

import logging
import math
from pathlib import Path

from .artifact import ModelArtifact
from .data import chars, m1_source, m2_source, read_annotated

log = logging.getLogger(__name__)


def score_row(artifact: ModelArtifact, row) -> float:
    vocab = artifact.vocab
    if artifact.model_type == "m1":
        src = vocab.encode(m1_source(row))
        tgt = vocab.encode(chars(row.form), add_eos=True)
        return math.exp(artifact.model.sequence_log_prob(src, tgt, vocab.bos_id))
    if artifact.model_type == "m2":
        if not row.has_fap:
            log.warning(
                "no FAP for %s/%s (%s): scoring 0", row.lemma, row.form, row.tag
            )
            return 0.0
        src = vocab.encode(m2_source(row))
        tgt = vocab.encode(chars(row.fap2), add_eos=True)
        return math.exp(artifact.model.sequence_log_prob(src, tgt, vocab.bos_id))
    if artifact.model_type == "m3":
        return artifact.model.probability(vocab.encode(chars(row.form)))
    raise ValueError(f"unknown model type {artifact.model_type!r}")


def score_rows(artifact: ModelArtifact, rows):
    return [(r.lemma, r.form, r.tag, score_row(artifact, r)) for r in rows]


def score_file(artifact: ModelArtifact, test_tsv, out_path, *, header_lines=()):
    rows = read_annotated(test_tsv)
    scored = score_rows(artifact, rows)
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        for line in header_lines:
            fh.write(f"# {line}\n")
        for lemma, form, tag, score in scored:
            fh.write(f"{lemma}\t{form}\t{tag}\t{score:.6f}\n")
    return scored


def predict_form(artifact: ModelArtifact, row) -> str:
    """Greedy M1 decode of the inflected form (evaluation helper)."""
    vocab = artifact.vocab
    src = vocab.encode(m1_source(row))
    ids = artifact.model.decode_greedy(src, vocab.bos_id, vocab.eos_id)
    return "".join(vocab.decode(ids))


def predict_fap2(artifact: ModelArtifact, row) -> str:
    """Greedy M2 decode of the FAP second half."""
    vocab = artifact.vocab
    src = vocab.encode(m2_source(row))
    ids = artifact.model.decode_greedy(src, vocab.bos_id, vocab.eos_id)
    return "".join(vocab.decode(ids))
