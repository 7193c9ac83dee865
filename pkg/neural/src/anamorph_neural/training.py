"""Training loops for the three wug models.

M1 maps lemma + tag + BAP + FAP to the inflected form; M2 maps lemma + tag
to the second member of the FAP; M3 classifies whether an inflected form
belongs to one target tag.  All runs are seeded end to end so a fixed
config reproduces identical weights.
"""

from __future__ import annotations

import logging
import random
from dataclasses import asdict, dataclass

import torch
from torch import nn

from .artifact import ModelArtifact, build_model
from .data import (
    NeuralDataError,
    m1_source,
    m1_target,
    m2_source,
    m2_target,
    m3_examples,
    read_annotated,
)
from .vocab import SymbolVocab

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrainConfig:
    layers: int = 2
    hidden: int = 256
    embed_dim: int = 64
    dropout: float = 0.3
    epochs: int = 100
    batch_size: int = 32
    lr: float = 1e-3
    seed: int = 0
    dev_fraction: float = 0.1
    patience: int = 10


def _pad_batch(seqs, pad_id):
    width = max(len(s) for s in seqs)
    return (
        torch.tensor([s + [pad_id] * (width - len(s)) for s in seqs], dtype=torch.long),
        torch.tensor([len(s) for s in seqs]),
    )


def _split_dev(examples, cfg, rng):
    n_dev = int(len(examples) * cfg.dev_fraction)
    if n_dev == 0:
        return examples, []
    shuffled = list(examples)
    rng.shuffle(shuffled)
    return shuffled[n_dev:], shuffled[:n_dev]


def _train_seq2seq(examples, vocab, cfg, model_type, extra_meta=None):
    """examples: (source tokens, target tokens) pairs, EOS appended here."""
    torch.manual_seed(cfg.seed)
    rng = random.Random(cfg.seed)
    encoded = [
        (
            vocab.encode(src, warn_unknown=False),
            vocab.encode(tgt, add_eos=True, warn_unknown=False),
        )
        for src, tgt in examples
    ]
    train_set, dev_set = _split_dev(encoded, cfg, rng)
    model = build_model(model_type, len(vocab), _model_config(cfg), vocab.pad_id)
    optimizer = torch.optim.Adam(model.parameters(), lr=cfg.lr)
    loss_fn = nn.CrossEntropyLoss(ignore_index=vocab.pad_id)

    def batch_loss(batch):
        srcs, tgts = zip(*batch)
        src, src_len = _pad_batch(list(srcs), vocab.pad_id)
        tgt_in = [[vocab.bos_id] + t[:-1] for t in tgts]
        tin, _ = _pad_batch(tgt_in, vocab.pad_id)
        tout, _ = _pad_batch(list(tgts), vocab.pad_id)
        logits = model(src, src_len, tin)
        return loss_fn(logits.reshape(-1, logits.shape[-1]), tout.reshape(-1))

    best_state = None
    best_dev = float("inf")
    stale = 0
    for epoch in range(cfg.epochs):
        model.train()
        order = list(range(len(train_set)))
        rng.shuffle(order)
        for start in range(0, len(order), cfg.batch_size):
            batch = [train_set[i] for i in order[start : start + cfg.batch_size]]
            optimizer.zero_grad()
            loss = batch_loss(batch)
            loss.backward()
            optimizer.step()
        if dev_set:
            model.eval()
            with torch.no_grad():
                dev_loss = float(batch_loss(dev_set))
            if dev_loss < best_dev - 1e-5:
                best_dev = dev_loss
                best_state = {k: v.clone() for k, v in model.state_dict().items()}
                stale = 0
            else:
                stale += 1
                if stale >= cfg.patience:
                    log.info("early stop at epoch %d (dev loss %.4f)", epoch, best_dev)
                    break
    if best_state is not None:
        model.load_state_dict(best_state)
    model.eval()
    meta = {**_model_config(cfg), "train_config": asdict(cfg)}
    if extra_meta:
        meta.update(extra_meta)
    return ModelArtifact(model_type=model_type, model=model, vocab=vocab, config=meta)


def _model_config(cfg: TrainConfig) -> dict:
    return {
        "layers": cfg.layers,
        "hidden": cfg.hidden,
        "embed_dim": cfg.embed_dim,
        "dropout": cfg.dropout,
    }


def train_m1(train_tsv, cfg: TrainConfig = TrainConfig()) -> ModelArtifact:
    """Sequence-to-sequence inflection: lemma + tag + BAP + FAP -> form."""
    rows = read_annotated(train_tsv)
    missing = sum(1 for r in rows if not r.bap)
    if missing:
        raise NeuralDataError(f"{missing} rows lack a BAP annotation")
    examples = [(m1_source(r), m1_target(r)) for r in rows]
    vocab = SymbolVocab.build([src for src, _ in examples] + [t for _, t in examples])
    return _train_seq2seq(examples, vocab, cfg, "m1")


def train_m2(train_tsv, cfg: TrainConfig = TrainConfig()) -> ModelArtifact:
    """Pattern prediction: lemma + tag -> second half of the FAP."""
    rows = read_annotated(train_tsv)
    usable = [r for r in rows if r.has_fap]
    skipped = len(rows) - len(usable)
    if skipped:
        log.warning("skipping %d rows without a FAP annotation", skipped)
    if not usable:
        raise NeuralDataError("no rows with FAP annotations")
    examples = [(m2_source(r), m2_target(r)) for r in usable]
    vocab = SymbolVocab.build([src for src, _ in examples] + [t for _, t in examples])
    return _train_seq2seq(
        examples, vocab, cfg, "m2", extra_meta={"skipped_rows": skipped}
    )


def train_m3(train_tsv, target_tag: str, cfg: TrainConfig = TrainConfig()) -> ModelArtifact:
    """Binary wordlikeness classifier for one target tag."""
    rows = read_annotated(train_tsv)
    examples = m3_examples(rows, target_tag)
    torch.manual_seed(cfg.seed)
    rng = random.Random(cfg.seed)
    vocab = SymbolVocab.build([form for form, _ in examples])
    encoded = [
        (vocab.encode(form, warn_unknown=False), float(label))
        for form, label in examples
    ]
    train_set, dev_set = _split_dev(encoded, cfg, rng)
    model = build_model("m3", len(vocab), _model_config(cfg), vocab.pad_id)
    optimizer = torch.optim.Adam(model.parameters(), lr=cfg.lr)
    loss_fn = nn.BCEWithLogitsLoss()

    def batch_loss(batch):
        seqs, labels = zip(*batch)
        src, src_len = _pad_batch(list(seqs), vocab.pad_id)
        return loss_fn(model(src, src_len), torch.tensor(labels))

    best_state = None
    best_dev = float("inf")
    stale = 0
    for epoch in range(cfg.epochs):
        model.train()
        order = list(range(len(train_set)))
        rng.shuffle(order)
        for start in range(0, len(order), cfg.batch_size):
            batch = [train_set[i] for i in order[start : start + cfg.batch_size]]
            optimizer.zero_grad()
            loss = batch_loss(batch)
            loss.backward()
            optimizer.step()
        if dev_set:
            model.eval()
            with torch.no_grad():
                dev_loss = float(batch_loss(dev_set))
            if dev_loss < best_dev - 1e-5:
                best_dev, stale = dev_loss, 0
                best_state = {k: v.clone() for k, v in model.state_dict().items()}
            else:
                stale += 1
                if stale >= cfg.patience:
                    break
    if best_state is not None:
        model.load_state_dict(best_state)
    model.eval()
    meta = {
        **_model_config(cfg),
        "train_config": asdict(cfg),
        "target_tag": target_tag,
    }
    return ModelArtifact(model_type="m3", model=model, vocab=vocab, config=meta)
