"""Model persistence: a directory with weights plus a JSON config sidecar."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import torch

from .models import Seq2Seq, SequenceClassifier
from .vocab import SymbolVocab

WEIGHTS = "weights.pt"
CONFIG = "config.json"


@dataclass
class ModelArtifact:
    model_type: str  # m1 | m2 | m3
    model: torch.nn.Module
    vocab: SymbolVocab
    config: dict

    def save(self, directory) -> None:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        torch.save(self.model.state_dict(), directory / WEIGHTS)
        sidecar = {
            "model_type": self.model_type,
            "config": self.config,
            "vocab": list(self.vocab.tokens),
        }
        (directory / CONFIG).write_text(
            json.dumps(sidecar, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )

    def weights_digest(self) -> str:
        """Hex digest of the serialized parameters (determinism checks)."""
        import hashlib

        h = hashlib.sha256()
        for name, tensor in sorted(self.model.state_dict().items()):
            h.update(name.encode())
            h.update(tensor.numpy().tobytes())
        return h.hexdigest()


def build_model(model_type: str, vocab_size: int, config: dict, pad_id: int):
    if model_type in ("m1", "m2"):
        return Seq2Seq(
            vocab_size,
            embed_dim=config["embed_dim"],
            hidden=config["hidden"],
            layers=config["layers"],
            dropout=config["dropout"],
            pad_id=pad_id,
        )
    if model_type == "m3":
        return SequenceClassifier(
            vocab_size,
            embed_dim=config["embed_dim"],
            hidden=config["hidden"],
            layers=config["layers"],
            dropout=config["dropout"],
            pad_id=pad_id,
        )
    raise ValueError(f"unknown model type {model_type!r}")


def load_artifact(directory) -> ModelArtifact:
    directory = Path(directory)
    sidecar = json.loads((directory / CONFIG).read_text(encoding="utf-8"))
    vocab = SymbolVocab.from_json(json.dumps(sidecar["vocab"]))
    model = build_model(
        sidecar["model_type"], len(vocab), sidecar["config"], vocab.pad_id
    )
    model.load_state_dict(torch.load(directory / WEIGHTS, weights_only=True))
    model.eval()
    return ModelArtifact(
        model_type=sidecar["model_type"],
        model=model,
        vocab=vocab,
        config=sidecar["config"],
    )
