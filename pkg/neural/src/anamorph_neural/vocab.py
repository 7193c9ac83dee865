"""Symbol vocabulary shared by the sequence models.

Ids are assigned once at build time (specials first, then sorted symbols)
and persisted with the model artifact, so train and score runs agree.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass

log = logging.getLogger(__name__)

PAD = "<pad>"
BOS = "<bos>"
EOS = "<eos>"
UNK = "<unk>"
SEP = "<sep>"
SPECIALS = (PAD, BOS, EOS, UNK, SEP)


@dataclass(frozen=True)
class SymbolVocab:
    tokens: tuple[str, ...]
    index: dict[str, int]

    @classmethod
    def build(cls, sequences) -> "SymbolVocab":
        seen = set()
        for seq in sequences:
            seen.update(seq)
        tokens = SPECIALS + tuple(sorted(seen - set(SPECIALS)))
        return cls(tokens=tokens, index={t: i for i, t in enumerate(tokens)})

    def __len__(self):
        return len(self.tokens)

    @property
    def pad_id(self):
        return self.index[PAD]

    @property
    def bos_id(self):
        return self.index[BOS]

    @property
    def eos_id(self):
        return self.index[EOS]

    @property
    def sep_id(self):
        return self.index[SEP]

    def encode(self, tokens, *, add_eos=False, warn_unknown=True) -> list[int]:
        """Map tokens to ids; unseen tokens become UNK (with a warning)."""
        unk = self.index[UNK]
        out = []
        for tok in tokens:
            i = self.index.get(tok)
            if i is None:
                if warn_unknown:
                    log.warning("token %r not in vocabulary, using %s", tok, UNK)
                i = unk
            out.append(i)
        if add_eos:
            out.append(self.eos_id)
        return out

    def decode(self, ids) -> list[str]:
        return [self.tokens[i] for i in ids]

    def to_json(self) -> str:
        return json.dumps(list(self.tokens), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "SymbolVocab":
        tokens = tuple(json.loads(text))
        return cls(tokens=tokens, index={t: i for i, t in enumerate(tokens)})
