"""LSTM sequence models: an encoder-decoder and a binary classifier.

The encoder is bidirectional; its final hidden states are projected and
used to initialize the decoder states.  Training uses teacher forcing; the
output layer produces a softmax distribution over symbols, so forced
decoding yields a proper joint probability for a given target sequence.
"""

from __future__ import annotations

import torch
from torch import nn
from torch.nn.utils.rnn import pack_padded_sequence, pad_packed_sequence


class Seq2Seq(nn.Module):
    def __init__(self, vocab_size, *, embed_dim=64, hidden=256, layers=2, dropout=0.3, pad_id=0):
        super().__init__()
        self.pad_id = pad_id
        self.embed = nn.Embedding(vocab_size, embed_dim, padding_idx=pad_id)
        self.encoder = nn.LSTM(
            embed_dim,
            hidden,
            num_layers=layers,
            batch_first=True,
            bidirectional=True,
            dropout=dropout if layers > 1 else 0.0,
        )
        self.bridge_h = nn.Linear(2 * hidden, hidden)
        self.bridge_c = nn.Linear(2 * hidden, hidden)
        self.decoder = nn.LSTM(
            embed_dim,
            hidden,
            num_layers=layers,
            batch_first=True,
            dropout=dropout if layers > 1 else 0.0,
        )
        self.out = nn.Linear(hidden, vocab_size)
        self.dropout = nn.Dropout(dropout)

    def encode(self, src, src_lengths):
        """Initial decoder states from the packed bidirectional encoding."""
        emb = self.dropout(self.embed(src))
        packed = pack_padded_sequence(
            emb, src_lengths.cpu(), batch_first=True, enforce_sorted=False
        )
        _, (h, c) = self.encoder(packed)
        layers = self.decoder.num_layers
        batch = src.shape[0]
        # (layers*2, batch, hidden) -> concat directions per layer
        h = h.view(layers, 2, batch, -1).permute(0, 2, 1, 3).reshape(layers, batch, -1)
        c = c.view(layers, 2, batch, -1).permute(0, 2, 1, 3).reshape(layers, batch, -1)
        return torch.tanh(self.bridge_h(h)), torch.tanh(self.bridge_c(c))

    def forward(self, src, src_lengths, tgt_in):
        """Teacher-forced logits: tgt_in is BOS + target[:-1]."""
        state = self.encode(src, src_lengths)
        emb = self.dropout(self.embed(tgt_in))
        dec, _ = self.decoder(emb, state)
        return self.out(self.dropout(dec))

    @torch.no_grad()
    def sequence_log_prob(self, src_ids, tgt_ids, bos_id):
        """Forced decoding: log of the joint probability of tgt_ids."""
        self.eval()
        src = torch.tensor([src_ids], dtype=torch.long)
        lengths = torch.tensor([len(src_ids)])
        tgt_in = torch.tensor([[bos_id] + tgt_ids[:-1]], dtype=torch.long)
        logits = self(src, lengths, tgt_in)
        logp = torch.log_softmax(logits, dim=-1)[0]
        steps = logp[torch.arange(len(tgt_ids)), torch.tensor(tgt_ids)]
        return float(steps.sum())

    @torch.no_grad()
    def decode_greedy(self, src_ids, bos_id, eos_id, *, max_len=64):
        """Symbol ids of the greedy decode, EOS excluded."""
        self.eval()
        src = torch.tensor([src_ids], dtype=torch.long)
        lengths = torch.tensor([len(src_ids)])
        state = self.encode(src, lengths)
        token = torch.tensor([[bos_id]], dtype=torch.long)
        out = []
        for _ in range(max_len):
            emb = self.embed(token)
            dec, state = self.decoder(emb, state)
            nxt = int(self.out(dec)[0, -1].argmax())
            if nxt == eos_id:
                break
            out.append(nxt)
            token = torch.tensor([[nxt]], dtype=torch.long)
        return out


class SequenceClassifier(nn.Module):
    """Bidirectional LSTM over a form, sigmoid probability of the target tag."""

    def __init__(self, vocab_size, *, embed_dim=64, hidden=128, layers=1, dropout=0.3, pad_id=0):
        super().__init__()
        self.pad_id = pad_id
        self.embed = nn.Embedding(vocab_size, embed_dim, padding_idx=pad_id)
        self.lstm = nn.LSTM(
            embed_dim,
            hidden,
            num_layers=layers,
            batch_first=True,
            bidirectional=True,
            dropout=dropout if layers > 1 else 0.0,
        )
        self.head = nn.Linear(2 * hidden, 1)
        self.dropout = nn.Dropout(dropout)

    def forward(self, src, src_lengths):
        emb = self.dropout(self.embed(src))
        packed = pack_padded_sequence(
            emb, src_lengths.cpu(), batch_first=True, enforce_sorted=False
        )
        _, (h, _) = self.lstm(packed)
        feats = torch.cat([h[-2], h[-1]], dim=-1)
        return self.head(self.dropout(feats)).squeeze(-1)

    @torch.no_grad()
    def probability(self, src_ids) -> float:
        self.eval()
        src = torch.tensor([src_ids], dtype=torch.long)
        lengths = torch.tensor([len(src_ids)])
        return float(torch.sigmoid(self(src, lengths)))
