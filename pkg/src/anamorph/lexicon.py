"""Inflectional lexicon loading, tokenization and summary statistics.

Word-forms are stored internally as strings of single code points, one per
phoneme: every multigraph symbol (length mark, tie bar, diacritic clusters)
is remapped to a private-use code point so that downstream alignment and
pattern code can treat a form as a flat symbol sequence.  The mapping is a
bijection, so decoding is exact.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    EmptyDatasetError,
    InventoryError,
    ParticleError,
    RatingError,
    SchemaError,
    TokenizationError,
)

# '+' and '/' are reserved for pattern rendering; tab/newline delimit records.
RESERVED_CHARS = frozenset("+/\t\n\r")

# Length mark, tie bars (above/below) and the non-syllabicity diacritic glue
# onto the preceding base character when grouping multigraph phonemes.
DEFAULT_MODIFIERS = frozenset("ː̯͜͡")

# Tie bars additionally bind the *following* base character (affricates).
TIE_BARS = frozenset("͜͡")

DEFAULT_SEPARATORS = frozenset(" ")

_PUA_START = 0xE000


@dataclass(frozen=True)
class PhonemeInventory:
    """Bijective mapping between surface phoneme symbols and internal codes."""

    symbols: tuple[str, ...]
    remap: dict[str, str]
    inverse: dict[str, str] = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, PhonemeInventory):
            return NotImplemented
        return self.symbols == other.symbols and self.remap == other.remap

    def __hash__(self):
        return hash(self.symbols)

    def decode(self, seq: str) -> str:
        """Map an internal phoneme sequence back to its surface IPA string."""
        return "".join(self.inverse[code] for code in seq)

    @property
    def max_symbol_len(self) -> int:
        return max((len(s) for s in self.symbols), default=1)


def segment_symbols(raw: str, modifier_set=DEFAULT_MODIFIERS):
    """Split a raw IPA string into multigraph symbols.

    Each symbol is one base character plus any immediately following modifier
    characters; a tie bar also binds the next base character (so affricates
    like t͡s come out as one symbol).
    """
    symbols = []
    i = 0
    n = len(raw)
    while i < n:
        start = i
        i += 1
        while True:
            tie = False
            while i < n and raw[i] in modifier_set:
                tie = raw[i] in TIE_BARS
                i += 1
            if tie and i < n:
                i += 1  # base character bound by the tie bar
                continue
            break
        symbols.append(raw[start:i])
    return symbols


def _check_symbol(sym: str, line=None):
    for ch in sym:
        if ch in RESERVED_CHARS or unicodedata.category(ch) == "Cc":
            raise InventoryError(
                f"unmappable character {ch!r} in symbol {sym!r}"
                + (f" (line {line})" if line is not None else "")
            )


def build_inventory(raw_forms, modifier_set=DEFAULT_MODIFIERS) -> PhonemeInventory:
    """Collect the multigraph symbols of a corpus and assign internal codes.

    Single-character symbols map to themselves; longer symbols get
    private-use code points in sorted order, which makes code assignment
    deterministic for a given corpus.
    """
    seen = set()
    for lineno, form in enumerate(raw_forms, start=1):
        for sym in segment_symbols(form, modifier_set):
            if sym not in seen:
                _check_symbol(sym, line=lineno)
                seen.add(sym)
    symbols = tuple(sorted(seen))
    single = {s for s in symbols if len(s) == 1}
    remap = {}
    next_code = _PUA_START
    for sym in symbols:
        if len(sym) == 1:
            remap[sym] = sym
        else:
            while chr(next_code) in single:
                next_code += 1
            remap[sym] = chr(next_code)
            next_code += 1
    inverse = {code: sym for sym, code in remap.items()}
    return PhonemeInventory(symbols=symbols, remap=remap, inverse=inverse)


def tokenize(raw: str, inv: PhonemeInventory) -> str:
    """Encode a raw IPA string as internal phoneme codes.

    Greedy longest-match segmentation over the inventory symbols; decoding
    the result reproduces `raw` exactly.
    """
    if not raw:
        raise TokenizationError("empty form")
    out = []
    i = 0
    n = len(raw)
    max_len = inv.max_symbol_len
    while i < n:
        for length in range(min(max_len, n - i), 0, -1):
            sym = raw[i : i + length]
            code = inv.remap.get(sym)
            if code is not None:
                out.append(code)
                i += length
                break
        else:
            raise TokenizationError("symbol not in inventory", char=raw[i], offset=i)
    return "".join(out)


def reorder_particle(form: str, separators=DEFAULT_SEPARATORS) -> str:
    """Move a separated trailing particle to the front of the form.

    "vɛksələ yːbər" becomes "yːbərvɛksələ"; forms without a separator are
    returned unchanged.  All separator characters are dropped.
    """
    if not any(sep in form for sep in separators):
        return form
    pattern = "[" + re.escape("".join(sorted(separators))) + "]+"
    parts = [p for p in re.split(pattern, form) if p]
    if not parts:
        raise ParticleError(f"form {form!r} consists only of separators")
    if len(parts) == 1:
        return parts[0]
    return parts[-1] + "".join(parts[:-1])


@dataclass(frozen=True)
class LexEntry:
    """One dataset row: lemma and inflected form as internal phoneme codes."""

    lemma: str
    form: str
    tag: str
    source: str = "train"
    ordinal: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Dataset:
    """An immutable, canonically sorted collection of lexicon entries."""

    entries: tuple[LexEntry, ...]
    inventory: PhonemeInventory
    language: str = ""

    def __len__(self):
        return len(self.entries)

    def surface(self, entry: LexEntry) -> tuple[str, str, str]:
        inv = self.inventory
        return inv.decode(entry.lemma), inv.decode(entry.form), entry.tag


@dataclass(frozen=True)
class DatasetStats:
    entry_count: int
    phoneme_count: int
    tag_count: int
    syncretism_pct: float


DEFAULT_SCHEMA = ("lemma", "form", "tag")
RATED_SCHEMA = ("lemma", "form", "tag", "rating")


def _canonical_sort(preprocessed):
    # (lemma, tag, form) over the preprocessed surface strings: load order
    # never influences mining.
    return sorted(preprocessed, key=lambda row: (row[0], row[2], row[1]))


def _parse_rows(path, column_schema, separators):
    """Parse and preprocess TSV rows; returns (rows, schema).

    Rows are (lemma, form, tag, rating, lineno) with particle reordering
    already applied.  Lines starting with '#' and blank lines are skipped.
    """
    text = Path(path).read_text(encoding="utf-8")
    rows = []
    schema = tuple(column_schema) if column_schema else None
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if schema is None:
            schema = RATED_SCHEMA if len(cols) == 4 else DEFAULT_SCHEMA
        if len(cols) != len(schema):
            raise SchemaError(
                f"expected {len(schema)} columns, found {len(cols)}", line=lineno
            )
        named = dict(zip(schema, cols))
        if not named.get("tag"):
            raise SchemaError("empty tag", line=lineno)
        rating = None
        if "rating" in named:
            try:
                rating = float(named["rating"])
            except ValueError:
                raise RatingError(
                    f"line {lineno}: rating {named['rating']!r} is not a number"
                ) from None
        try:
            lemma = reorder_particle(named["lemma"], separators)
            form = reorder_particle(named["form"], separators)
        except ParticleError as exc:
            raise ParticleError(f"line {lineno}: {exc}") from None
        rows.append((lemma, form, named["tag"], rating, lineno))
    return rows, schema


def read_surfaces(path, column_schema=None, *, separators=DEFAULT_SEPARATORS):
    """All preprocessed lemma and form surface strings of a file."""
    rows, _ = _parse_rows(path, column_schema, separators)
    return [r[0] for r in rows] + [r[1] for r in rows]


def load_dataset(
    path,
    column_schema=None,
    source_label="train",
    *,
    inventory: PhonemeInventory | None = None,
    modifier_set=DEFAULT_MODIFIERS,
    separators=DEFAULT_SEPARATORS,
    language="",
    allow_empty=False,
):
    """Load a TSV lexicon file.

    Returns ``(dataset, judgments)`` where judgments maps the preprocessed
    (lemma, form, tag) surface triple to the list of ratings found for it,
    or None when the schema carries no rating column.
    """
    path = Path(path)
    rows, schema = _parse_rows(path, column_schema, separators)
    if not rows and not allow_empty:
        raise EmptyDatasetError(f"{path}: no data rows")

    if inventory is None:
        surfaces = [r[0] for r in rows] + [r[1] for r in rows]
        inventory = build_inventory(surfaces, modifier_set)

    has_ratings = schema is not None and "rating" in schema
    judgments: dict[tuple[str, str, str], list[float]] | None = (
        {} if has_ratings else None
    )
    if judgments is not None:
        for lemma, form, tag, rating, _ in rows:
            judgments.setdefault((lemma, form, tag), []).append(rating)

    entries = []
    for lemma, form, tag, _, lineno in _canonical_sort(rows):
        try:
            lemma_seq = tokenize(lemma, inventory)
            form_seq = tokenize(form, inventory)
        except TokenizationError as exc:
            raise TokenizationError(str(exc), line=lineno) from None
        entries.append((lemma, tag, form, lemma_seq, form_seq, lineno))

    # ordinals record the original file row so scoring can preserve input order
    by_line = {lineno: rank for rank, (_, _, _, _, lineno) in enumerate(rows)}
    final = tuple(
        LexEntry(
            lemma=lemma_seq,
            form=form_seq,
            tag=tag,
            source=source_label,
            ordinal=by_line[lineno],
        )
        for (_, tag, _, lemma_seq, form_seq, lineno) in entries
    )
    dataset = Dataset(entries=final, inventory=inventory, language=language)
    return dataset, judgments


def merge_datasets(*datasets: Dataset, language="") -> Dataset:
    """Union several datasets sharing one inventory into a single Dataset."""
    if not datasets:
        raise ValueError("nothing to merge")
    inv = datasets[0].inventory
    for d in datasets[1:]:
        if d.inventory != inv:
            raise ValueError("datasets do not share an inventory")
    entries = [e for d in datasets for e in d.entries]
    entries.sort(key=lambda e: (inv.decode(e.lemma), e.tag, inv.decode(e.form)))
    return Dataset(
        entries=tuple(entries),
        inventory=inv,
        language=language or datasets[0].language,
    )


def dataset_stats(d: Dataset) -> DatasetStats:
    """Entry/phoneme/tag counts plus the share of syncretic (lemma, form) pairs."""
    tags = {e.tag for e in d.entries}
    per_pair: dict[tuple[str, str], set[str]] = {}
    for e in d.entries:
        per_pair.setdefault((e.lemma, e.form), set()).add(e.tag)
    if per_pair:
        syncretic = sum(1 for ts in per_pair.values() if len(ts) >= 2)
        pct = 100.0 * syncretic / len(per_pair)
    else:
        pct = 0.0
    return DatasetStats(
        entry_count=len(d.entries),
        phoneme_count=len(d.inventory.symbols),
        tag_count=len(tags),
        syncretism_pct=pct,
    )
