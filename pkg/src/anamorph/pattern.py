"""Word patterns and alternation patterns.

A word pattern (WP) interleaves literal phoneme segments with variable
slots, rendered '+'.  An alternation pattern (AP) pairs two WPs whose
variables co-refer by position; the broad alternation pattern (BAP) of two
forms abstracts their matching blocks, its dual (the commonality pattern)
abstracts their differences.

Patterns are compared structurally, not by rendered string: when WPs are
themselves aligned as symbol sequences ('+' treated as an ordinary symbol,
see ap_of_wps) a literal '+' must not be confused with a variable slot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .align import matching_blocks
from .errors import ArityError, GuardError


class _Var:
    """Singleton marker for a variable slot."""

    __slots__ = ()

    def __repr__(self):
        return "+"


VAR = _Var()

# Rendered variable symbol; phoneme inventories may never map anything to it.
VAR_SYMBOL = "+"


def _fuse(parts):
    """Normalize a part list: drop empty literals, fuse adjacent literals."""
    out: list = []
    for part in parts:
        if part is VAR:
            out.append(VAR)
        elif part:
            if out and out[-1] is not VAR:
                out[-1] += part
            else:
                out.append(part)
    return tuple(out)


@dataclass(frozen=True)
class WordPattern:
    elements: tuple

    @classmethod
    def of(cls, *parts) -> "WordPattern":
        return cls(_fuse(parts))

    @classmethod
    def from_parts(cls, parts) -> "WordPattern":
        return cls(_fuse(parts))

    @classmethod
    def from_string(cls, s: str) -> "WordPattern":
        """Parse an internal-code string in which '+' marks a variable."""
        parts: list = []
        for ch in s:
            parts.append(VAR if ch == VAR_SYMBOL else ch)
        return cls(_fuse(parts))

    @property
    def var_count(self) -> int:
        return sum(1 for e in self.elements if e is VAR)

    @property
    def literal_len(self) -> int:
        return sum(len(e) for e in self.elements if e is not VAR)

    def render(self) -> str:
        """Canonical form over internal codes, '+' for each variable."""
        return "".join(VAR_SYMBOL if e is VAR else e for e in self.elements)

    def surface(self, inventory) -> str:
        return "".join(
            VAR_SYMBOL if e is VAR else inventory.decode(e) for e in self.elements
        )

    def as_symbols(self) -> str:
        """The pattern as a plain symbol sequence ('+' an ordinary symbol)."""
        return self.render()


@dataclass(frozen=True)
class AlternationPattern:
    wp1: WordPattern
    wp2: WordPattern

    def __post_init__(self):
        if self.wp1.var_count != self.wp2.var_count:
            raise ArityError(
                "alternation sides must have equal variable counts: "
                f"{self.wp1.render()!r} / {self.wp2.render()!r}"
            )

    @property
    def var_count(self) -> int:
        return self.wp1.var_count

    def render(self) -> str:
        return f"{self.wp1.render()}/{self.wp2.render()}"

    def surface(self, inventory) -> str:
        return f"{self.wp1.surface(inventory)}/{self.wp2.surface(inventory)}"


def _pair_patterns(f1: str, f2: str, blocks) -> AlternationPattern:
    parts1: list = []
    parts2: list = []
    end1 = end2 = 0
    for b in blocks:
        parts1.append(f1[end1 : b.i])
        parts2.append(f2[end2 : b.j])
        parts1.append(VAR)
        parts2.append(VAR)
        end1, end2 = b.i + b.size, b.j + b.size
    parts1.append(f1[end1:])
    parts2.append(f2[end2:])
    return AlternationPattern(
        WordPattern.from_parts(parts1), WordPattern.from_parts(parts2)
    )


def bap(f1: str, f2: str) -> AlternationPattern:
    """Broad alternation pattern: matching blocks become co-indexed variables.

    Disjoint forms yield the trivial AP (both sides fully literal).
    """
    return _pair_patterns(f1, f2, matching_blocks(f1, f2))


def bap_bindings(f1: str, f2: str):
    """The BAP of (f1, f2) together with its block contents as bindings."""
    blocks = matching_blocks(f1, f2)
    return _pair_patterns(f1, f2, blocks), tuple(
        f1[b.i : b.i + b.size] for b in blocks
    )


def commonality_pattern(f1: str, f2: str) -> WordPattern:
    """The dual of the BAP: shared blocks stay literal, each gap becomes one variable."""
    parts: list = []
    end1 = end2 = 0
    for b in matching_blocks(f1, f2):
        if b.i > end1 or b.j > end2:
            parts.append(VAR)
        parts.append(f1[b.i : b.i + b.size])
        end1, end2 = b.i + b.size, b.j + b.size
    if end1 < len(f1) or end2 < len(f2):
        parts.append(VAR)
    return WordPattern.from_parts(parts)


@lru_cache(maxsize=65536)
def _compiled(elements: tuple):
    body = "".join("(.+)" if e is VAR else re.escape(e) for e in elements)
    return re.compile(body)


def matches(wp: WordPattern, form: str):
    """Decompose `form` per `wp`, or None.

    Every variable must bind a non-empty segment.  Among multiple feasible
    decompositions the greedy one is chosen: the first variable takes the
    longest feasible segment, then the second, and so on.  A variable-free
    pattern that equals the form yields the empty binding tuple, so callers
    must test ``is not None``.
    """
    m = _compiled(wp.elements).fullmatch(form)
    if m is None:
        return None
    return m.groups()


def instantiate(wp: WordPattern, bindings) -> str:
    """Splice bound segments into the variable slots, in order."""
    bindings = tuple(bindings)
    if len(bindings) != wp.var_count:
        raise ArityError(
            f"pattern has {wp.var_count} variables, got {len(bindings)} bindings"
        )
    if any(not b for b in bindings):
        raise ArityError("variable bindings must be non-empty")
    out = []
    it = iter(bindings)
    for e in wp.elements:
        out.append(next(it) if e is VAR else e)
    return "".join(out)


def enumerate_aps(f1: str, f2: str, *, max_shared: int = 20) -> set[AlternationPattern]:
    """All alternation patterns obtained by abstracting any subset of the
    aligned shared positions.

    Runs of abstracted adjacent positions inside one block merge into a
    single variable; the empty subset is the trivial AP and the full subset
    is the BAP.
    """
    blocks = matching_blocks(f1, f2)
    shared = sum(b.size for b in blocks)
    if shared > max_shared:
        raise GuardError(f"{shared} shared positions exceed the bound {max_shared}")
    out: set[AlternationPattern] = set()
    for mask in range(1 << shared):
        parts1: list = []
        parts2: list = []
        end1 = end2 = 0
        pos = 0
        for b in blocks:
            parts1.append(f1[end1 : b.i])
            parts2.append(f2[end2 : b.j])
            in_run = False
            for t in range(b.size):
                if mask >> (pos + t) & 1:
                    if not in_run:
                        parts1.append(VAR)
                        parts2.append(VAR)
                        in_run = True
                else:
                    tok = f1[b.i + t]
                    parts1.append(tok)
                    parts2.append(tok)
                    in_run = False
            pos += b.size
            end1, end2 = b.i + b.size, b.j + b.size
        parts1.append(f1[end1:])
        parts2.append(f2[end2:])
        out.add(
            AlternationPattern(
                WordPattern.from_parts(parts1), WordPattern.from_parts(parts2)
            )
        )
    return out


def is_formal_analogy(f1: str, f2: str, f3: str, f4: str) -> bool:
    """f1:f2 :: f3:f4 holds iff both pairs have the same BAP."""
    return bap(f1, f2) == bap(f3, f4)


def ap_of_wps(p: WordPattern, q: WordPattern) -> AlternationPattern:
    """Align two WPs as if they were word-forms ('+' an ordinary symbol).

    The result is the analogical signature used to pair column patterns;
    its literals may therefore contain '+' symbols, which structural
    equality keeps distinct from variable slots.
    """
    return _pair_patterns(p.as_symbols(), q.as_symbols(),
                          matching_blocks(p.as_symbols(), q.as_symbols()))


def generalizations(wp: WordPattern) -> set[WordPattern]:
    """The pattern itself plus every abstraction of its literal blocks.

    Abstracting a block replaces it with a variable and collapses the
    resulting run of adjacent variables into one; the fully abstracted bare
    variable is excluded (a pattern must retain some literal material).
    """
    lit_idx = [i for i, e in enumerate(wp.elements) if e is not VAR]
    out: set[WordPattern] = set()
    full = (1 << len(lit_idx)) - 1
    for mask in range(1 << len(lit_idx)):
        if lit_idx and mask == full:
            continue
        drop = {lit_idx[k] for k in range(len(lit_idx)) if mask >> k & 1}
        parts: list = []
        for i, e in enumerate(wp.elements):
            if e is VAR or i in drop:
                if not (parts and parts[-1] is VAR):
                    parts.append(VAR)
            else:
                parts.append(e)
        out.add(WordPattern.from_parts(parts))
    return out
