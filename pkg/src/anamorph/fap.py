"""Fine alternation pattern inference.

Per BAP class: harvest candidate word patterns from each column, pair them
across columns by analogical signature, screen by coverage, then pick the
best-scoring pattern pair for every form pair.  A pattern's score is the
number of form pairs, dataset-wide, whose relevant side it characterizes,
so the winning pair isolates the exponents that recur across the lexicon.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations

from .pattern import (
    AlternationPattern,
    WordPattern,
    ap_of_wps,
    commonality_pattern,
    generalizations,
    matches,
)
from .series import BapClass, FormPair, index_by_bap


@dataclass(frozen=True)
class WpCoverage:
    """A harvested word pattern with its column coverage.

    covered_forms counts distinct column forms the pattern matches,
    covered_pairs the class pairs whose relevant side it matches.
    """

    wp: WordPattern
    covered_forms: int
    covered_pairs: int


@dataclass(frozen=True)
class FapCandidate:
    p: WordPattern
    q: WordPattern
    pair_coverage: int
    p_form_coverage: int
    q_form_coverage: int
    score: int | None = None

    def render(self) -> str:
        return f"{self.p.render()}/{self.q.render()}"


@dataclass(frozen=True)
class FapAssignment:
    pair: FormPair
    fap: AlternationPattern
    score: int


@dataclass(frozen=True)
class FapConfig:
    """Screening thresholds and mining knobs, exported into run metadata."""

    min_pair_cov: int = 2
    min_form_cov: int = 2
    exact_var_count: int | None = 1
    min_pair_frac: float | None = None
    column_cap: int = 2000
    per_tag: bool = False


def column_wps(column, *, cap: int = 2000) -> list[WpCoverage]:
    """Candidate word patterns characterizing a column of similar forms.

    For every unordered pair of distinct forms, the commonality pattern and
    all its literal-block abstractions are collected (a pattern with no
    literal left is discarded).  Columns beyond `cap` distinct forms are
    truncated in canonical order for harvesting; coverage is still counted
    over the full column, and only patterns matching at least two distinct
    forms are kept.
    """
    weights = column if isinstance(column, Counter) else Counter(column)
    forms = sorted(weights)
    harvest = forms[:cap] if len(forms) > cap else forms
    wps: set[WordPattern] = set()
    for a, b in combinations(harvest, 2):
        for wp in generalizations(commonality_pattern(a, b)):
            if wp.literal_len > 0:
                wps.add(wp)
    out = []
    for wp in sorted(wps, key=WordPattern.render):
        matched = [f for f in forms if matches(wp, f) is not None]
        if len(matched) < 2:
            continue
        out.append(
            WpCoverage(
                wp=wp,
                covered_forms=len(matched),
                covered_pairs=sum(weights[f] for f in matched),
            )
        )
    return out


def align_wps(c: BapClass, wps1, wps2) -> list[FapCandidate]:
    """Pair column patterns whose analogical signature equals the class BAP."""
    out = []
    for w1 in wps1:
        for w2 in wps2:
            if w1.wp.var_count != w2.wp.var_count:
                continue
            if ap_of_wps(w1.wp, w2.wp) != c.bap:
                continue
            cov = sum(
                1
                for pair in c.pairs
                if matches(w1.wp, pair.f1) is not None
                and matches(w2.wp, pair.f2) is not None
            )
            out.append(
                FapCandidate(
                    p=w1.wp,
                    q=w2.wp,
                    pair_coverage=cov,
                    p_form_coverage=w1.covered_forms,
                    q_form_coverage=w2.covered_forms,
                )
            )
    out.sort(key=FapCandidate.render)
    return out


def screen_candidates(cands, cfg: FapConfig, *, class_size: int | None = None):
    """Drop candidates below the coverage thresholds or off the variable count."""
    min_pairs = cfg.min_pair_cov
    if cfg.min_pair_frac is not None and class_size:
        min_pairs = max(min_pairs, math.ceil(cfg.min_pair_frac * class_size))
    kept = []
    for c in cands:
        if c.pair_coverage < min_pairs:
            continue
        if c.p_form_coverage < cfg.min_form_cov or c.q_form_coverage < cfg.min_form_cov:
            continue
        if cfg.exact_var_count is not None and c.p.var_count != cfg.exact_var_count:
            continue
        kept.append(c)
    return kept


def select_fap(pair: FormPair, cands) -> FapAssignment | None:
    """The best-scoring candidate matching both of the pair's forms.

    Candidates must already carry their dataset-wide score.  Ties go to the
    larger total literal length, then the smaller canonical rendering.
    """
    best = None
    for c in cands:
        if c.score is None:
            raise ValueError("select_fap requires scored candidates")
        if matches(c.p, pair.f1) is None or matches(c.q, pair.f2) is None:
            continue
        if best is None:
            best = c
            continue
        key = (c.score, c.p.literal_len + c.q.literal_len)
        best_key = (best.score, best.p.literal_len + best.q.literal_len)
        if key > best_key or (key == best_key and c.render() < best.render()):
            best = c
    if best is None:
        return None
    return FapAssignment(
        pair=pair, fap=AlternationPattern(best.p, best.q), score=best.score
    )


@dataclass(frozen=True)
class MiningResult:
    assignments: dict
    index: dict
    class_candidates: dict
    config: FapConfig


def _count_matching(wp: WordPattern, form_counter: Counter) -> int:
    return sum(
        n for form, n in form_counter.items() if matches(wp, form) is not None
    )


def mine_faps(data, cfg: FapConfig = FapConfig(), *, workers: int | None = None) -> MiningResult:
    """Run the full FAP pipeline over the union dataset.

    Output is independent of the worker count: per-class work is pure and
    results are merged in canonical key order, and the dataset-wide pattern
    scores are computed in a single pass before selection.
    """
    index = index_by_bap(data, per_tag=cfg.per_tag)

    def class_candidates(key):
        c = index[key]
        wps1 = column_wps(c.col1, cap=cfg.column_cap)
        wps2 = column_wps(c.col2, cap=cfg.column_cap)
        if cfg.exact_var_count is not None:
            wps1 = [w for w in wps1 if w.wp.var_count == cfg.exact_var_count]
            wps2 = [w for w in wps2 if w.wp.var_count == cfg.exact_var_count]
        cands = align_wps(c, wps1, wps2)
        return key, screen_candidates(cands, cfg, class_size=len(c.pairs))

    keys = sorted(index)
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            screened = dict(pool.map(class_candidates, keys))
    else:
        screened = dict(class_candidates(k) for k in keys)

    # dataset-wide |X|: one counter per side over the distinct triples
    side1 = Counter()
    side2 = Counter()
    for c in index.values():
        for pair in c.pairs:
            side1[pair.f1] += 1
            side2[pair.f2] += 1
    memo1: dict[WordPattern, int] = {}
    memo2: dict[WordPattern, int] = {}
    scored: dict[str, tuple[FapCandidate, ...]] = {}
    for key in keys:
        cands = []
        for cand in screened[key]:
            if cand.p not in memo1:
                memo1[cand.p] = _count_matching(cand.p, side1)
            if cand.q not in memo2:
                memo2[cand.q] = _count_matching(cand.q, side2)
            cands.append(replace(cand, score=memo1[cand.p] + memo2[cand.q]))
        scored[key] = tuple(cands)

    assignments: dict[FormPair, FapAssignment] = {}
    for key in keys:
        cands = scored[key]
        if not cands:
            continue
        for pair in index[key].pairs:
            chosen = select_fap(pair, cands)
            if chosen is not None:
                assignments[pair] = chosen
    return MiningResult(
        assignments=assignments, index=index, class_candidates=scored, config=cfg
    )
