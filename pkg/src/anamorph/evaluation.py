"""Score/judgment agreement: Pearson and Spearman correlation reports."""

from __future__ import annotations

from dataclasses import dataclass

from scipy import stats

from .errors import CorrelationError, EmptyJoinError


def _check_vectors(xs, ys):
    xs = [float(x) for x in xs]
    ys = [float(y) for y in ys]
    if len(xs) != len(ys):
        raise CorrelationError("vectors differ in length")
    if len(xs) < 2:
        raise CorrelationError("need at least two paired samples")
    if len(set(xs)) == 1 or len(set(ys)) == 1:
        raise CorrelationError("correlation undefined for zero-variance input")
    return xs, ys


def pearson(xs, ys) -> float:
    """Product-moment correlation of two equal-length vectors."""
    xs, ys = _check_vectors(xs, ys)
    return float(stats.pearsonr(xs, ys).statistic)


def spearman(xs, ys) -> float:
    """Pearson correlation over mid-ranks (average ranks on ties)."""
    xs, ys = _check_vectors(xs, ys)
    return float(stats.spearmanr(xs, ys).statistic)


@dataclass(frozen=True)
class PerLemma:
    lemma: str
    n: int
    pearson: float | None


@dataclass(frozen=True)
class EvalReport:
    n: int
    pearson: float
    spearman: float
    per_lemma: tuple[PerLemma, ...]
    unmatched: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pearson": self.pearson,
            "spearman": self.spearman,
            "per_lemma": [
                {"lemma": pl.lemma, "n": pl.n, "pearson": pl.pearson}
                for pl in self.per_lemma
            ],
            "unmatched": self.unmatched,
        }


def evaluate(scored_rows, judgments) -> EvalReport:
    """Inner-join scored rows with human ratings and correlate.

    `scored_rows` are (lemma, form, tag, score) surface tuples; `judgments`
    maps (lemma, form, tag) to a list of ratings.  When a key occurs several
    times, scores consume its ratings in file order; anything left unpaired
    on either side is counted, never silently dropped.  Within-lemma
    correlations are reported where defined (None otherwise).
    """
    remaining = {key: list(vals) for key, vals in judgments.items()}
    pairs = []  # (lemma, score, rating)
    unmatched_scores = 0
    for lemma, form, tag, score in scored_rows:
        queue = remaining.get((lemma, form, tag))
        if queue:
            pairs.append((lemma, float(score), queue.pop(0)))
        else:
            unmatched_scores += 1
    unmatched_ratings = sum(len(q) for q in remaining.values())
    if not pairs:
        raise EmptyJoinError("no scored row matches any judgment row")
    xs = [p[1] for p in pairs]
    ys = [p[2] for p in pairs]
    per_lemma = []
    by_lemma: dict[str, list[tuple[float, float]]] = {}
    for lemma, x, y in pairs:
        by_lemma.setdefault(lemma, []).append((x, y))
    for lemma in sorted(by_lemma):
        vals = by_lemma[lemma]
        try:
            r = pearson([v[0] for v in vals], [v[1] for v in vals])
        except CorrelationError:
            r = None
        per_lemma.append(PerLemma(lemma=lemma, n=len(vals), pearson=r))
    return EvalReport(
        n=len(pairs),
        pearson=pearson(xs, ys),
        spearman=spearman(xs, ys),
        per_lemma=tuple(per_lemma),
        unmatched=unmatched_scores + unmatched_ratings,
    )
