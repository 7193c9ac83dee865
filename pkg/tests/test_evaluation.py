import math
import random

import pytest

from anamorph import evaluate, pearson, spearman
from anamorph.errors import CorrelationError, EmptyJoinError


class TestPearson:
    def test_perfect(self):
        assert pearson((1, 2, 3), (1, 2, 3)) == pytest.approx(1.0, abs=1e-12)

    def test_reversed(self):
        assert pearson((1, 2, 3), (3, 2, 1)) == pytest.approx(-1.0, abs=1e-12)

    def test_hand_computed(self):
        # deviations (-1.5,-.5,.5,1.5)/(-.5,-1.5,1.5,.5): cov 3, sd^2 5 each
        assert pearson((1, 2, 3, 4), (2, 1, 4, 3)) == pytest.approx(0.6, abs=1e-12)

    def test_zero_variance(self):
        with pytest.raises(CorrelationError):
            pearson((1, 1, 1), (1, 2, 3))

    def test_too_short(self):
        with pytest.raises(CorrelationError):
            pearson((1,), (2,))

    def test_affine_invariance_and_symmetry(self):
        rng = random.Random(43)
        xs = [rng.random() for _ in range(50)]
        ys = [rng.random() for _ in range(50)]
        base = pearson(xs, ys)
        scaled = pearson([3.5 * x + 2 for x in xs], ys)
        assert scaled == pytest.approx(base, abs=1e-12)
        assert pearson(ys, xs) == pytest.approx(base, abs=1e-12)


class TestSpearman:
    def test_monotone_transform(self):
        xs = (1, 2, 5, 9)
        assert spearman([math.exp(x) for x in xs], xs) == pytest.approx(1.0, abs=1e-12)

    def test_reversed(self):
        assert spearman((1, 2, 3, 4), (8, 6, 4, 2)) == pytest.approx(-1.0, abs=1e-12)

    def test_tie_midranks(self):
        # ranks (1, 2.5, 2.5, 4) vs (1, 2, 3, 4): r = 4.5 / sqrt(4.5 * 5)
        expected = 4.5 / math.sqrt(4.5 * 5.0)
        assert spearman((1, 2, 2, 4), (1, 2, 3, 4)) == pytest.approx(
            expected, abs=1e-12
        )

    def test_rank_only_dependence(self):
        xs = (0.1, 5.0, 2.2, 9.9)
        ys = (3, 1, 7, 2)
        assert spearman(xs, ys) == spearman((1, 3, 2, 4), ys)


class TestEvaluate:
    def test_perfect_self_correlation(self):
        scored = [("l1", "f1", "T", 1.0), ("l2", "f2", "T", 2.0), ("l3", "f3", "T", 4.0)]
        judgments = {(l, f, t): [s] for l, f, t, s in scored}
        report = evaluate(scored, judgments)
        assert report.n == 3
        assert report.pearson == pytest.approx(1.0, abs=1e-12)
        assert report.spearman == pytest.approx(1.0, abs=1e-12)
        assert report.unmatched == 0

    def test_disjoint_keys(self):
        with pytest.raises(EmptyJoinError):
            evaluate([("a", "b", "T", 1.0)], {("x", "y", "T"): [2.0]})

    def test_known_vectors(self):
        scored = [
            ("w1", "f", "T", 1.0),
            ("w2", "f", "T", 2.0),
            ("w3", "f", "T", 3.0),
            ("w4", "f", "T", 4.0),
        ]
        judgments = {
            ("w1", "f", "T"): [2.0],
            ("w2", "f", "T"): [1.0],
            ("w3", "f", "T"): [4.0],
            ("w4", "f", "T"): [3.0],
        }
        report = evaluate(scored, judgments)
        assert report.pearson == pytest.approx(0.6, abs=1e-12)

    def test_unmatched_counted_both_sides(self):
        scored = [("a", "f", "T", 1.0), ("b", "f", "T", 2.0), ("c", "f", "T", 3.0)]
        judgments = {
            ("a", "f", "T"): [1.0],
            ("b", "f", "T"): [2.0, 5.0],  # second rating unpaired
            ("z", "f", "T"): [9.0],
        }
        report = evaluate(scored, judgments)
        assert report.n == 2
        assert report.unmatched == 3  # "c" score + extra "b" rating + "z" rating

    def test_per_lemma_breakdown(self):
        scored = [
            ("w1", "a", "T", 1.0),
            ("w1", "b", "T", 2.0),
            ("w1", "c", "T", 3.0),
            ("w2", "a", "T", 5.0),
        ]
        judgments = {
            ("w1", "a", "T"): [1.0],
            ("w1", "b", "T"): [2.0],
            ("w1", "c", "T"): [2.5],
            ("w2", "a", "T"): [4.0],
        }
        report = evaluate(scored, judgments)
        by = {pl.lemma: pl for pl in report.per_lemma}
        assert by["w1"].n == 3
        assert by["w1"].pearson is not None
        assert by["w2"].n == 1
        assert by["w2"].pearson is None  # undefined for a single point

    def test_row_permutation_invariance(self):
        rng = random.Random(47)
        scored = [(f"w{i}", "f", "T", float(rng.randint(0, 9))) for i in range(20)]
        judgments = {
            (l, f, t): [float(rng.randint(0, 9))] for l, f, t, _ in scored
        }
        r1 = evaluate(scored, judgments)
        shuffled = list(scored)
        rng.shuffle(shuffled)
        r2 = evaluate(shuffled, judgments)
        assert r1.pearson == pytest.approx(r2.pearson, abs=1e-12)
        assert r1.spearman == pytest.approx(r2.spearman, abs=1e-12)

    def test_report_dict_fields(self):
        scored = [("a", "f", "T", 1.0), ("b", "f", "T", 2.0)]
        judgments = {("a", "f", "T"): [1.0], ("b", "f", "T"): [3.0]}
        d = evaluate(scored, judgments).to_dict()
        assert set(d) == {"n", "pearson", "spearman", "per_lemma", "unmatched"}
