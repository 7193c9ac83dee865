import random

import pytest

from anamorph import (
    build_inventory,
    dataset_stats,
    load_dataset,
    merge_datasets,
    reorder_particle,
    tokenize,
)
from anamorph.errors import (
    EmptyDatasetError,
    InventoryError,
    ParticleError,
    RatingError,
    SchemaError,
    TokenizationError,
)


class TestBuildInventory:
    def test_length_mark_groups(self):
        inv = build_inventory(["yːbɐ"])
        assert set(inv.symbols) == {"yː", "b", "ɐ"}
        assert len(inv.remap) == 3

    def test_empty_corpus(self):
        inv = build_inventory([])
        assert inv.symbols == ()

    def test_repeated_symbol(self):
        inv = build_inventory(["aa"])
        assert inv.symbols == ("a",)
        assert len(tokenize("aa", inv)) == 2

    def test_tie_bar_binds_next_base(self):
        inv = build_inventory(["t͡sa"])
        assert set(inv.symbols) == {"t͡s", "a"}
        assert len(tokenize("t͡sa", inv)) == 2

    def test_remap_is_bijective(self):
        inv = build_inventory(["anʃpiːlən", "apɡəzuːxt", "yːbɐ"])
        assert len(set(inv.remap.values())) == len(inv.remap)
        for sym, code in inv.remap.items():
            assert len(code) == 1
            assert inv.inverse[code] == sym

    def test_reserved_characters_rejected(self):
        with pytest.raises(InventoryError):
            build_inventory(["a+b"])
        with pytest.raises(InventoryError):
            build_inventory(["a\x01"])


class TestTokenize:
    def test_eight_phonemes(self):
        inv = build_inventory(["anʃpiːlən"])
        seq = tokenize("anʃpiːlən", inv)
        assert len(seq) == 8
        assert inv.decode(seq) == "anʃpiːlən"

    def test_hand_segmentation(self):
        inv = build_inventory(["apɡəzuːxt"])
        # a p ɡ ə z uː x t
        assert len(tokenize("apɡəzuːxt", inv)) == 8

    def test_empty_form(self):
        inv = build_inventory(["a"])
        with pytest.raises(TokenizationError):
            tokenize("", inv)

    def test_unknown_symbol_named(self):
        inv = build_inventory(["ab"])
        with pytest.raises(TokenizationError) as exc:
            tokenize("axb", inv)
        assert exc.value.char == "x"
        assert exc.value.offset == 1

    def test_round_trip_random(self):
        rng = random.Random(7)
        symbols = ["a", "n", "ʃ", "p", "iː", "l", "ə", "yː", "ɐ", "t͡s"]
        forms = [
            "".join(rng.choice(symbols) for _ in range(rng.randint(1, 10)))
            for _ in range(300)
        ]
        inv = build_inventory(forms)
        for f in forms:
            assert inv.decode(tokenize(f, inv)) == f


class TestReorderParticle:
    def test_ueber_example(self):
        assert reorder_particle("vɛksələ yːbər") == "yːbərvɛksələ"

    def test_no_separator(self):
        assert reorder_particle("anʃpiːlən") == "anʃpiːlən"

    def test_multi_token(self):
        assert reorder_particle("a b c") == "cab"

    def test_only_separators(self):
        with pytest.raises(ParticleError):
            reorder_particle("   ")

    def test_idempotent(self):
        rng = random.Random(3)
        for _ in range(200):
            parts = [
                "".join(rng.choice("abc") for _ in range(rng.randint(1, 4)))
                for _ in range(rng.randint(1, 3))
            ]
            form = " ".join(parts)
            once = reorder_particle(form)
            assert reorder_particle(once) == once


def write_tsv(path, rows):
    path.write_text("\n".join("\t".join(r) for r in rows) + "\n", encoding="utf-8")


class TestLoadDataset:
    def test_three_columns(self, tmp_path):
        p = tmp_path / "train.tsv"
        write_tsv(p, [("ab", "abc", "T1"), ("cd", "cde", "T2")])
        ds, judgments = load_dataset(p)
        assert len(ds) == 2
        assert judgments is None

    def test_four_columns_judgments(self, tmp_path):
        p = tmp_path / "wug.tsv"
        write_tsv(p, [("ab", "abc", "T1", "3.5"), ("cd", "cde", "T2", "1.25")])
        ds, judgments = load_dataset(p, source_label="dev-wug")
        assert len(ds) == 2
        assert judgments == {("ab", "abc", "T1"): [3.5], ("cd", "cde", "T2"): [1.25]}

    def test_schema_error_line(self, tmp_path):
        p = tmp_path / "bad.tsv"
        p.write_text("a\tb\tT\na\tb\n", encoding="utf-8")
        with pytest.raises(SchemaError) as exc:
            load_dataset(p)
        assert exc.value.line == 2

    def test_empty_file(self, tmp_path):
        p = tmp_path / "empty.tsv"
        p.write_text("", encoding="utf-8")
        with pytest.raises(EmptyDatasetError):
            load_dataset(p)
        ds, _ = load_dataset(p, allow_empty=True)
        assert len(ds) == 0

    def test_bad_rating(self, tmp_path):
        p = tmp_path / "bad.tsv"
        write_tsv(p, [("a", "b", "T", "high")])
        with pytest.raises(RatingError):
            load_dataset(p)

    def test_permutation_invariance(self, tmp_path):
        rows = [("ba", "bab", "T2"), ("ab", "aba", "T1"), ("aa", "aab", "T1")]
        p1, p2 = tmp_path / "a.tsv", tmp_path / "b.tsv"
        write_tsv(p1, rows)
        write_tsv(p2, list(reversed(rows)))
        ds1, _ = load_dataset(p1)
        ds2, _ = load_dataset(p2)
        assert ds1 == ds2

    def test_particles_reordered_before_tokenizing(self, tmp_path):
        p = tmp_path / "sep.tsv"
        write_tsv(p, [("anʃpiːlən", "ʃpiːlət an", "T")])
        ds, _ = load_dataset(p)
        entry = ds.entries[0]
        assert ds.inventory.decode(entry.form) == "anʃpiːlət"

    def test_comment_lines_skipped(self, tmp_path):
        p = tmp_path / "c.tsv"
        p.write_text("# header\nab\tabc\tT\n\n", encoding="utf-8")
        ds, _ = load_dataset(p)
        assert len(ds) == 1

    def test_shared_inventory(self, tmp_path):
        p1, p2 = tmp_path / "a.tsv", tmp_path / "b.tsv"
        write_tsv(p1, [("ab", "abc", "T")])
        write_tsv(p2, [("cd", "cde", "T")])
        inv = build_inventory(["ab", "abc", "cd", "cde"])
        ds1, _ = load_dataset(p1, inventory=inv)
        ds2, _ = load_dataset(p2, inventory=inv, source_label="dev-attested")
        merged = merge_datasets(ds1, ds2)
        assert len(merged) == 2

    def test_inventory_miss_carries_line(self, tmp_path):
        p = tmp_path / "a.tsv"
        write_tsv(p, [("ab", "abc", "T"), ("zq", "zqq", "T")])
        inv = build_inventory(["ab", "abc"])
        with pytest.raises(TokenizationError) as exc:
            load_dataset(p, inventory=inv)
        assert exc.value.line == 2


class TestDatasetStats:
    def test_single_entry(self, tmp_path):
        p = tmp_path / "one.tsv"
        write_tsv(p, [("ab", "abc", "T")])
        ds, _ = load_dataset(p)
        stats = dataset_stats(ds)
        assert stats.entry_count == 1
        assert stats.tag_count == 1
        assert stats.syncretism_pct == 0.0

    def test_full_syncretism(self, tmp_path):
        p = tmp_path / "syn.tsv"
        write_tsv(p, [("ab", "abc", "T1"), ("ab", "abc", "T2")])
        ds, _ = load_dataset(p)
        stats = dataset_stats(ds)
        assert stats.entry_count == 2
        assert stats.syncretism_pct == 100.0

    def test_counts(self, tmp_path):
        p = tmp_path / "x.tsv"
        write_tsv(
            p,
            [
                ("ab", "abc", "T1"),
                ("ab", "abd", "T2"),
                ("cd", "cdc", "T1"),
                ("cd", "cdc", "T2"),
            ],
        )
        ds, _ = load_dataset(p)
        stats = dataset_stats(ds)
        assert stats.entry_count == 4
        assert stats.phoneme_count == 4  # a b c d
        assert stats.tag_count == 2
        # 3 distinct (lemma, form) pairs, 1 syncretic
        assert stats.syncretism_pct == pytest.approx(100.0 / 3)
