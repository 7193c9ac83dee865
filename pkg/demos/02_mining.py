"""Mine fine alternation patterns from a 19-row German mini-lexicon.

The interesting part: the broad pattern of (anʃpiːlən, anʃpiːlənt) is just
+/+t, which says nothing about the participle ending.  Mining the whole
lexicon finds the pattern pair that recurs across lexemes and selects
+ən/+ənt, the infinitive and present-participle exponents.

Run: python3 demos/02_mining.py
"""

from anamorph import (
    FormPair,
    LexEntry,
    bap,
    build_inventory,
    class_similar_forms,
    mine_faps,
    reorder_particle,
    tokenize,
)

ROWS = [
    ("anʃpiːlən", "ʃpiːlət an", "V;IND;PST;2;PL"),
    ("anʃpiːlən", "ʃpiːltə an", "V;SBJV;PST;1;SG"),
    ("anʃpiːlən", "ʃpiːlt an", "V;IMP;2;PL"),
    ("anʃpiːlən", "ʃpiːlə an", "V;IMP;2;SG"),
    ("anʃpiːlən", "anʃpiːləst", "V;SBJV;PST;2;SG"),
    ("anʃpiːlən", "anʃpiːlst", "V;IND;PRS;2;SG"),
    ("tariːfiːrən", "tariːfiːrənt", "V.PTCP;PRS"),
    ("tariːfiːrən", "tariːfiːrtən", "V;SBJV;PST;3;PL"),
    ("astən", "astənt", "V.PTCP;PRS"),
    ("astən", "astətət", "V;SBJV;PST;2;PL"),
    ("vaɪnən", "vaɪnənt", "V.PTCP;PRS"),
    ("vaɪnən", "vaɪnt", "V;IND;PRS;3;SG"),
    ("ʦɛrʃtraɪtən", "ʦɛrʃtraɪtənt", "V.PTCP;PRS"),
    ("ʦɛrʃtraɪtən", "ʦɛrʃtraɪtəst", "V;SBJV;PST;2;SG"),
    ("apzuːxən", "apɡəzuːxt", "V.PTCP;PST"),
    ("aplɔxən", "apɡəlɔxt", "V.PTCP;PST"),
    ("aprʏkən", "apɡərʏkt", "V.PTCP;PST"),
    ("apɡʊkən", "apɡəɡʊkt", "V.PTCP;PST"),
    ("anʃpiːlən", "anʃpiːlənt", "V.PTCP;PRS"),
]

print("== preprocessing ==")
print(f'separated particles move to the front: "ʃpiːlət an" -> '
      f'"{reorder_particle("ʃpiːlət an")}"\n')

reordered = [(reorder_particle(l), reorder_particle(f), t) for l, f, t in ROWS]
inv = build_inventory([s for l, f, _ in reordered for s in (l, f)])
entries = [
    LexEntry(lemma=tokenize(l, inv), form=tokenize(f, inv), tag=t)
    for l, f, t in reordered
]

result = mine_faps(entries)

print("== analogical series (classes keyed by broad pattern) ==")
for key, cls in result.index.items():
    col1 = ", ".join(sorted(inv.decode(f) for f in class_similar_forms(cls, 1)))
    print(f"{cls.bap.surface(inv):<18} pairs={len(cls.pairs):<3} column 1: {col1}")

print("\n== selected fine patterns ==")
for pair, a in sorted(
    result.assignments.items(), key=lambda kv: (kv[0].tag, inv.decode(kv[0].f1))
):
    print(
        f"{inv.decode(pair.f1):<14} {inv.decode(pair.f2):<16} {pair.tag:<18} "
        f"{a.fap.surface(inv)}  (score {a.score})"
    )

query = FormPair(
    f1=tokenize("anʃpiːlən", inv), f2=tokenize("anʃpiːlənt", inv), tag="V.PTCP;PRS"
)
print(
    f"\nbroad pattern of the query pair: "
    f"{bap(query.f1, query.f2).surface(inv)}"
)
print(f"fine pattern selected by mining:  {result.assignments[query].fap.surface(inv)}")
