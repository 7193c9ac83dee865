"""Walk through the pattern algebra on a handful of German verb forms.

Run: python3 demos/01_patterns.py
"""

from anamorph import (
    bap,
    build_inventory,
    commonality_pattern,
    enumerate_aps,
    instantiate,
    is_formal_analogy,
    matches,
    tokenize,
)

FORMS = [
    "aptaɪlən",   # to divide off (infinitive)
    "apɡətaɪlt",  # divided off (past participle)
    "anʃpiːlən",  # to allude to
    "anʃpiːlənt", # alluding
    "apɡəzuːxt",
    "apɡəlɔxt",
]

inv = build_inventory(FORMS)
t = lambda s: tokenize(s, inv)

print("== broad alternation pattern ==")
ap = bap(t("aptaɪlən"), t("apɡətaɪlt"))
print(f"aptaɪlən / apɡətaɪlt  ->  {ap.surface(inv)}")
print("The two matching blocks (ap, taɪl) became co-indexed variables;")
print("the ɡə infix and the ən/t endings stayed literal.\n")

print("== instantiation round-trip ==")
bindings = matches(ap.wp2, t("apɡətaɪlt"))
print(f"bindings of {ap.wp2.surface(inv)} on apɡətaɪlt: "
      f"{tuple(inv.decode(b) for b in bindings)}")
print(f"re-instantiated: {inv.decode(instantiate(ap.wp2, bindings))}\n")

print("== the dual: what two forms share ==")
wp = commonality_pattern(t("apɡəzuːxt"), t("apɡəlɔxt"))
print(f"apɡəzuːxt ~ apɡəlɔxt  ->  {wp.surface(inv)}\n")

print("== every abstraction of a pair ==")
aps = enumerate_aps(t("anʃpiːlən"), t("anʃpiːlənt"))
print(f"anʃpiːlən / anʃpiːlənt admits {len(aps)} = 2^8 alternation patterns,")
print("from the fully literal pair down to the maximally abstracted one:")
for s in sorted(ap.surface(inv) for ap in aps)[:6]:
    print("   ", s)
print("    ...\n")

print("== formal analogy ==")
ok = is_formal_analogy(t("apɡəzuːxt"), t("apɡəlɔxt"), t("apɡəzuːxt"), t("apɡəlɔxt"))
print(f"reflexive check: {ok}")
