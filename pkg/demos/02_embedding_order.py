#!/usr/bin/env python3
# The homeomorphic-embedding order on signed plane trees: the dynamic
# program, certificates, and the brute-force oracle it is checked against.

import json

from hopfarb import (
    embed_witness,
    embeds,
    operation_closure,
    oracle_embeds,
    parse,
    universe,
    verify_witness,
)

# T1 embeds into T2 when T1 is reachable from T2 by leaf deletions,
# single-child root removals and path contractions.  Signs and the
# left-to-right order of children must be respected throughout.

cases = [
    ("+", "+(+)"),        # delete a leaf
    ("+(+)", "+(-(+))"),  # contract through the minus vertex
    ("+(-)", "-(+)"),     # no reduction sequence exists
    ("+(+,-)", "+(-,+)"), # plane order blocks the swap
]
for sub, sup in cases:
    print(f"{sub:8} into {sup:10} -> {embeds(parse(sub), parse(sup))}")

# --- certificates ------------------------------------------------------------

# A positive answer comes with a witness: where each vertex lands, and
# the descending path realizing each edge.
t1, t2 = parse("+(+)"), parse("+(-(+))")
w = embed_witness(t1, t2)
print("\nwitness:", json.dumps(w.to_json_obj()))
print("verifies:", verify_witness(t1, t2, w))

# The root of T1 may land anywhere in T2; the extractor picks the
# preorder-first anchor, so the witness is deterministic.
print("anchor for '+' in '-(+)':", embed_witness(parse("+"), parse("-(+)")).vertex_map)

# --- the oracle --------------------------------------------------------------

# The closure of the reduction operations is small enough to enumerate
# for little trees; it is the ground truth the dynamic program must match.
closure = operation_closure(parse("+(-(+))"))
print("\neverything reachable from +(-(+)):", sorted(closure))

u3 = universe(3)
disagreements = sum(
    embeds(a, b) != oracle_embeds(a, b) for a in u3.trees for b in u3.trees
)
print(f"DP vs oracle on universe(3)^2: {disagreements} disagreements")

# Every embedding shrinks or preserves size, and same-size embeddings
# are equalities, so the order is a partial order up to isomorphism.
pairs = [(a, b) for a in u3.trees for b in u3.trees if embeds(a, b) and a != b]
print(f"strict relations within universe(3): {len(pairs)}")
