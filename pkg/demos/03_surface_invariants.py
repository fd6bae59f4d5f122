#!/usr/bin/env python3
# Exact invariants of the plumbed surface and its boundary link, straight
# from the Seifert matrix determined by the tree.

import json

from hopfarb import (
    alexander,
    boundary_components,
    determinant,
    fingerprint,
    genus,
    parse,
    seifert_matrix,
    signature,
    smooth_defect_guarantee,
    top_defect_upper_bound,
)

# One Hopf band: an annulus with a full twist.  Its boundary is the Hopf
# link: two circles, linking number +-1, genus 0.
t = parse("+")
print("V('+') =", seifert_matrix(t).entries)
print("boundary components:", boundary_components(t), " genus:", genus(t))
print("Alexander:", alexander(t), " determinant:", determinant(t))

# Plumbing two positive bands gives the right-handed trefoil fibre; the
# sign convention is anchored by its signature +2.
for text, name in [("+(+)", "trefoil"), ("+(-)", "figure-eight"), ("-(-)", "mirror trefoil")]:
    s = parse(text)
    print(
        f"\n{text} ({name}): b={boundary_components(s)} g={genus(s)} "
        f"sigma={signature(s)} det={determinant(s)} Delta={alexander(s)}"
    )

# The full fingerprint bundles everything; it is the working stand-in
# for the boundary link's isotopy class.
print("\nfingerprint of +(+):", json.dumps(fingerprint(parse("+(+)")).to_json_obj()))

# Two different trees can bound the same link: +(-) and -(+) both give
# the figure-eight knot.
print("+(-) fingerprint == -(+) fingerprint:",
      fingerprint(parse("+(-)")) == fingerprint(parse("-(+)")))

# --- four-dimensional defect bounds -------------------------------------------

# For knots, half the signature bounds the topological 4-genus from
# below, so g - |sigma|/2 bounds the topological genus defect from above.
print("\ntop defect bound, trefoil:      ", top_defect_upper_bound(parse("+(+)")))
print("top defect bound, figure-eight:", top_defect_upper_bound(parse("+(-)")))

# When every band has the same sign the boundary is (a mirror of) a
# strongly quasipositive link: its smooth 4-genus equals its genus, so
# the smooth defect is exactly zero.
for text in ("+(+)", "-(-)", "+(-)"):
    print(f"smooth defect guaranteed zero for {text}:", smooth_defect_guarantee(parse(text)))
