import random

import pytest
import sympy

from hopfarb.embedding import embeds
from hopfarb.invariants import (
    Fingerprint,
    LaurentPolynomial,
    SeifertMatrix,
    _rank_int,
    _sym_part,
    alexander,
    betti,
    boundary_components,
    determinant,
    fingerprint,
    fingerprint_of_matrix,
    genus,
    nullity,
    seifert_matrix,
    signature,
    smooth_defect_guarantee,
    top_defect_upper_bound,
)
from hopfarb.trees import enumerate_trees, parse, random_tree


# --- independent oracles -----------------------------------------------------


def sympy_alexander(m: SeifertMatrix):
    """Symbolic det(V - t V^T), normalized the same way: an independent route."""
    t = sympy.Symbol("t")
    n = m.size
    e = m.entries
    mat = sympy.Matrix(n, n, lambda i, j: e[i][j] - t * e[j][i])
    poly = sympy.Poly(sympy.expand(mat.det()), t)
    coeffs = poly.all_coeffs()[::-1]  # ascending
    lo = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        lo += 1
    if not coeffs:
        return LaurentPolynomial(0, ())
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return LaurentPolynomial(0, tuple(int(c) for c in coeffs))


def tree_matching_number(t):
    """Maximum matching of a tree by the greedy leaf rule (optimal on forests)."""
    order = sorted(range(t.size), key=t.depth, reverse=True)
    matched = [False] * t.size
    size = 0
    for v in order:
        p = t.parents[v]
        if p is not None and not matched[v] and not matched[p]:
            matched[v] = matched[p] = True
            size += 1
    return size


# --- Seifert matrix ----------------------------------------------------------


def test_seifert_matrix_frozen_values():
    assert seifert_matrix(parse("+")).entries == ((1,),)
    assert seifert_matrix(parse("+(+)")).entries == ((1, 1), (0, 1))
    assert seifert_matrix(parse("+(-)")).entries == ((1, 1), (0, -1))
    assert seifert_matrix(parse("+(+,-)")).entries == (
        (1, 1, 1),
        (0, 1, 0),
        (0, 0, -1),
    )


def test_seifert_matrix_dimension_is_betti(u4):
    for t in u4.trees:
        assert seifert_matrix(t).size == betti(t) == t.size


def test_seifert_matrix_validation():
    with pytest.raises(ValueError):
        SeifertMatrix(((0,),))  # diagonal must be +-1
    with pytest.raises(ValueError):
        SeifertMatrix(((1, 1), (1, 1)))  # both symmetric slots nonzero
    with pytest.raises(ValueError):
        SeifertMatrix(((1, 2), (0, 1)))  # off-diagonal must be a unit
    with pytest.raises(ValueError):
        SeifertMatrix(((1, 0), (0, 1)))  # missing edge
    # Right edge count but cyclic support (triangle plus isolated vertex).
    cyc = (
        (1, 1, 1, 0),
        (0, 1, 1, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    )
    with pytest.raises(ValueError):
        SeifertMatrix(cyc)


# --- Laurent polynomials -----------------------------------------------------


def test_laurent_trimming_and_zero():
    p = LaurentPolynomial.from_coeffs(-2, [0, 1, 0, -3, 0])
    assert (p.lowest, p.coeffs) == (-1, (1, 0, -3))
    z = LaurentPolynomial.from_coeffs(5, [0, 0])
    assert z.is_zero and z.lowest == 0
    with pytest.raises(ValueError):
        LaurentPolynomial(0, (0, 1))
    with pytest.raises(ValueError):
        LaurentPolynomial(1, ())


def test_laurent_str_descending():
    assert str(LaurentPolynomial(0, (1, -3, 1))) == "t^2 - 3*t + 1"
    assert str(LaurentPolynomial(0, (-1, 1))) == "t - 1"
    assert str(LaurentPolynomial(0, (2,))) == "2"
    assert str(LaurentPolynomial(1, (1,))) == "t"
    assert str(LaurentPolynomial(-1, (1, 1))) == "1 + t^-1"
    assert str(LaurentPolynomial(0, ())) == "0"


def test_laurent_evaluate():
    p = LaurentPolynomial(0, (1, -3, 1))
    assert p.evaluate(-1) == 5
    assert p.evaluate(1) == -1
    q = LaurentPolynomial(-1, (1, 1))
    from fractions import Fraction

    assert q.evaluate(2) == Fraction(3, 2)


def test_laurent_normalized():
    assert LaurentPolynomial(3, (1, -1)).normalized() == LaurentPolynomial(0, (-1, 1))
    assert LaurentPolynomial(0, (1, -1)).normalized() == LaurentPolynomial(0, (-1, 1))
    z = LaurentPolynomial(0, ())
    assert z.normalized() is z


def test_normalization_idempotent_on_real_outputs(u5):
    for t in u5.trees:
        d = alexander(t)
        assert d.normalized() == d
        assert d.lowest == 0
        assert d.is_zero or d.coeffs[-1] > 0


# --- frozen invariant table --------------------------------------------------

TABLE = {
    # tree: (b, g, alexander coeffs ascending from t^0, sigma, det)
    "+": (2, 0, (-1, 1), 1, 2),
    "+(+)": (1, 1, (1, -1, 1), 2, 3),
    "+(-)": (1, 1, (1, -3, 1), 0, 5),
    "-(+)": (1, 1, (1, -3, 1), 0, 5),
    "-(-)": (1, 1, (1, -1, 1), -2, 3),
    "+(+(+))": (2, 1, (-1, 1, -1, 1), 3, 4),
}


@pytest.mark.parametrize("text", sorted(TABLE))
def test_invariant_table(text):
    b, g, coeffs, sig, det = TABLE[text]
    t = parse(text)
    assert boundary_components(t) == b
    assert genus(t) == g
    assert alexander(t) == LaurentPolynomial(0, coeffs)
    assert signature(t) == sig
    assert determinant(t) == det


def test_nullity_examples(u5):
    assert nullity(parse("+(+)")) == 0
    assert nullity(parse("+")) == 0
    for t in u5.trees:
        # rank-nullity against an independent rank computation
        assert nullity(t) + _rank_int(_sym_part(seifert_matrix(t))) == t.size


# --- cross-validation sweeps -------------------------------------------------


def test_alexander_matches_sympy_exhaustive_to_4(u4):
    for t in u4.trees:
        assert alexander(t) == sympy_alexander(seifert_matrix(t)), t.text


def test_alexander_matches_sympy_random_5_to_8():
    for i in range(24):
        t = random_tree(5 + i % 4, seed=1000 + i)
        assert alexander(t) == sympy_alexander(seifert_matrix(t)), t.text


def test_determinant_is_det_of_symmetrized_matrix(u5):
    # Delta(-1) = det(V + V^T) exactly, so |det(V + V^T)| is an
    # independent route to the link determinant.
    from hopfarb.invariants import _det_int

    for t in u5.trees:
        assert determinant(t) == abs(_det_int(_sym_part(seifert_matrix(t))))


def test_genus_and_boundary_via_matching_oracle(u6):
    # rank(V - V^T) equals twice the maximum matching of the tree, giving
    # a purely combinatorial oracle for genus and boundary count.
    for t in u6.trees:
        m = tree_matching_number(t)
        assert genus(t) == m
        assert boundary_components(t) == t.size - 2 * m + 1


def test_genus_identity_universe_8():
    # g = (n + 1 - b)/2 with integer g for every tree of size <= 8; the
    # skew-symmetric part always has even rank.
    from hopfarb.invariants import _skew_part

    for n in range(1, 9):
        for t in enumerate_trees(n):
            rank = _rank_int(_skew_part(seifert_matrix(t)))
            assert rank % 2 == 0
            b = n - rank + 1
            assert 2 * (rank // 2) == n + 1 - b
            assert tree_matching_number(t) * 2 == rank


def test_monic_alexander_for_knot_trees(u5):
    for t in u5.trees:
        if boundary_components(t) == 1:
            assert alexander(t).evaluate(1) in (1, -1), t.text


def test_signature_even_for_knot_trees(u6):
    for t in u6.trees:
        if boundary_components(t) == 1:
            assert signature(t) % 2 == 0, t.text


def test_genus_monotone_under_embedding(u4):
    for t1 in u4.trees:
        for t2 in u4.trees:
            if embeds(t1, t2):
                assert genus(t1) <= genus(t2)
                assert betti(t1) <= betti(t2)


# --- fingerprints ------------------------------------------------------------


def test_fingerprint_examples():
    assert fingerprint(parse("+(-)")) == fingerprint(parse("-(+)"))
    assert fingerprint(parse("+(+)")) != fingerprint(parse("-(-)"))
    assert fingerprint(parse("+")).b == 2


def test_fingerprint_json_schema():
    fp = fingerprint(parse("+(+)"))
    assert fp.to_json_obj() == {
        "n": 2,
        "b": 1,
        "g": 1,
        "alexander": {"lowest": 0, "coeffs": [1, -1, 1]},
        "sigma": 2,
        "det": "3",
        "nullity": 0,
    }


def test_fingerprint_validation():
    delta = LaurentPolynomial(0, (1, -1, 1))
    with pytest.raises(ValueError):
        Fingerprint(2, 1, 0, delta, 2, 3, 0)  # genus identity broken
    with pytest.raises(ValueError):
        Fingerprint(2, 1, 1, delta, 2, 7, 0)  # determinant mismatch


def test_basis_flip_invariance_seeded():
    rng = random.Random(20240917)
    for _ in range(200):
        n = rng.randint(1, 8)
        t = random_tree(n, rng.randrange(2**31))
        v = seifert_matrix(t)
        d = [rng.choice((1, -1)) for _ in range(n)]
        flipped = SeifertMatrix(
            tuple(
                tuple(d[i] * d[j] * v.entries[i][j] for j in range(n))
                for i in range(n)
            )
        )
        assert fingerprint_of_matrix(flipped) == fingerprint_of_matrix(v)


# --- defect bounds -----------------------------------------------------------


def test_top_defect_upper_bound():
    assert top_defect_upper_bound(parse("+(+)")) == 0
    assert top_defect_upper_bound(parse("+(-)")) == 1
    with pytest.raises(ValueError, match="not a knot"):
        top_defect_upper_bound(parse("+"))


def test_smooth_defect_guarantee():
    assert smooth_defect_guarantee(parse("+(+)"))
    assert smooth_defect_guarantee(parse("-(-)"))
    assert not smooth_defect_guarantee(parse("+(-)"))
