import pytest

from hopfarb.embedding import (
    EmbeddingWitness,
    embed_witness,
    embeds,
    operation_closure,
    oracle_embeds,
    verify_witness,
)
from hopfarb.minors import _relation_pairs
from hopfarb.trees import contract_path, delete_leaf, parse, strip_root


# --- decision examples -------------------------------------------------------


@pytest.mark.parametrize(
    "sub,sup,expected",
    [
        ("+", "+", True),
        ("+", "+(+)", True),
        ("+", "-(+)", True),  # anchor below the root
        ("+", "-(-)", False),
        ("+(+)", "+(-(+))", True),  # path contraction through the minus vertex
        ("+(-)", "-(+)", False),
        ("+(+,-)", "+(-,+)", False),  # plane order must be preserved
        ("+(+,-)", "+(+,-)", True),
        ("+(+,-)", "+(+,+,-)", True),
        ("+(-,+)", "+(+,-,+)", True),
        ("+(+,+)", "+(+(+))", False),  # siblings need distinct subtrees
        ("-", "+(+)", False),
    ],
)
def test_embeds_examples(sub, sup, expected):
    assert embeds(parse(sub), parse(sup)) is expected


def test_embeds_size_monotone(u3):
    for t1 in u3.trees:
        for t2 in u3.trees:
            if embeds(t1, t2):
                assert t1.size <= t2.size
                if t1.size == t2.size:
                    assert t1 == t2


# --- witnesses ---------------------------------------------------------------


def test_witness_prefers_preorder_first_anchor():
    w = embed_witness(parse("+"), parse("+(+)"))
    assert w == EmbeddingWitness((0,), ())


def test_witness_for_contraction():
    w = embed_witness(parse("+(+)"), parse("+(-(+))"))
    assert w.vertex_map == (0, 2)
    assert w.edge_paths == ((0, 1, 2),)
    assert verify_witness(parse("+(+)"), parse("+(-(+))"), w)


def test_witness_none_on_mismatch():
    assert embed_witness(parse("+"), parse("-")) is None


def test_witness_json_form():
    w = embed_witness(parse("+(+)"), parse("+(-(+))"))
    assert w.to_json_obj() == {
        "vertex_map": [[0, 0], [1, 2]],
        "edge_paths": [[0, 1, 2]],
    }


def test_verify_witness_identity():
    t = parse("+(+)")
    assert verify_witness(t, t, EmbeddingWitness((0, 1), ((0, 1),)))


def test_verify_witness_rejects_label_violation():
    assert not verify_witness(parse("+"), parse("+(-)"), EmbeddingWitness((1,), ()))


def test_verify_witness_rejects_bad_paths():
    t1, t2 = parse("+(+)"), parse("+(+(+))")
    # Path does not end at the child's image.
    assert not verify_witness(t1, t2, EmbeddingWitness((0, 2), ((0, 1),)))
    # Path steps must descend parent -> child.
    assert not verify_witness(t1, t2, EmbeddingWitness((2, 0), ((2, 1, 0),)))
    # Duplicate images.
    assert not verify_witness(t1, t2, EmbeddingWitness((0, 0), ((0, 0),)))


def test_verify_witness_rejects_order_violation():
    t1, t2 = parse("+(+,-)"), parse("+(-,+)")
    w = EmbeddingWitness((0, 2, 1), ((0, 2), (0, 1)))
    assert not verify_witness(t1, t2, w)


def test_verify_witness_rejects_shared_interior():
    # Both edges routed through the same middle vertex of the host.
    t1, t2 = parse("+(+,+)"), parse("+(+(+,+))")
    w = EmbeddingWitness((0, 2, 3), ((0, 1, 2), (0, 1, 3)))
    assert not verify_witness(t1, t2, w)


def test_witness_coupling_and_soundness(u4, u5):
    # embeds is true exactly when a witness exists, and every produced
    # witness passes independent verification.
    for t1 in u4.trees:
        for t2 in u5.trees:
            w = embed_witness(t1, t2)
            assert (w is not None) == embeds(t1, t2)
            if w is not None:
                assert verify_witness(t1, t2, w)


# --- brute-force oracle ------------------------------------------------------


def test_operation_closure_frozen_example():
    assert operation_closure(parse("+(+)")) == {"+(+)", "+"}
    assert operation_closure(parse("+(-(+))")) == {
        "+(-(+))", "+(-)", "-(+)", "+(+)", "+", "-",
    }


def test_oracle_examples():
    assert oracle_embeds(parse("+(+)"), parse("+(-(+))"))
    assert not oracle_embeds(parse("-"), parse("+(+)"))


def test_oracle_guard():
    nine = parse("+(+(+(+(+(+(+(+(+))))))))")
    assert nine.size == 9
    with pytest.raises(ValueError):
        oracle_embeds(parse("+"), nine)
    with pytest.raises(ValueError):
        operation_closure(nine)
    assert oracle_embeds(parse("+"), nine, max_size=9)


def test_dp_agrees_with_oracle_small(u3, u4):
    for t2 in u4.trees:
        reachable = operation_closure(t2)
        for t1 in u3.trees:
            assert embeds(t1, t2) == (t1.text in reachable)


def test_dp_agrees_with_oracle_full(u4, u6):
    # Exhaustive cross-validation of the dynamic program against the
    # operation-closure semantics for |t1| <= 4, |t2| <= 6.
    for t2 in u6.trees:
        reachable = operation_closure(t2)
        for t1 in u4.trees:
            assert embeds(t1, t2) == (t1.text in reachable), (t1.text, t2.text)


# --- quasi-order axioms and closure consistency ------------------------------


def test_reflexive_on_universe_5(u5):
    for t in u5.trees:
        assert embeds(t, t)


def test_transitive_on_universe_5(u5):
    pairs = _relation_pairs(u5)
    succ = [0] * len(u5.trees)
    for i, j in pairs:
        succ[i] |= 1 << j
    for i, j in pairs:
        assert succ[j] & ~succ[i] == 0, (i, j)


def test_single_reductions_embed_back(u4):
    for t in u4.trees:
        results = []
        for v in range(t.size):
            if t.is_leaf(v) and t.size > 1:
                results.append(delete_leaf(t, v))
        if len(t.children[t.root]) == 1:
            results.append(strip_root(t))
        for u in range(t.size):
            for c in t.children[u]:
                interior = c
                while len(t.children[interior]) == 1:
                    w = t.children[interior][0]
                    results.append(contract_path(t, u, w))
                    interior = w
        for r in results:
            assert embeds(r, t), (r.text, t.text)
