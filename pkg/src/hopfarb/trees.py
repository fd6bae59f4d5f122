"""Signed plane trees and their reduction operations.

A plane tree here is a rooted tree in which every vertex carries a sign
(+1 or -1) and the children of every vertex are linearly ordered.  Such a
tree encodes an iterated plumbing of Hopf bands: one band per vertex, one
plumbing square per edge.  This module provides the textual grammar for
these trees, exhaustive enumeration, uniform random sampling, and the
three reductions (leaf deletion, root stripping, path contraction) that
generate the homeomorphic-embedding quasi-order.

Grammar::

    Tree     := Sign Children?
    Sign     := '+' | '-'
    Children := '(' Tree (',' Tree)* ')'

Whitespace may appear between tokens.  The canonical text of a tree is the
same grammar with no whitespace; it is the identity key for equality and
hashing.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator

__all__ = [
    "PlaneTree",
    "TreeSyntaxError",
    "parse",
    "to_text",
    "enumerate_trees",
    "count",
    "unrank",
    "delete_leaf",
    "strip_root",
    "contract_path",
    "equal",
    "random_tree",
    "tree_to_json_obj",
    "tree_from_json_obj",
]

POSITIVE = 1
NEGATIVE = -1

_SIGN_CHAR = {POSITIVE: "+", NEGATIVE: "-"}
_CHAR_SIGN = {"+": POSITIVE, "-": NEGATIVE}


class TreeSyntaxError(ValueError):
    """Malformed tree text; ``offset`` is the 0-based position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset


@dataclass(frozen=True, eq=False)
class PlaneTree:
    """A rooted, ordered tree with vertices signed +1 or -1.

    Vertices are integer indices.  ``labels[v]`` is the sign of ``v``,
    ``parents[v]`` is its parent (``None`` for the root), and
    ``children[v]`` is the ordered tuple of its children.  All
    constructors in this module number vertices in preorder with the root
    at index 0; indices never change within one value, and every derived
    tree is renumbered in preorder.

    Values are immutable; equality and hashing go through the canonical
    text, so two trees are equal exactly when they are isomorphic as
    labelled plane trees.
    """

    labels: tuple[int, ...]
    parents: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    root: int = 0

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise ValueError("a plane tree has at least one vertex")
        if not (len(self.parents) == len(self.children) == n):
            raise ValueError("labels, parents and children must have equal length")
        if any(l not in (POSITIVE, NEGATIVE) for l in self.labels):
            raise ValueError("labels must be +1 or -1")
        if not (0 <= self.root < n) or self.parents[self.root] is not None:
            raise ValueError("root must be the unique vertex without a parent")
        seen_as_child = [False] * n
        for u, kids in enumerate(self.children):
            for c in kids:
                if not (0 <= c < n) or self.parents[c] != u or seen_as_child[c]:
                    raise ValueError("children sequences are inconsistent with parents")
                seen_as_child[c] = True
        if sum(seen_as_child) != n - 1 or seen_as_child[self.root]:
            raise ValueError("every non-root vertex must occur exactly once as a child")
        # Coverage alone admits cycles living apart from the root; only
        # reachability makes this a connected, acyclic tree.
        visited = 0
        stack = [self.root]
        while stack:
            visited += 1
            stack.extend(self.children[stack.pop()])
        if visited != n:
            raise ValueError("every vertex must be reachable from the root")

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def text(self) -> str:
        """Canonical text: the grammar with no whitespace."""

        def write(v: int) -> str:
            s = _SIGN_CHAR[self.labels[v]]
            if self.children[v]:
                s += "(" + ",".join(write(c) for c in self.children[v]) + ")"
            return s

        return write(self.root)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def preorder(self) -> list[int]:
        """Vertex indices in preorder (root first, children left to right)."""
        order: list[int] = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return order

    def subtree_sizes(self) -> list[int]:
        """Number of vertices in the subtree rooted at each vertex."""
        sizes = [1] * self.size
        for v in reversed(self.preorder()):
            for c in self.children[v]:
                sizes[v] += sizes[c]
        return sizes

    def depth(self, v: int) -> int:
        d = 0
        p = self.parents[v]
        while p is not None:
            d += 1
            p = self.parents[p]
        return d

    @classmethod
    def from_nested(cls, nested) -> "PlaneTree":
        """Build a tree from ``(sign, [nested children...])`` pairs, preorder-numbered."""
        labels: list[int] = []
        parents: list[int | None] = []
        children: list[list[int]] = []

        def build(node, parent: int | None) -> int:
            sign, kids = node
            v = len(labels)
            labels.append(sign)
            parents.append(parent)
            children.append([])
            if parent is not None:
                children[parent].append(v)
            for kid in kids:
                build(kid, v)
            return v

        build(nested, None)
        return cls(tuple(labels), tuple(parents), tuple(map(tuple, children)), 0)

    def nested(self):
        """Inverse of :meth:`from_nested`."""

        def rec(v: int):
            return (self.labels[v], [rec(c) for c in self.children[v]])

        return rec(self.root)

    def __eq__(self, other):
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return self.text == other.text

    def __hash__(self):
        return hash(self.text)

    def __repr__(self):
        return f"PlaneTree({self.text!r})"


def parse(text: str) -> PlaneTree:
    """Parse tree text into a :class:`PlaneTree` (preorder-numbered).

    Raises :class:`TreeSyntaxError` with the offending 0-based offset on
    malformed input, including empty input and trailing garbage.
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect_tree():
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise TreeSyntaxError("expected '+' or '-'", pos)
        ch = text[pos]
        if ch not in _CHAR_SIGN:
            raise TreeSyntaxError(f"expected '+' or '-', found {ch!r}", pos)
        sign = _CHAR_SIGN[ch]
        pos += 1
        kids = []
        skip_ws()
        if pos < n and text[pos] == "(":
            pos += 1
            kids.append(expect_tree())
            skip_ws()
            while pos < n and text[pos] == ",":
                pos += 1
                kids.append(expect_tree())
                skip_ws()
            if pos >= n or text[pos] != ")":
                raise TreeSyntaxError("expected ',' or ')'", pos)
            pos += 1
        return (sign, kids)

    nested = expect_tree()
    skip_ws()
    if pos != n:
        raise TreeSyntaxError(f"unexpected trailing input {text[pos]!r}", pos)
    return PlaneTree.from_nested(nested)


def to_text(t: PlaneTree) -> str:
    """Canonical text of ``t``; ``parse(to_text(t)) == t``."""
    return t.text


def equal(t1: PlaneTree, t2: PlaneTree) -> bool:
    """Labelled plane isomorphism, decided by canonical-text equality."""
    return t1.text == t2.text


# ---------------------------------------------------------------------------
# Enumeration.
#
# Trees with n vertices are listed shape-major:
#   * shapes are the balanced-parenthesis strings with n-1 pairs (the
#     children forest of the root, written preorder) in lexicographic
#     order with '(' < ')';
#   * within a shape, sign vectors run over the preorder vertices in
#     lexicographic order with '+' < '-'.
# The order is part of the contract: golden files and parallel sweeps
# rely on it, and `random_tree` unranks against it.
# ---------------------------------------------------------------------------


def count(n: int) -> int:
    """Number of signed plane trees with ``n`` vertices: 2^n * Catalan(n-1)."""
    if n < 1:
        raise ValueError("tree size must be >= 1")
    c = comb(2 * (n - 1), n - 1) // n  # Catalan(n-1)
    return (1 << n) * c


def _paren_strings(pairs: int) -> Iterator[str]:
    # Lexicographic generation: try '(' before ')' at every slot.
    def gen(prefix: list[str], opens_left: int, balance: int) -> Iterator[str]:
        if opens_left == 0 and balance == 0:
            yield "".join(prefix)
            return
        if opens_left > 0:
            prefix.append("(")
            yield from gen(prefix, opens_left - 1, balance + 1)
            prefix.pop()
        if balance > 0:
            prefix.append(")")
            yield from gen(prefix, opens_left, balance - 1)
            prefix.pop()

    yield from gen([], pairs, 0)


def _shape_from_parens(s: str) -> tuple[tuple[int | None, ...], tuple[tuple[int, ...], ...]]:
    # The string is the preorder walk of the root's children forest:
    # '(' enters a new child of the current vertex, ')' returns.
    parents: list[int | None] = [None]
    children: list[list[int]] = [[]]
    cur = 0
    for ch in s:
        if ch == "(":
            v = len(parents)
            parents.append(cur)
            children[cur].append(v)
            children.append([])
            cur = v
        else:
            cur = parents[cur]  # type: ignore[assignment]
    return tuple(parents), tuple(map(tuple, children))


def enumerate_trees(n: int) -> Iterator[PlaneTree]:
    """Yield every signed plane tree with exactly ``n`` vertices once.

    The sequence is deterministic in the documented shape-major order and
    has length ``count(n)``.
    """
    if n < 1:
        raise ValueError("tree size must be >= 1")
    for shape in _paren_strings(n - 1):
        parents, children = _shape_from_parens(shape)
        for bits in range(1 << n):
            labels = tuple(
                NEGATIVE if (bits >> (n - 1 - i)) & 1 else POSITIVE for i in range(n)
            )
            yield PlaneTree(labels, parents, children, 0)


def _unrank_shape(pairs: int, rank: int) -> str:
    # ways[r][b] = number of balanced completions of length r from balance b.
    ways = [[0] * (pairs + 2) for _ in range(2 * pairs + 1)]
    ways[0][0] = 1
    for r in range(1, 2 * pairs + 1):
        for b in range(pairs + 1):
            w = ways[r - 1][b + 1] if b + 1 <= pairs else 0
            if b > 0:
                w += ways[r - 1][b - 1]
            ways[r][b] = w
    out: list[str] = []
    balance = 0
    for r in range(2 * pairs, 0, -1):
        c_open = ways[r - 1][balance + 1] if balance + 1 <= pairs else 0
        if rank < c_open:
            out.append("(")
            balance += 1
        else:
            rank -= c_open
            out.append(")")
            balance -= 1
    return "".join(out)


def unrank(n: int, idx: int) -> PlaneTree:
    """The ``idx``-th element of ``enumerate_trees(n)`` without iteration.

    Lets callers restart or partition the enumeration: workers can split
    ``range(count(n))`` and reconstruct their slices independently.
    """
    if n < 1:
        raise ValueError("tree size must be >= 1")
    if not (0 <= idx < count(n)):
        raise ValueError(f"index {idx} out of range for size {n}")
    shape_idx, bits = divmod(idx, 1 << n)
    parents, children = _shape_from_parens(_unrank_shape(n - 1, shape_idx))
    labels = tuple(NEGATIVE if (bits >> (n - 1 - i)) & 1 else POSITIVE for i in range(n))
    return PlaneTree(labels, parents, children, 0)


def random_tree(n: int, seed: int) -> PlaneTree:
    """A tree drawn uniformly from ``enumerate_trees(n)``, deterministic in ``seed``."""
    if n < 1:
        raise ValueError("tree size must be >= 1")
    return unrank(n, _random.Random(seed).randrange(count(n)))


# ---------------------------------------------------------------------------
# Reduction operations.  Each returns a fresh preorder-numbered tree and
# leaves its input untouched.
# ---------------------------------------------------------------------------


def delete_leaf(t: PlaneTree, v: int) -> PlaneTree:
    """Remove the leaf ``v`` and its parent edge, preserving sibling order."""
    if t.children[v]:
        raise ValueError(f"vertex {v} is not a leaf")
    if t.size == 1:
        raise ValueError("cannot delete the only vertex of a tree")

    def rec(u: int):
        return (t.labels[u], [rec(c) for c in t.children[u] if c != v])

    return PlaneTree.from_nested(rec(t.root))


def strip_root(t: PlaneTree) -> PlaneTree:
    """Remove a root with a single child and reroot at that child."""
    kids = t.children[t.root]
    if len(kids) != 1:
        raise ValueError(f"root has {len(kids)} children, expected exactly 1")

    def rec(u: int):
        return (t.labels[u], [rec(c) for c in t.children[u]])

    return PlaneTree.from_nested(rec(kids[0]))


def contract_path(t: PlaneTree, u: int, w: int) -> PlaneTree:
    """Contract the tree path from ``u`` down to ``w`` into the edge u -> w.

    ``w`` must be a strict descendant of ``u`` and every vertex strictly
    between them must have exactly one child.  The labels of ``u`` and
    ``w`` are kept; ``w`` takes the child slot of the path's first
    interior vertex.  A path that is already an edge contracts to itself.
    """
    path = [w]
    p = t.parents[w]
    while p is not None and p != u:
        path.append(p)
        p = t.parents[p]
    if p != u:
        raise ValueError(f"vertex {w} is not a strict descendant of {u}")
    path.append(u)
    path.reverse()  # u, interior..., w
    for interior in path[1:-1]:
        if len(t.children[interior]) != 1:
            raise ValueError(
                f"interior vertex {interior} has {len(t.children[interior])} children, expected 1"
            )
    if len(path) == 2:
        return t
    first_interior = path[1]

    def rec(x: int):
        if x == first_interior:
            return rec(w)
        return (t.labels[x], [rec(c) for c in t.children[x]])

    return PlaneTree.from_nested(rec(t.root))


# ---------------------------------------------------------------------------
# JSON form: {"label": "+"|"-", "children": [...]} nested recursively.
# ---------------------------------------------------------------------------


def tree_to_json_obj(t: PlaneTree) -> dict:
    def rec(v: int) -> dict:
        return {
            "label": _SIGN_CHAR[t.labels[v]],
            "children": [rec(c) for c in t.children[v]],
        }

    return rec(t.root)


def tree_from_json_obj(obj: dict) -> PlaneTree:
    def rec(node) -> tuple:
        label = node["label"]
        if label not in _CHAR_SIGN:
            raise ValueError(f"invalid label {label!r}")
        return (_CHAR_SIGN[label], [rec(k) for k in node.get("children", [])])

    return PlaneTree.from_nested(rec(obj))
