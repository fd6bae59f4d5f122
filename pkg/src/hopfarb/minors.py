"""The minor quasi-order over bounded universes of signed plane trees.

The embedding relation of :mod:`hopfarb.embedding` is a well-quasi-order,
so any property closed under taking minors is characterized by a finite
obstruction set.  Those obstruction sets are not explicit in general;
this module materializes the order over all trees up to a size bound and
mines the minimal excluded trees of a predicate at that scale, which is a
lower approximation of the true obstruction set.  It also audits
quantities that are expected to be monotone along the order (genus,
Betti number) and groups same-size trees by their invariant fingerprint
as a stand-in for boundary-link equivalence.

Pairwise embedding tests dominate the cost and grow quadratically with
the universe, hence the size guard (default 6, about 3.5k trees).  All
outputs are deterministic: trees are ordered by the enumeration, pair
lists lexicographically, mined families by canonical text.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .embedding import embeds
from .invariants import (
    boundary_components,
    determinant,
    fingerprint,
    genus,
    signature,
    top_defect_upper_bound,
)
from .trees import PlaneTree, count, enumerate_trees

__all__ = [
    "Universe",
    "PosetReport",
    "Predicate",
    "universe",
    "poset",
    "evaluate",
    "check_excluded_family",
    "minimal_excluded",
    "audit_monotone",
    "fingerprint_classes",
    "poset_to_dot",
    "poset_to_csv",
    "DEFAULT_POSET_GUARD",
]

DEFAULT_POSET_GUARD = 6


@dataclass(frozen=True)
class Universe:
    """All signed plane trees with at most ``nmax`` vertices, enumeration order."""

    nmax: int
    trees: tuple[PlaneTree, ...]

    def __len__(self):
        return len(self.trees)


def universe(nmax: int) -> Universe:
    """Concatenation of ``enumerate_trees(k)`` for k = 1..nmax."""
    if nmax < 1:
        raise ValueError("universe bound must be >= 1")
    trees = []
    for k in range(1, nmax + 1):
        trees.extend(enumerate_trees(k))
    return Universe(nmax, tuple(trees))


@dataclass(frozen=True)
class PosetReport:
    """Explicit relation table of the embedding order over a universe.

    ``relation_pairs`` lists all (i, j) with ``trees[i]`` embedding into
    ``trees[j]`` and i != j, lexicographically; ``hasse_pairs`` is its
    transitive reduction.  ``stats`` counts trees per size and relation
    pairs per size pair (keys ``"si->sj"``).
    """

    relation_pairs: tuple[tuple[int, int], ...]
    hasse_pairs: tuple[tuple[int, int], ...]
    stats: dict


def _relation_chunk(args: tuple[int, int, int]) -> list[tuple[int, int]]:
    nmax, lo, hi = args
    u = universe(nmax)
    trees = u.trees
    sizes = [t.size for t in trees]
    total = len(trees)
    out = []
    for i in range(lo, hi):
        ti = trees[i]
        si = sizes[i]
        for j in range(total):
            # Distinct same-size trees never embed: every reduction other
            # than the identity contraction strictly shrinks the tree.
            if sizes[j] > si and embeds(ti, trees[j]):
                out.append((i, j))
    return out


def _relation_pairs(u: Universe, jobs: int = 1) -> list[tuple[int, int]]:
    total = len(u.trees)
    if jobs <= 1 or total < 64:
        return _relation_chunk((u.nmax, 0, total))
    bounds = [total * k // (jobs * 4) for k in range(jobs * 4 + 1)]
    chunks = [
        (u.nmax, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi
    ]
    pairs: list[tuple[int, int]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_relation_chunk, chunks):
            pairs.extend(part)
    return pairs


def poset(u: Universe, max_nmax: int = DEFAULT_POSET_GUARD, jobs: int = 1) -> PosetReport:
    """Compute the embedding relation and its Hasse diagram over ``u``.

    Same-size pairs are excluded by definition (i != j and equal sizes
    force equal trees).  Output is independent of ``jobs``.
    """
    if u.nmax > max_nmax:
        raise ValueError(
            f"poset guard exceeded: universe bound {u.nmax} > guard {max_nmax}"
        )
    pairs = _relation_pairs(u, jobs)
    succ: dict[int, set[int]] = defaultdict(set)
    for i, j in pairs:
        succ[i].add(j)
    hasse = tuple(
        (i, j)
        for i, j in pairs
        if not any(j in succ.get(k, ()) for k in succ[i] if k != j)
    )
    sizes = [t.size for t in u.trees]
    trees_per_size = {k: count(k) for k in range(1, u.nmax + 1)}
    pairs_per_size: dict[str, int] = defaultdict(int)
    for i, j in pairs:
        pairs_per_size[f"{sizes[i]}->{sizes[j]}"] += 1
    stats = {
        "trees": len(u.trees),
        "trees_per_size": trees_per_size,
        "relation_pairs": len(pairs),
        "hasse_pairs": len(hasse),
        "pairs_per_size": dict(pairs_per_size),
    }
    return PosetReport(tuple(pairs), hasse, stats)


# ---------------------------------------------------------------------------
# Predicate registry.
# ---------------------------------------------------------------------------

_REGISTRY = {
    "size_le": (True, False, lambda t, k: t.size <= k),
    "genus_le": (True, False, lambda t, k: genus(t) <= k),
    "all_positive": (False, False, lambda t: all(l == 1 for l in t.labels)),
    "sig_abs_le": (True, False, lambda t, k: abs(signature(t)) <= k),
    "det_le": (True, False, lambda t, k: determinant(t) <= k),
    "top_defect_ub_le": (True, True, lambda t, k: top_defect_upper_bound(t) <= k),
}


@dataclass(frozen=True)
class Predicate:
    """A named boolean property of trees from the registry.

    ``knots_only`` predicates are defined only on trees whose boundary is
    a knot; evaluating them elsewhere is a domain error.
    """

    name: str
    params: tuple[int, ...] = ()
    knots_only: bool = False

    @classmethod
    def parse(cls, spec: str) -> "Predicate":
        """Build from ``"name"`` or ``"name:k"`` notation."""
        name, _, arg = spec.partition(":")
        if name not in _REGISTRY:
            raise ValueError(f"unknown predicate {name!r}")
        needs_param, knots_only, _ = _REGISTRY[name]
        if needs_param:
            if not arg:
                raise ValueError(f"predicate {name!r} requires a parameter, e.g. {name}:2")
            params = (int(arg),)
        else:
            if arg:
                raise ValueError(f"predicate {name!r} takes no parameter")
            params = ()
        return cls(name, params, knots_only)


def evaluate(p: Predicate, t: PlaneTree) -> bool:
    """Evaluate a registry predicate on one tree."""
    if p.name not in _REGISTRY:
        raise ValueError(f"unknown predicate {p.name!r}")
    needs_param, knots_only, fn = _REGISTRY[p.name]
    if knots_only and boundary_components(t) != 1:
        raise ValueError(
            f"predicate {p.name!r} is defined for knots only; "
            f"{t.text!r} bounds a multi-component link"
        )
    return fn(t, *p.params) if needs_param else fn(t)


def check_excluded_family(t: PlaneTree, family) -> bool:
    """True iff no member of ``family`` embeds into ``t``."""
    return all(not embeds(f, t) for f in family)


def minimal_excluded(
    p: Predicate, nmax: int, max_nmax: int = DEFAULT_POSET_GUARD
) -> list[PlaneTree]:
    """Minimal trees violating ``p`` within the universe of size ``nmax``.

    A violator is minimal when every strictly smaller tree embedding into
    it satisfies ``p``.  For a minor-monotone predicate the result is the
    obstruction set relative to this universe; completeness beyond the
    bound is not certified.  Sorted by canonical text.
    """
    if nmax < 1:
        raise ValueError("universe bound must be >= 1")
    if nmax > max_nmax:
        raise ValueError(f"poset guard exceeded: universe bound {nmax} > guard {max_nmax}")
    u = universe(nmax)
    violators_by_size: dict[int, list[PlaneTree]] = defaultdict(list)
    for t in u.trees:
        if not evaluate(p, t):
            violators_by_size[t.size].append(t)
    minimal = []
    for size in sorted(violators_by_size):
        smaller = [t for s in range(1, size) for t in violators_by_size[s]]
        for t in violators_by_size[size]:
            if not any(embeds(f, t) for f in smaller):
                minimal.append(t)
    return sorted(minimal, key=lambda t: t.text)


_QUANTITIES = {
    "betti": lambda t: t.size,
    "genus": genus,
}


def audit_monotone(
    quantity: str, nmax: int, max_nmax: int = DEFAULT_POSET_GUARD, jobs: int = 1
) -> list[tuple[int, int]]:
    """Scan the relation over ``universe(nmax)`` for monotonicity failures.

    Returns the (i, j) universe index pairs where the quantity of the
    embedded tree exceeds that of its host.  Expected empty for both
    registered quantities: an embedding realizes the smaller surface as
    an incompressible subsurface of the larger one, which cannot raise
    genus, and it injects vertices, which cannot raise the Betti number.
    """
    if quantity not in _QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}; expected one of {sorted(_QUANTITIES)}")
    if nmax > max_nmax:
        raise ValueError(f"poset guard exceeded: universe bound {nmax} > guard {max_nmax}")
    q = _QUANTITIES[quantity]
    u = universe(nmax)
    values = [q(t) for t in u.trees]
    return [(i, j) for i, j in _relation_pairs(u, jobs) if values[i] > values[j]]


def fingerprint_classes(n: int) -> list[list[PlaneTree]]:
    """Partition the size-``n`` trees by fingerprint equality.

    Classes are ordered by their smallest member's canonical text, and
    members within a class likewise.  Fingerprints are incomplete link
    invariants, so a class may merge trees with non-isotopic boundaries.
    """
    if n < 1:
        raise ValueError("tree size must be >= 1")
    groups = defaultdict(list)
    for t in enumerate_trees(n):
        groups[fingerprint(t)].append(t)
    classes = [sorted(g, key=lambda t: t.text) for g in groups.values()]
    classes.sort(key=lambda g: g[0].text)
    return classes


# ---------------------------------------------------------------------------
# Exports.
# ---------------------------------------------------------------------------


def poset_to_dot(u: Universe, report: PosetReport) -> str:
    """DOT digraph: vertices are canonical texts, edges the Hasse pairs."""
    lines = ["digraph minors {"]
    for t in u.trees:
        lines.append(f'  "{t.text}";')
    for i, j in report.hasse_pairs:
        lines.append(f'  "{u.trees[i].text}" -> "{u.trees[j].text}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_csv(report: PosetReport) -> str:
    """CSV of the full relation: header ``i,j`` then one pair per line."""
    lines = ["i,j"]
    lines.extend(f"{i},{j}" for i, j in report.relation_pairs)
    return "\n".join(lines) + "\n"
