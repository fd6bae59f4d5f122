"""Seifert-matrix invariants of surfaces plumbed along signed plane trees.

Plumbing one Hopf band per vertex of a signed plane tree, one plumbing
square per edge, yields a fibred surface whose first homology is spanned
by the band cores, one generator per vertex.  The Seifert linking form on
that basis has the sign of the band on the diagonal and a single unit in
one of the two slots of each edge; which slot carried the unit is a basis
convention, since flipping generators realizes every slot pattern on a
tree.  The convention used here is fixed by two anchor values: the
positive Hopf band gives the 1x1 matrix [1], and the tree "+(+)" (the
right-handed trefoil fibre) has signature +2.

From the matrix V everything else is classical and computed exactly:

* Betti number ``n`` of the surface = number of bands,
* boundary components ``b = n - rank(V - V^T) + 1``,
* genus ``g = rank(V - V^T) / 2`` (minimal over all Seifert surfaces,
  because the plumbed surface is a fibre),
* Alexander polynomial ``det(V - t V^T)``, normalized to lowest exponent
  0 and positive leading coefficient,
* signature and nullity of ``V + V^T``,
* link determinant ``|Delta(-1)|``.

No floating point is used anywhere: determinants are fraction-free
integer eliminations, the polynomial is recovered by exact interpolation
at integer points, and signatures come from rational congruence
diagonalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .trees import PlaneTree

__all__ = [
    "SeifertMatrix",
    "LaurentPolynomial",
    "Fingerprint",
    "seifert_matrix",
    "betti",
    "boundary_components",
    "genus",
    "alexander",
    "signature",
    "determinant",
    "nullity",
    "fingerprint",
    "fingerprint_of_matrix",
    "top_defect_upper_bound",
    "smooth_defect_guarantee",
]


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial ``sum coeffs[i] * t**(lowest + i)``.

    ``coeffs`` is trimmed: its first and last entries are nonzero unless
    the polynomial is zero, in which case ``coeffs`` is empty and
    ``lowest`` is 0.
    """

    lowest: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            if self.lowest != 0:
                raise ValueError("zero polynomial must have lowest exponent 0")
        elif self.coeffs[0] == 0 or self.coeffs[-1] == 0:
            raise ValueError("coefficient sequence must be trimmed")

    @classmethod
    def from_coeffs(cls, lowest: int, coeffs) -> "LaurentPolynomial":
        cs = list(coeffs)
        lo = 0
        while cs and cs[0] == 0:
            cs.pop(0)
            lo += 1
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            return cls(0, ())
        return cls(lowest + lo, tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, x: int):
        """Exact value at an integer; a Fraction when negative exponents occur."""
        value = sum(
            (Fraction(x) ** (self.lowest + i)) * c for i, c in enumerate(self.coeffs)
        )
        value = Fraction(value)
        return int(value) if value.denominator == 1 else value

    def normalized(self) -> "LaurentPolynomial":
        """Multiply by the unit +-t^k fixing lowest exponent 0 and a positive
        leading coefficient; the classical polynomial is only defined up to
        such units."""
        if self.is_zero:
            return self
        cs = self.coeffs if self.coeffs[-1] > 0 else tuple(-c for c in self.coeffs)
        return LaurentPolynomial(0, cs)

    def to_json_obj(self) -> dict:
        return {"lowest": self.lowest, "coeffs": list(self.coeffs)}

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            e = self.lowest + i
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "t" if mag == 1 else f"{mag}*t"
            else:
                body = f"t^{e}" if mag == 1 else f"{mag}*t^{e}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


@dataclass(frozen=True)
class SeifertMatrix:
    """Square integer linking matrix of the band cores of a plumbing.

    Diagonal entries are the band signs; each plumbing edge contributes a
    single +-1 in exactly one of its two symmetric slots, and the nonzero
    off-diagonal pattern forms a tree.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise ValueError("entries must form a nonempty square matrix")
        if any(self.entries[i][i] not in (1, -1) for i in range(n)):
            raise ValueError("diagonal entries must be +-1")
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                a, b = self.entries[i][j], self.entries[j][i]
                if a == b == 0:
                    continue
                if not ((a in (1, -1) and b == 0) or (b in (1, -1) and a == 0)):
                    raise ValueError(
                        f"off-diagonal pair ({i},{j}) must be a single +-1 against a 0"
                    )
                edges.append((i, j))
        if len(edges) != n - 1:
            raise ValueError("off-diagonal support must have n-1 edges")
        # Connectivity of the support (acyclicity follows from the count).
        adj = [[] for _ in range(n)]
        for i, j in edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = {0}
        stack = [0]
        while stack:
            for k in adj[stack.pop()]:
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        if len(seen) != n:
            raise ValueError("off-diagonal support must be connected")

    @property
    def size(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Fingerprint:
    """Bundle of exact invariants used as a proxy class for boundary links.

    Equality of fingerprints is necessary but not sufficient for isotopy
    of the boundary links; classes built from it may over-merge.
    """

    n: int
    b: int
    g: int
    alexander: LaurentPolynomial
    signature: int
    determinant: int
    nullity: int

    def __post_init__(self):
        if self.n + 1 - self.b != 2 * self.g:
            raise ValueError("genus must satisfy g = (n + 1 - b) / 2")
        if self.determinant != abs(self.alexander.evaluate(-1)):
            raise ValueError("determinant must equal |alexander(-1)|")

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "b": self.b,
            "g": self.g,
            "alexander": self.alexander.to_json_obj(),
            "sigma": self.signature,
            "det": str(self.determinant),
            "nullity": self.nullity,
        }


# ---------------------------------------------------------------------------
# Exact linear algebra.
# ---------------------------------------------------------------------------


def _det_int(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    a = [row[:] for row in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _rank_int(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    a = [row[:] for row in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for i in range(row + 1, m):
            for j in range(col + 1, ncols):
                a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) // prev
            a[i][col] = 0
        prev = a[row][col]
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def _signature_nullity(rows) -> tuple[int, int]:
    """Signature and nullity of a symmetric matrix over exact rationals.

    Congruence diagonalization with symmetric pivoting; when the working
    block has an all-zero diagonal, a nonzero pair ``A[i][j]`` is split
    off as a hyperbolic 2x2 block, contributing rank 2 and signature 0.
    """
    a = [[Fraction(x) for x in row] for row in rows]
    pos = neg = null = 0
    while a:
        n = len(a)
        p = next((i for i in range(n) if a[i][i] != 0), None)
        if p is not None:
            if p != 0:
                _sym_swap(a, 0, p)
            d = a[0][0]
            if d > 0:
                pos += 1
            else:
                neg += 1
            a = [
                [a[i][j] - a[i][0] * a[0][j] / d for j in range(1, n)]
                for i in range(1, n)
            ]
            continue
        pair = next(
            ((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None
        )
        if pair is None:
            null += n
            break
        i, j = pair  # i < j, and j stays put when row i moves to the front
        if i != 0:
            _sym_swap(a, 0, i)
        if j != 1:
            _sym_swap(a, 1, j)
        d = a[0][1]
        pos += 1
        neg += 1
        a = [
            [
                a[r][s] - (a[r][0] * a[1][s] + a[r][1] * a[0][s]) / d
                for s in range(2, n)
            ]
            for r in range(2, n)
        ]
    return pos - neg, null


def _sym_swap(a, i, j):
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


def _interpolate_int(values: list[int]) -> list[int]:
    """Integer coefficients of the polynomial taking ``values`` at 0..d."""
    d = len(values) - 1
    coef = [Fraction(v) for v in values]
    for j in range(1, d + 1):
        for i in range(d, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / j
    poly = [coef[d]]
    for i in range(d - 1, -1, -1):
        nxt = [Fraction(0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] += c
            nxt[k] -= c * i
        nxt[0] += coef[i]
        poly = nxt
    out = []
    for c in poly:
        if c.denominator != 1:
            raise ArithmeticError("interpolation of integer data must be integral")
        out.append(int(c))
    return out


# ---------------------------------------------------------------------------
# Invariants.
# ---------------------------------------------------------------------------


def seifert_matrix(t: PlaneTree) -> SeifertMatrix:
    """Seifert matrix of the plumbing encoded by ``t``.

    Rows and columns follow the preorder of the vertices.  ``V[v][v]`` is
    the sign of ``v``; each edge parent -> child contributes ``V[parent][
    child] = 1`` and leaves the transposed slot 0.
    """
    order = t.preorder()
    pos = {v: i for i, v in enumerate(order)}
    n = t.size
    m = [[0] * n for _ in range(n)]
    for v in range(n):
        m[pos[v]][pos[v]] = t.labels[v]
        for c in t.children[v]:
            m[pos[v]][pos[c]] = 1
    return SeifertMatrix(tuple(tuple(row) for row in m))


def betti(t: PlaneTree) -> int:
    """First Betti number of the plumbed surface: one band per vertex."""
    return t.size


def _skew_part(m: SeifertMatrix) -> list[list[int]]:
    e = m.entries
    n = m.size
    return [[e[i][j] - e[j][i] for j in range(n)] for i in range(n)]


def _sym_part(m: SeifertMatrix) -> list[list[int]]:
    e = m.entries
    n = m.size
    return [[e[i][j] + e[j][i] for j in range(n)] for i in range(n)]


def _boundary_of_matrix(m: SeifertMatrix) -> int:
    rank = _rank_int(_skew_part(m))
    return m.size - rank + 1


def _genus_of_matrix(m: SeifertMatrix) -> int:
    rank = _rank_int(_skew_part(m))
    if rank % 2:
        raise ArithmeticError("skew-symmetric part must have even rank")
    return rank // 2


def _alexander_of_matrix(m: SeifertMatrix) -> LaurentPolynomial:
    e = m.entries
    n = m.size
    values = [
        _det_int([[e[i][j] - k * e[j][i] for j in range(n)] for i in range(n)])
        for k in range(n + 1)
    ]
    return LaurentPolynomial.from_coeffs(0, _interpolate_int(values)).normalized()


def boundary_components(t: PlaneTree) -> int:
    """Number of boundary circles of the plumbed surface: n - rank(V - V^T) + 1."""
    return _boundary_of_matrix(seifert_matrix(t))


def genus(t: PlaneTree) -> int:
    """Genus of the plumbed surface, which is the genus of its boundary link."""
    return _genus_of_matrix(seifert_matrix(t))


def alexander(t: PlaneTree) -> LaurentPolynomial:
    """Alexander polynomial ``det(V - t V^T)``, normalized.

    Computed by exact interpolation of integer determinants at the points
    t = 0..n, then shifted and sign-fixed; the output is identical across
    implementations by construction.
    """
    return _alexander_of_matrix(seifert_matrix(t))


def signature(t: PlaneTree) -> int:
    """Signature of ``V + V^T`` (the link signature of the boundary)."""
    return _signature_nullity(_sym_part(seifert_matrix(t)))[0]


def nullity(t: PlaneTree) -> int:
    """Nullity of ``V + V^T``."""
    return _signature_nullity(_sym_part(seifert_matrix(t)))[1]


def determinant(t: PlaneTree) -> int:
    """Link determinant ``|Delta(-1)|``."""
    return abs(alexander(t).evaluate(-1))


def fingerprint_of_matrix(m: SeifertMatrix) -> Fingerprint:
    """All invariants computed from a Seifert matrix alone.

    Congruent matrices (in particular any re-signing ``D V D`` by a
    diagonal of +-1) produce identical fingerprints.
    """
    n = m.size
    b = _boundary_of_matrix(m)
    g = _genus_of_matrix(m)
    delta = _alexander_of_matrix(m)
    sig, nul = _signature_nullity(_sym_part(m))
    det = abs(delta.evaluate(-1))
    return Fingerprint(n, b, g, delta, sig, det, nul)


def fingerprint(t: PlaneTree) -> Fingerprint:
    """Invariant tuple (n, b, g, Delta, sigma, det, nullity) of ``t``."""
    return fingerprint_of_matrix(seifert_matrix(t))


def top_defect_upper_bound(t: PlaneTree) -> int:
    """Upper bound ``g - |sigma|/2`` on the topological genus defect.

    Only defined when the boundary is a knot: ``|sigma|/2`` is a lower
    bound for the topological 4-genus of a knot, so the genus defect
    ``g - g4`` is at most this value.
    """
    m = seifert_matrix(t)
    b = _boundary_of_matrix(m)
    if b != 1:
        raise ValueError(f"not a knot: boundary has {b} components")
    sig, _ = _signature_nullity(_sym_part(m))
    return _genus_of_matrix(m) - abs(sig) // 2


def smooth_defect_guarantee(t: PlaneTree) -> bool:
    """True when all signs agree, forcing smooth genus defect 0.

    All-positive plumbings bound strongly quasipositive links, whose
    smooth 4-genus equals the genus; the all-negative case follows by
    mirror symmetry.  ``False`` means no guarantee, not a nonzero defect.
    """
    return len(set(t.labels)) == 1
