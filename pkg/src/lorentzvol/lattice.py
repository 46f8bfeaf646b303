"""Exact integral lattice toolkit: Gram matrices, signatures, Coxeter diagrams.

Computations in this module are exact over the rationals; no floating point
is used anywhere, so determinants and signatures are certificates rather
than numerical estimates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Signature",
    "GramMatrix",
    "CoxeterDiagram",
    "gram_identity_lorentzian",
    "gram_form_f",
    "gram_hyperbolic_plane",
    "gram_E8",
    "gram_II",
    "is_even",
    "determinant",
    "signature",
    "coxeter_gram",
    "diagram_II17",
]


@dataclass(frozen=True)
class Signature:
    """Counts of positive, negative, and zero eigenvalues of a symmetric
    bilinear form (well defined by Sylvester's law of inertia)."""

    positives: int
    negatives: int
    zeros: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positives, self.negatives, self.zeros)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric matrix with exact rational entries."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise ValueError("Gram matrix must be nonempty")
        for row in self.entries:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
            for x in row:
                if not isinstance(x, Fraction):
                    raise TypeError("entries must be Fractions")
        for i in range(n):
            for j in range(i + 1, n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @property
    def dimension(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Fraction | int]]) -> GramMatrix:
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))


def gram_identity_lorentzian(n: int) -> GramMatrix:
    """diag(-1, 1, ..., 1) with n ones: the odd unimodular form of
    signature (n, 1)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return _diag([-1] + [1] * n)


def gram_form_f(n: int) -> GramMatrix:
    """diag(-3, 1, ..., 1) with n ones: determinant -3, signature (n, 1)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return _diag([-3] + [1] * n)


def _diag(values: Sequence[int]) -> GramMatrix:
    n = len(values)
    return GramMatrix.from_rows(
        [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
    )


def gram_hyperbolic_plane() -> GramMatrix:
    """The rank-2 even unimodular form [[0, 1], [1, 0]]."""
    return GramMatrix.from_rows([[0, 1], [1, 0]])


_E8_EDGES = ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3))


def gram_E8() -> GramMatrix:
    """Gram matrix of the E8 root lattice in a root basis: 2 on the
    diagonal, -1 where two basis roots are adjacent in the diagram."""
    rows = [[0] * 8 for _ in range(8)]
    for i in range(8):
        rows[i][i] = 2
    for i, j in _E8_EDGES:
        rows[i][j] = rows[j][i] = -1
    return GramMatrix.from_rows(rows)


def gram_II(n: int) -> GramMatrix:
    """The even unimodular Lorentzian form of signature (n, 1) as an
    orthogonal sum of one hyperbolic plane and (n-1)/8 copies of E8;
    requires n = 1 mod 8, n >= 9."""
    if n < 9 or n % 8 != 1:
        raise ValueError(f"even unimodular Lorentzian lattices need n = 1 mod 8 and n >= 9, got {n}")
    blocks = [gram_hyperbolic_plane()] + [gram_E8()] * ((n - 1) // 8)
    return _direct_sum(blocks)


def _direct_sum(blocks: Sequence[GramMatrix]) -> GramMatrix:
    total = sum(b.dimension for b in blocks)
    rows = [[Fraction(0)] * total for _ in range(total)]
    offset = 0
    for b in blocks:
        d = b.dimension
        for i in range(d):
            for j in range(d):
                rows[offset + i][offset + j] = b.entries[i][j]
        offset += d
    return GramMatrix(tuple(tuple(row) for row in rows))


def is_even(g: GramMatrix) -> bool:
    """Whether the integral form is even, i.e. every diagonal entry is an
    even integer.  Raises on non-integral matrices, where parity has no
    meaning."""
    for row in g.entries:
        for x in row:
            if x.denominator != 1:
                raise ValueError("evenness is defined only for integral Gram matrices")
    return all(g.entries[i][i] % 2 == 0 for i in range(g.dimension))


def determinant(g: GramMatrix) -> Fraction:
    """Determinant by fraction-free Bareiss elimination with row pivoting."""
    n = g.dimension
    m = [list(row) for row in g.entries]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def signature(g: GramMatrix) -> Signature:
    """Inertia of the form by exact symmetric congruence elimination.

    Diagonalizes PAP^T step by step; when every remaining diagonal entry is
    zero but some off-diagonal (i, j) is not, adding row and column j to i
    manufactures the nonzero diagonal entry 2*a_ij first.
    """
    n = g.dimension
    a = [list(row) for row in g.entries]
    pos = neg = zer = 0
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][i] != 0), None)
        if p is None:
            ij = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                None,
            )
            if ij is None:
                zer += n - k
                break
            i, j = ij
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            p = i  # a[i][i] is now 2*a_ij != 0
        if p != k:
            a[p], a[k] = a[k], a[p]
            for row in a:
                row[p], row[k] = row[k], row[p]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        # Row operations alone keep the trailing block symmetric because the
        # block is symmetric at the start of the step.
        for r in range(k + 1, n):
            f = a[r][k] / d
            if f == 0:
                continue
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
    return Signature(pos, neg, zer)


@dataclass(frozen=True)
class CoxeterDiagram:
    """Coxeter diagram on nodes 0..node_count-1.

    Edges are (i, j, label) with i < j and label >= 3; a missing edge means
    the two generating reflections commute (label 2).
    """

    node_count: int
    edges: frozenset[tuple[int, int, int]]

    def __post_init__(self) -> None:
        if self.node_count < 1:
            raise ValueError("diagram needs at least one node")
        seen = set()
        for i, j, label in self.edges:
            if not (0 <= i < j < self.node_count):
                raise ValueError(f"edge ({i}, {j}) is not an ordered pair of distinct nodes")
            if label < 3:
                raise ValueError(f"edge labels must be >= 3, got {label} on ({i}, {j})")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))

    def degrees(self) -> tuple[int, ...]:
        out = [0] * self.node_count
        for i, j, _ in self.edges:
            out[i] += 1
            out[j] += 1
        return tuple(out)


_COS_VALUES = {3: Fraction(-1, 2)}  # -cos(pi/label) for supported labels


def coxeter_gram(d: CoxeterDiagram) -> GramMatrix:
    """Gram matrix of the unit normal vectors of a Coxeter polytope's
    facets: 1 on the diagonal, -cos(pi/label) for an edge, 0 otherwise.

    Only label 3 is supported, the single case where the cosine is
    rational; anything else would silently lose exactness.
    """
    rows = [[Fraction(0)] * d.node_count for _ in range(d.node_count)]
    for i in range(d.node_count):
        rows[i][i] = Fraction(1)
    for i, j, label in d.edges:
        if label not in _COS_VALUES:
            raise ValueError(f"unsupported edge label {label}: only 3 keeps the Gram matrix rational")
        rows[i][j] = rows[j][i] = _COS_VALUES[label]
    return GramMatrix(tuple(tuple(row) for row in rows))


def diagram_II17() -> CoxeterDiagram:
    """The 19-node diagram of the reflection group of the even unimodular
    Lorentzian lattice in signature (17, 1): a 17-node path with two extra
    nodes attached at the third position from each end."""
    edges = {(i, i + 1, 3) for i in range(16)}
    edges.add((2, 17, 3))
    edges.add((14, 18, 3))
    return CoxeterDiagram(node_count=19, edges=frozenset(edges))
