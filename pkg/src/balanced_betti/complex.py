"""Finite abstract simplicial complexes on at most 63 vertices.

Faces are stored as integer bit masks over the vertex set ``{0, ..., n-1}``.
A complex is immutable once built; the face lattice is enumerated lazily on
first use and cached on the instance.
"""

from __future__ import annotations

import warnings
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

MAX_VERTICES = 63


class ComplexError(ValueError):
    """Raised for malformed complexes or invalid operations on them."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def subsets_of(mask: int):
    """Yield every submask of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of a family of masks, sorted canonically."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return sorted(kept, key=vertices_of)


class SimplicialComplex:
    """A simplicial complex given by its facets.

    Parameters
    ----------
    n : int
        Number of vertices; every vertex in ``range(n)`` must lie in a facet.
    facets : iterable of int
        Facet bit masks. Non-maximal sets are dropped.
    coloring : sequence of int, optional
        Color of each vertex. Colors must lie in ``range(dim + 1)`` and no
        face may contain two vertices of the same color.

    The complex ``{∅}`` (no vertices) is represented with ``n == 0``.
    """

    __slots__ = ("n", "facets", "coloring", "__dict__")

    def __init__(self, n: int, facets: Iterable[int], coloring: Sequence[int] | None = None):
        if not 0 <= n <= MAX_VERTICES:
            raise ComplexError(f"vertex count must be in [0, {MAX_VERTICES}], got {n}")
        facets = list(facets)
        if not facets:
            raise ComplexError("a complex needs at least one facet")
        full = (1 << n) - 1
        for F in facets:
            if F < 0 or F & ~full:
                raise ComplexError(f"facet {vertices_of(F)} uses a vertex outside [0, {n})")
        self.n = n
        self.facets: tuple[int, ...] = tuple(maximal_sets(facets))
        covered = 0
        for F in self.facets:
            covered |= F
        if covered != full:
            missing = vertices_of(full & ~covered)
            raise ComplexError(f"vertices {missing} lie in no facet")
        if coloring is not None:
            coloring = tuple(int(c) for c in coloring)
            if len(coloring) != n:
                raise ComplexError(f"coloring has {len(coloring)} entries for {n} vertices")
            d = self.dim + 1
            if any(c < 0 or c >= d for c in coloring):
                raise ComplexError(f"colors must lie in [0, {d})")
            for F in self.facets:
                colors = [coloring[v] for v in vertices_of(F)]
                if len(set(colors)) != len(colors):
                    raise ComplexError(
                        f"facet {vertices_of(F)} meets a color class twice (monochromatic edge)"
                    )
        self.coloring: tuple[int, ...] | None = coloring

    # -- construction -----------------------------------------------------

    @classmethod
    def from_facets(
        cls,
        n: int,
        facets: Iterable[Sequence[int]],
        coloring: Sequence[int] | None = None,
    ) -> "SimplicialComplex":
        masks = []
        for F in facets:
            F = list(F)
            if len(set(F)) != len(F):
                raise ComplexError(f"facet {F} repeats a vertex")
            for v in F:
                if not 0 <= v < n:
                    raise ComplexError(f"vertex {v} out of range [0, {n})")
            masks.append(mask_of(F))
        return cls(n, masks, coloring)

    # -- basic data -------------------------------------------------------

    @cached_property
    def dim(self) -> int:
        return max(F.bit_count() for F in self.facets) - 1

    @property
    def d(self) -> int:
        """Krull dimension of the face ring, i.e. ``dim + 1``."""
        return self.dim + 1

    @cached_property
    def is_pure(self) -> bool:
        return len({F.bit_count() for F in self.facets}) == 1

    def facet_lists(self) -> list[list[int]]:
        return [list(vertices_of(F)) for F in self.facets]

    @cached_property
    def faces_by_dim(self) -> tuple[tuple[int, ...], ...]:
        """All faces grouped by dimension; entry ``k`` holds the ``(k-1)``-faces.

        Within each group faces are sorted as vertex tuples, which fixes the
        sign conventions of boundary matrices.
        """
        seen: set[int] = set()
        for F in self.facets:
            seen.update(subsets_of(F))
        groups: list[list[int]] = [[] for _ in range(self.dim + 2)]
        for f in seen:
            groups[f.bit_count()].append(f)
        return tuple(tuple(sorted(g, key=vertices_of)) for g in groups)

    @cached_property
    def face_set(self) -> frozenset[int]:
        return frozenset(f for g in self.faces_by_dim for f in g)

    def __contains__(self, face) -> bool:
        if not isinstance(face, int):
            face = mask_of(face)
        return face in self.face_set

    def f_vector(self) -> tuple[int, ...]:
        """``(f_{-1}, f_0, ..., f_{dim})``."""
        return tuple(len(g) for g in self.faces_by_dim)

    def h_vector(self) -> tuple[int, ...]:
        if not self.is_pure:
            warnings.warn("h-vector of a non-pure complex", stacklevel=2)
        f = self.f_vector()
        d = self.d
        return tuple(
            sum((-1) ** (j - i) * comb(d - i, d - j) * f[i] for i in range(j + 1))
            for j in range(d + 1)
        )

    def color_class_sizes(self) -> tuple[int, ...]:
        if self.coloring is None:
            raise ComplexError("complex carries no coloring")
        sizes = [0] * self.d
        for c in self.coloring:
            sizes[c] += 1
        return tuple(sizes)

    # -- derived complexes ------------------------------------------------

    def skeleton(self, j: int) -> "SimplicialComplex":
        if not 0 <= j <= self.dim:
            raise ComplexError(f"skeleton index {j} outside [0, {self.dim}]")
        faces = [f for g in self.faces_by_dim[: j + 2] for f in g]
        coloring = self.coloring
        if coloring is not None and any(c > j for c in coloring):
            coloring = None  # d colors no longer form a balanced partition
        return SimplicialComplex(self.n, faces, coloring)

    def induced(self, W: int | Iterable[int]) -> "SimplicialComplex":
        """The induced subcomplex on ``W``, relabelled to ``0..|W|-1`` in order."""
        if not isinstance(W, int):
            W = mask_of(W)
        if W & ~((1 << self.n) - 1):
            raise ComplexError("induced: W is not a subset of the vertex set")
        keep = vertices_of(W)
        facets = maximal_sets(F & W for F in self.facets)
        return self._relabelled(keep, facets)

    def link(self, F: int | Iterable[int]) -> "SimplicialComplex":
        """``lk(F)`` relabelled to consecutive vertices in increasing order."""
        if not isinstance(F, int):
            F = mask_of(F)
        if F not in self.face_set:
            raise ComplexError(f"{vertices_of(F)} is not a face")
        pieces = maximal_sets(G & ~F for G in self.facets if G & F == F)
        support = 0
        for G in pieces:
            support |= G
        return self._relabelled(vertices_of(support), pieces)

    def _relabelled(self, keep: Sequence[int], facets: Iterable[int]) -> "SimplicialComplex":
        pos = {v: i for i, v in enumerate(keep)}
        new = [mask_of(pos[v] for v in vertices_of(G)) for G in facets]
        coloring = None
        if self.coloring is not None:
            coloring = [self.coloring[v] for v in keep]
        try:
            return SimplicialComplex(len(keep), new, coloring)
        except ComplexError:
            # colors may exceed the smaller dimension; drop the partition
            return SimplicialComplex(len(keep), new)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        shift = self.n
        facets = [F | (G << shift) for F in self.facets for G in other.facets]
        coloring = None
        if self.coloring is not None and other.coloring is not None:
            coloring = list(self.coloring) + [c + self.d for c in other.coloring]
        return SimplicialComplex(self.n + other.n, facets, coloring)

    # -- predicates -------------------------------------------------------

    def is_balanced(self) -> bool:
        if self.coloring is None:
            raise ComplexError("is_balanced needs a coloring")
        col = self.coloring
        d = self.d
        if any(not 0 <= c < d for c in col):
            return False
        for F in self.facets:
            cs = [col[v] for v in vertices_of(F)]
            if len(set(cs)) != len(cs):
                return False
        return True

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for F in self.facets:
            vs = vertices_of(F)
            for v in vs[1:]:
                parent[find(v)] = find(vs[0])
        return len({find(v) for v in range(self.n)}) == 1

    def is_normal_pseudomanifold(self) -> bool:
        if not self.is_pure or self.dim < 1:
            return False
        if not self.is_connected():
            return False
        d = self.d
        ridge_count: dict[int, int] = {}
        for F in self.facets:
            for v in vertices_of(F):
                r = F & ~(1 << v)
                ridge_count[r] = ridge_count.get(r, 0) + 1
        if any(c != 2 for c in ridge_count.values()):
            return False
        if len(ridge_count) != len(self.faces_by_dim[d - 1]):
            return False
        for k in range(1, d - 1):  # faces of dimension 0..d-3
            for f in self.faces_by_dim[k]:
                if not self.link(f).is_connected():
                    return False
        return True

    def is_cohen_macaulay(self, field=None) -> bool:
        """Reisner's criterion: every link has homology only in top degree."""
        from .homology import GF2, reduced_homology_dims

        field = GF2 if field is None else field
        for group in self.faces_by_dim:
            for f in group:
                lk = self.link(f)
                h = reduced_homology_dims(lk, field)
                # h[k] is H̃_{k-1}; require vanishing for k-1 < dim lk
                if any(h[k] for k in range(lk.dim + 1)):
                    return False
        return True

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.n, self.facets, self.coloring) == (other.n, other.facets, other.coloring)

    def __hash__(self) -> int:
        return hash((self.n, self.facets, self.coloring))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, dim={self.dim}, facets={len(self.facets)})"


def from_facets(n, facets, coloring=None) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, facets, coloring)


def propose_coloring(cx: SimplicialComplex) -> list[int] | None:
    """Search for a proper ``d``-coloring of the 1-skeleton (``d = dim + 1``).

    Exhaustive backtracking; returns ``None`` when the complex admits no
    balanced partition. Intended for small inputs only.
    """
    d = cx.d
    adj = [0] * cx.n
    for e in cx.faces_by_dim[2] if len(cx.faces_by_dim) > 2 else ():
        a, b = vertices_of(e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    order = sorted(range(cx.n), key=lambda v: -adj[v].bit_count())
    colors = [-1] * cx.n

    def place(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        used = {colors[u] for u in vertices_of(adj[v]) if colors[u] >= 0}
        for c in range(d):
            if c not in used:
                colors[v] = c
                if place(k + 1):
                    return True
        colors[v] = -1
        return False

    return colors if place(0) else None


def clique_complex(n: int, edges: Iterable[tuple[int, int]]) -> SimplicialComplex:
    """Flag complex of a graph on ``range(n)``. Brute force; small graphs only."""
    adj = [0] * n
    for a, b in edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    cliques: list[int] = []

    def grow(clique: int, cand: int, excl: int):
        if cand == 0 and excl == 0:
            cliques.append(clique)
            return
        for v in vertices_of(cand):
            bit = 1 << v
            grow(clique | bit, cand & adj[v], excl & adj[v])
            cand &= ~bit
            excl |= bit

    grow(0, (1 << n) - 1, 0)
    return SimplicialComplex(n, cliques)


__all__ = [
    "ComplexError",
    "MAX_VERTICES",
    "SimplicialComplex",
    "clique_complex",
    "from_facets",
    "mask_of",
    "maximal_sets",
    "propose_coloring",
    "subsets_of",
    "vertices_of",
]
