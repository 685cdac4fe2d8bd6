"""Constructions of balanced complexes, spheres and their connected sums."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from .complex import ComplexError, SimplicialComplex, mask_of, vertices_of


def point_set(n: int) -> SimplicialComplex:
    """``n`` isolated vertices, all of color 0."""
    if n < 1:
        raise ComplexError("a point set needs at least one vertex")
    return SimplicialComplex(n, [1 << v for v in range(n)], [0] * n)


def simplex(d: int) -> SimplicialComplex:
    """The full ``(d-1)``-simplex on ``d`` vertices, vertex ``v`` colored ``v``."""
    if d < 1:
        raise ComplexError("a simplex needs at least one vertex")
    return SimplicialComplex(d, [(1 << d) - 1], list(range(d)))


def clique_complex_multipartite(*sizes: int) -> SimplicialComplex:
    """Clique complex of the complete multipartite graph ``K_{n_1,...,n_d}``.

    Vertices are numbered class by class; class ``l`` gets color ``l``.
    """
    if len(sizes) == 1 and not isinstance(sizes[0], int):
        sizes = tuple(sizes[0])
    if not sizes or any(s < 1 for s in sizes):
        raise ComplexError("need at least one class, each with at least one vertex")
    coloring = [c for c, s in enumerate(sizes) for _ in range(s)]
    offsets = [sum(sizes[:c]) for c in range(len(sizes))]
    facets = [mask_of(off + v for off, v in zip(offsets, pick)) for pick in product(*(range(s) for s in sizes))]
    return SimplicialComplex(sum(sizes), facets, coloring)


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the ``d``-cross-polytope: vertices ``2c`` and ``2c+1`` form pair ``c`` of color ``c``."""
    return clique_complex_multipartite(*([2] * d))


def cone_join(n: int, d: int) -> SimplicialComplex:
    """``n-d+1`` isolated points joined with a ``(d-2)``-simplex.

    The points are vertices ``0..n-d`` with color ``d-1``; the simplex
    vertices follow with colors ``0..d-2``.
    """
    if n < d or d < 1:
        raise ComplexError(f"need n >= d >= 1, got n={n}, d={d}")
    pts = n - d + 1
    base = ((1 << (d - 1)) - 1) << pts
    facets = [base | (1 << v) for v in range(pts)]
    coloring = [d - 1] * pts + list(range(d - 1))
    return SimplicialComplex(n, facets, coloring)


def even_cycle(m: int) -> SimplicialComplex:
    """Cycle on ``2m`` vertices, properly 2-colored."""
    if m < 2:
        raise ComplexError("an even cycle needs m >= 2")
    n = 2 * m
    return SimplicialComplex(n, [(1 << v) | (1 << ((v + 1) % n)) for v in range(n)], [v % 2 for v in range(n)])


def suspension(cx: SimplicialComplex) -> SimplicialComplex:
    """Join with two points; the new pair gets the next color."""
    return cx.join(point_set(2))


# -- connected sums ----------------------------------------------------------------


def _as_mask(face) -> int:
    return face if isinstance(face, int) else mask_of(face)


def connected_sum(
    delta: SimplicialComplex,
    F,
    gamma: SimplicialComplex,
    G,
    phi: Mapping[int, int] | None = None,
) -> SimplicialComplex:
    """Remove facet ``F`` of ``delta`` and ``G`` of ``gamma`` and glue along ``phi: F -> G``.

    ``delta`` keeps its vertex labels; the vertices of ``gamma`` outside
    ``G`` are appended in increasing order. When both complexes are colored,
    ``phi`` must preserve colors; if ``phi`` is omitted it is taken to be
    the color-matching bijection (or the order-preserving one when
    uncolored).
    """
    F, G = _as_mask(F), _as_mask(G)
    if F not in delta.facets:
        raise ComplexError(f"{vertices_of(F)} is not a facet of the first complex")
    if G not in gamma.facets:
        raise ComplexError(f"{vertices_of(G)} is not a facet of the second complex")
    if not (delta.is_pure and gamma.is_pure) or delta.dim != gamma.dim:
        raise ComplexError("connected sum needs pure complexes of equal dimension")
    fv, gv = vertices_of(F), vertices_of(G)
    colored = delta.coloring is not None and gamma.coloring is not None
    if phi is None:
        if colored:
            by_color = {gamma.coloring[w]: w for w in gv}
            phi = {v: by_color[delta.coloring[v]] for v in fv}
        else:
            phi = dict(zip(fv, gv))
    phi = dict(phi)
    if sorted(phi) != list(fv) or sorted(phi.values()) != list(gv):
        raise ComplexError("phi must be a bijection from F onto G")
    if colored and any(delta.coloring[v] != gamma.coloring[w] for v, w in phi.items()):
        raise ComplexError("phi does not preserve colors")

    relabel = {w: v for v, w in phi.items()}
    nxt = delta.n
    for w in range(gamma.n):
        if w not in relabel:
            relabel[w] = nxt
            nxt += 1
    facets = [H for H in delta.facets if H != F]
    for H in gamma.facets:
        if H != G:
            facets.append(mask_of(relabel[w] for w in vertices_of(H)))
    coloring = None
    if colored:
        coloring = list(delta.coloring) + [0] * (nxt - delta.n)
        for w in range(gamma.n):
            coloring[relabel[w]] = gamma.coloring[w]
    return SimplicialComplex(nxt, facets, coloring)


@dataclass
class GluingPlan:
    """How successive cross-polytopes are attached in a stacked sphere.

    ``kind`` is ``"path"`` (glue onto the newest copy, opposite its own
    gluing facet), ``"star"`` (glue every copy onto the first one, at
    facets through vertex 0, so no two gluing sites are opposite) or
    ``"random"`` (a facet drawn uniformly from the current complex with
    ``seed``). ``steps`` overrides all of these with explicit facets, given
    as vertex lists in the labelling of the partial complex.
    """

    kind: str = "path"
    seed: int | None = None
    steps: list[Sequence[int]] = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in ("path", "star", "random"):
            raise ValueError(f"unknown gluing plan {self.kind!r}")


def stacked_cross_polytopal(d: int, k: int, plan: GluingPlan | None = None) -> SimplicialComplex:
    """Connected sum of ``k-1`` copies of the ``d``-cross-polytope boundary, on ``kd`` vertices."""
    if d < 1 or k < 2:
        raise ComplexError(f"need d >= 1 and k >= 2, got d={d}, k={k}")
    plan = plan or GluingPlan()
    copy = cross_polytope_boundary(d)
    even = mask_of(range(0, 2 * d, 2))  # one vertex of each pair
    odd = mask_of(range(1, 2 * d, 2))
    rng = random.Random(plan.seed)
    cx = copy
    last_site = even  # path: the next site is the newest copy's new vertices
    hub = [F for F in copy.facets if F & 1]
    for step in range(k - 2):
        if plan.steps:
            if step >= len(plan.steps):
                raise ComplexError(f"plan has {len(plan.steps)} steps, {k - 2} needed")
            site = mask_of(plan.steps[step])
            if site not in cx.facets:
                raise ComplexError(f"plan step {step} selects {vertices_of(site)}, not a current facet")
        elif plan.kind == "path":
            site = last_site
        elif plan.kind == "star":
            if step >= len(hub):
                raise ComplexError(f"star plan supports at most {len(hub)} glued copies for d={d}")
            site = hub[step]
        else:
            site = rng.choice(sorted(cx.facets))
        n_before = cx.n
        cx = connected_sum(cx, site, copy, odd)
        last_site = mask_of(range(n_before, cx.n))
    return cx


def stacked_sphere(d: int, n: int) -> SimplicialComplex:
    """Stacked ``(d-1)``-sphere on ``n`` vertices; each new vertex subdivides the newest facet."""
    if d < 2:
        raise ComplexError("stacked spheres need d >= 2")
    if n < d + 1:
        raise ComplexError(f"n={n} < d+1={d + 1}")
    full = (1 << (d + 1)) - 1
    facets = [full & ~(1 << v) for v in range(d + 1)]
    site = facets[-1]
    for v in range(d + 1, n):
        facets.remove(site)
        new = [(site & ~(1 << u)) | (1 << v) for u in vertices_of(site)]
        facets.extend(new)
        site = new[-1]
    return SimplicialComplex(n, facets)


def vertex_degrees(cx: SimplicialComplex) -> list[int]:
    """Sorted vertex degrees in the 1-skeleton; a cheap isomorphism invariant."""
    deg = [0] * cx.n
    edges = cx.faces_by_dim[2] if len(cx.faces_by_dim) > 2 else ()
    for e in edges:
        a, b = vertices_of(e)
        deg[a] += 1
        deg[b] += 1
    return sorted(deg)


FAMILIES = ("cross-stacked", "stacked", "clique", "cone-join", "cross-polytope")


def generate(family: str, *, d: int | None = None, k: int | None = None, n: int | None = None,
             sizes: Iterable[int] | None = None, plan: str = "path", seed: int | None = None) -> SimplicialComplex:
    """Build a member of one of the named families from keyword parameters."""

    def need(name, value):
        if value is None:
            raise ValueError(f"family {family!r} needs --{name}")
        return value

    if family == "cross-stacked":
        return stacked_cross_polytopal(need("d", d), need("k", k), GluingPlan(plan, seed))
    if family == "stacked":
        return stacked_sphere(need("d", d), need("n", n))
    if family == "clique":
        return clique_complex_multipartite(*need("sizes", sizes))
    if family == "cone-join":
        return cone_join(need("n", n), need("d", d))
    if family == "cross-polytope":
        return cross_polytope_boundary(need("d", d))
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


__all__ = [
    "FAMILIES",
    "GluingPlan",
    "clique_complex_multipartite",
    "cone_join",
    "connected_sum",
    "cross_polytope_boundary",
    "even_cycle",
    "generate",
    "point_set",
    "simplex",
    "stacked_cross_polytopal",
    "stacked_sphere",
    "suspension",
    "vertex_degrees",
]
