"""Closed-form Betti numbers and upper bounds for balanced complexes.

All binomials follow one convention: ``C(a, b) = 0`` when ``b < 0`` or
``a < b``. Several sums below rely on it to drop out-of-range terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .lex import binom, bth_largest_deg2, bth_largest_sqfree_deg2

Lookup = Callable[[int, int], int]


def _check_partition(n: int, d: int, sizes: Sequence[int]) -> None:
    if len(sizes) != d:
        raise ValueError(f"{len(sizes)} color classes given for d={d}")
    if sum(sizes) != n:
        raise ValueError(f"color class sizes sum to {sum(sizes)}, expected n={n}")
    if any(s < 1 for s in sizes):
        raise ValueError("every color class needs at least one vertex")


def elementary_symmetric(values: Sequence[int]) -> list[int]:
    """``[e_0, e_1, ..., e_len]`` of the given integers."""
    e = [1] + [0] * len(values)
    for v in values:
        for k in range(len(e) - 1, 0, -1):
            e[k] += v * e[k - 1]
    return e


def clique_multipartite_f_vector(sizes: Sequence[int]) -> list[int]:
    """``(f_{-1}, ..., f_{d-1})`` of the join of point sets with the given sizes."""
    return elementary_symmetric(sizes)


# -- arbitrary balanced complexes ---------------------------------------------


def bound_general_cm(n: int, d: int, i: int, j: int) -> int:
    """``C(i-1+j, j) C(n-d+j, i+j)``, the bound for any CM complex of dimension ``d-1``."""
    if i < 0 or j < 0:
        raise ValueError("i and j must be non-negative")
    if i == 0:
        return int(j == 0)
    return binom(i - 1 + j, j) * binom(n - d + j, i + j)


def betti_clique_multipartite(sizes: Sequence[int], i: int, j: int, *, printed: bool = False) -> int:
    """``β_{i,i+j}`` of the clique complex of the complete multipartite graph.

    Sums over ``j``-subsets of color classes and compositions
    ``c_1 + ... + c_j = i`` of ``Π c_l C(n_l, c_l + 1)``; evaluated as the
    ``u^j t^i`` coefficient of ``Π_l (1 + u g_l(t))``.

    ``printed=True`` swaps in ``C(n_l, c_l - 1)``, a variant that does not
    match direct computation and is kept only for comparison.
    """
    if i < 0 or j < 0:
        return 0
    shift = -1 if printed else 1
    # table[a][b]: coefficient of u^a t^b
    table = [[0] * (i + 1) for _ in range(j + 1)]
    table[0][0] = 1
    for size in sizes:
        g = [0] + [c * binom(size, c + shift) for c in range(1, i + 1)]
        for a in range(j, 0, -1):
            row, prev = table[a], table[a - 1]
            for b in range(i, 0, -1):
                acc = 0
                for c in range(1, b + 1):
                    if g[c] and prev[b - c]:
                        acc += g[c] * prev[b - c]
                row[b] += acc
    return table[j][i]


def _lookup(base) -> Lookup:
    if callable(base):
        return base
    return lambda a, b: base[(a, b)] if a >= 0 else 0


def skeleton_betti_cm(base, f: Sequence[int], n: int, d: int, s: int, i: int, j: int) -> int:
    """``β_{i,i+j}`` of the ``(d-s-1)``-skeleton of a ``(d-1)``-dim CM complex.

    ``base`` holds the Betti numbers of the complex itself, either as a
    mapping ``(i, j) -> β_{i,i+j}`` (a :class:`BettiTable` works) or a
    callable ``(i, j) -> int``. ``f`` is its f-vector starting at ``f_{-1}``.
    The complex must be Cohen-Macaulay; this is not checked here.
    """
    if len(f) != d + 1 or f[0] != 1:
        raise ValueError(f"expected an f-vector (f_-1, ..., f_{d-1}) of length {d + 1}")
    if not 0 <= s <= d:
        raise ValueError(f"s={s} outside [0, {d}]")
    beta = _lookup(base)
    if i < 0:
        return 0
    if j < d - s:
        return beta(i, j)
    if j > d - s or i > n - d + s:
        return 0
    total = 0
    for k in range(s + 1):
        if i - k >= 0:
            total += (-1 if k % 2 else 1) * beta(i - k, d - s + k)
    for t in range(s):
        sign = -1 if (t - s + 1) % 2 else 1
        total += sign * binom(n - d + t, i - s + t) * f[d - t]
    return total


def bound_any_balanced(sizes: Sequence[int], i: int, j: int) -> int:
    """Bound for any balanced complex with the given color class sizes.

    The Betti numbers of the matching skeleton of the complete multipartite
    clique complex; that complex is the largest balanced one on the
    partition and its skeleta are Cohen-Macaulay.
    """
    d = len(sizes)
    n = sum(sizes)
    if i < 0 or j < 0:
        return 0
    if j == 0:
        return int(i == 0)
    if j > d:
        return 0
    f = clique_multipartite_f_vector(sizes)

    def beta(a: int, b: int) -> int:
        return betti_clique_multipartite(sizes, a, b)

    return skeleton_betti_cm(beta, f, n, d, d - j, i, j)


# -- balanced Cohen-Macaulay complexes -------------------------------------------


def h2_upper_bound(n: int, d: int, sizes: Sequence[int]) -> int:
    """``C(n-d+1, 2) - Σ C(n_i, 2)``: no monochromatic edges caps ``h_2``."""
    _check_partition(n, d, sizes)
    return binom(n - d + 1, 2) - sum(binom(s, 2) for s in sizes)


def bound_cm_deg2(m: int, b: int, i: int, j: int) -> int:
    """Betti bound for ``S/I`` in ``m`` variables with at least ``b`` quadrics in its lex ideal.

    Equals ``β_{i,i+j}(S/(Lex(b) + m^{j+1}))``.
    """
    if j < 2:
        raise ValueError(f"j={j}: the quadric bound needs j >= 2")
    p, q = bth_largest_deg2(m, b)
    first = sum(binom(l - p + j - 1, j) * binom(l - 1, i - 1) for l in range(p + 1, m + 1))
    second = sum(binom(l - q + j - 2, j - 1) * binom(l - 1, i - 1) for l in range(q + 1, m + 1))
    return first + second


def bound_balanced_cm(n: int, d: int, sizes: Sequence[int], i: int, j: int) -> int:
    """Bound for balanced CM complexes using ``b = Σ C(n_i, 2)`` forced quadrics.

    When every class is a singleton there are no forced quadrics; the
    complex is then a simplex and the general CM bound applies.
    """
    _check_partition(n, d, sizes)
    b = sum(binom(s, 2) for s in sizes)
    if b == 0:
        if j < 2:
            raise ValueError(f"j={j}: the quadric bound needs j >= 2")
        return bound_general_cm(n, d, i, j)
    return bound_cm_deg2(n - d, b, i, j)


def bound_lps(m: int, b: int, i: int, j: int) -> int:
    """Betti bound for ``S/(I+P)``, ``P`` the squares, ``b`` forced squarefree quadrics."""
    if i <= 0:
        raise ValueError(f"i={i}: the bound needs i > 0")
    if j < 2:
        raise ValueError(f"j={j}: the bound needs j >= 2")
    p, q = bth_largest_sqfree_deg2(m, b)
    total = 0
    for k in range(j):
        a = binom(m - p, k)
        if a:
            total += a * sum(
                binom(l - p - 1, j - k) * binom(l - j + k - 1, i - k - 1)
                for l in range(p + j - k + 1, m - k + 1)
            )
        a = binom(m - q, k)
        if a:
            total += a * sum(
                binom(l - q - 1, j - k - 1) * binom(l - j + k - 1, i - k - 1)
                for l in range(q + j - k, m - k + 1)
            )
        a = binom(m - q, k - 1)
        if a:
            total += a * sum(
                binom(l - q, j - k) * binom(l - j + k - 1, i - k - 1)
                for l in range(q + j - k, m - k + 1)
            )
    total += binom(m - j, i - j) * (binom(m - p, j) + binom(m - q, j - 1))
    return total


def bound_balanced_cm_lps(n: int, d: int, sizes: Sequence[int], i: int, j: int) -> int:
    """Lex-plus-squares bound for balanced CM complexes, ``b = Σ C(n_i - 1, 2)``.

    Undefined when ``b = 0`` (every class has at most two vertices); a
    :class:`ValueError` is raised in that case.
    """
    _check_partition(n, d, sizes)
    b = sum(binom(s - 1, 2) for s in sizes)
    if b == 0:
        raise ValueError("no forced squarefree quadrics (all color classes have size <= 2)")
    return bound_lps(n - d, b, i, j)


def betti_cone_join_linear(n: int, d: int, i: int) -> int:
    """Linear strand ``i C(n-d+1, i+1)`` of a ``(d-2)``-simplex joined with ``n-d+1`` points."""
    if n < d:
        raise ValueError(f"n={n} < d={d}")
    return i * binom(n - d + 1, i + 1) if i > 0 else 0


# -- pseudomanifolds ------------------------------------------------------------------


def pseudo_quadric_count(n: int, d: int) -> int:
    """Most degree-2 generators the relevant lex ideal can have, ``floor((n-d)(n-2d+2)/2)``."""
    return (n - d) * (n - 2 * d + 2) // 2


def bound_pseudo_linear(n: int, d: int, i: int) -> int:
    """Linear-strand bound for balanced normal pseudomanifolds."""
    if d < 3:
        raise ValueError(f"d={d}: the bound needs d >= 3")
    b = pseudo_quadric_count(n, d)
    if b < 1:
        raise ValueError(f"n={n} is too small for d={d}")
    p, q = bth_largest_deg2(n - d - 1, b)
    return (p - 1) * binom(n - d - 1, i) - binom(p, i + 1) + binom(q, i)


def bound_pseudo_general(n: int, d: int, i: int) -> int:
    """``i C(n-d, i+1)``, the linear-strand bound for any normal pseudomanifold."""
    if d < 3:
        raise ValueError(f"d={d}: the bound needs d >= 3")
    return i * binom(n - d, i + 1) if i > 0 else 0


# -- stacked cross-polytopal spheres ------------------------------------------------


def betti_cross_stacked_closed(k: int, d: int, i: int, j: int) -> int:
    """``β_{i,i+j}`` of a stacked cross-polytopal sphere on ``kd`` vertices."""
    if d < 3 or k < 2:
        raise ValueError(f"need d >= 3 and k >= 2, got d={d}, k={k}")
    top = (k - 1) * d
    if not 0 <= i <= top:
        return 0
    if j == 0:
        return int(i == 0)
    if j == d:
        return int(i == top)
    if j == 1:
        return (
            (k - 2) * binom(d * (k - 1), i + 1)
            - (k - 1) * binom(d * (k - 2), i + 1)
            + d * (k - 1) * binom(d * (k - 2), i - 1)
        )
    if 2 <= j <= d - 2:
        return (k - 1) * binom(d, j) * binom(d * (k - 2), i - j)
    if j == d - 1:
        return (
            (k - 2) * binom(d * (k - 1), i - 1)
            - (k - 1) * binom(d * (k - 2), i - d - 1)
            + d * (k - 1) * binom(d * (k - 2), i - d + 1)
        )
    return 0


def _cross_polytope_betti(d: int, i: int, j: int) -> int:
    return binom(d, i) if i == j else 0


@lru_cache(maxsize=None)
def _recursive(k: int, d: int, i: int, j: int) -> int:
    if i < 0:
        return 0
    if k == 2:
        return _cross_polytope_betti(d, i, j)
    rest = (k - 2) * d  # n - 2d
    prev = sum(binom(d, l) * _recursive(k - 1, d, i - l, j) for l in range(d + 1))
    if j == 1:
        extra = d * binom(rest, i - 1)
        extra += sum(binom(d, l) * binom(rest, i + 1 - l) for l in range(1, min(i, d) + 1))
        return prev + extra
    return prev + binom(d, j) * binom(rest, i - j)


def betti_cross_stacked_recursive(k: int, d: int, i: int, j: int) -> int:
    """``β_{i,i+j}`` by gluing one cross-polytope at a time, for ``1 <= j <= d-2``.

    Strands ``d-1`` and ``d`` follow from duality; see :func:`cross_stacked_table`.
    """
    if d < 3 or k < 2:
        raise ValueError(f"need d >= 3 and k >= 2, got d={d}, k={k}")
    if not 1 <= j <= d - 2:
        raise ValueError(f"j={j} outside the recursion range [1, {d - 2}]")
    return _recursive(k, d, i, j)


def cross_stacked_table(k: int, d: int, method: str = "closed") -> dict[tuple[int, int], int]:
    """Full non-zero Betti table ``{(i, j): β_{i,i+j}}`` on ``kd`` vertices.

    ``method="recursive"`` fills strands ``1..d-2`` by recursion and the rest
    by duality ``β_{i,i+j} = β_{n-d-i, d-j}``; ``"closed"`` uses the closed form.
    """
    top = (k - 1) * d
    out: dict[tuple[int, int], int] = {}
    if method == "closed":
        for j in range(d + 1):
            for i in range(top + 1):
                v = betti_cross_stacked_closed(k, d, i, j)
                if v:
                    out[(i, j)] = v
        return out
    if method != "recursive":
        raise ValueError(f"unknown method {method!r}")
    out[(0, 0)] = 1
    out[(top, d)] = 1
    for j in range(1, d - 1):
        for i in range(top + 1):
            v = betti_cross_stacked_recursive(k, d, i, j)
            if v:
                out[(i, j)] = v
                if d - j >= d - 1:
                    out[(top - i, d - j)] = v
    return out


# -- bound descriptors --------------------------------------------------------------


@dataclass(frozen=True)
class BoundSpec:
    """A named bound bound to its parameters and the hypothesis it needs.

    ``applicability`` is one of ``"balanced"``, ``"balanced-cm"``,
    ``"pseudomanifold"``, ``"balanced-pseudomanifold"``.
    """

    name: str
    params: Mapping = field(default_factory=dict)
    applicability: str = "balanced"

    def __call__(self, i: int, j: int) -> int | None:
        """The bound at ``(i, j)``, or ``None`` where the bound says nothing."""
        p = self.params
        if self.name == "any_balanced":
            return bound_any_balanced(p["sizes"], i, j)
        if self.name == "balanced_cm":
            if j < 2 or i < 0:
                return None
            return bound_balanced_cm(p["n"], p["d"], p["sizes"], i, j)
        if self.name == "balanced_cm_lps":
            if j < 2 or i <= 0:
                return None
            return bound_balanced_cm_lps(p["n"], p["d"], p["sizes"], i, j)
        if self.name == "general_cm":
            if i < 1:
                return None
            return bound_general_cm(p["n"], p["d"], i, j)
        if self.name == "pseudo_linear":
            return bound_pseudo_linear(p["n"], p["d"], i) if j == 1 else None
        if self.name == "pseudo_general":
            return bound_pseudo_general(p["n"], p["d"], i) if j == 1 else None
        raise ValueError(f"unknown bound {self.name!r}")


def applicable_bounds(n: int, d: int, sizes: Sequence[int] | None, tags: set[str]) -> list[BoundSpec]:
    """Every bound whose hypotheses are covered by ``tags``.

    ``tags`` is a subset of ``{"balanced", "cm", "pseudomanifold"}``;
    ``sizes`` are the color class sizes (needed for the balanced bounds).
    """
    out = []
    balanced = "balanced" in tags and sizes is not None
    if balanced:
        _check_partition(n, d, sizes)
        out.append(BoundSpec("any_balanced", {"sizes": tuple(sizes)}, "balanced"))
    if "cm" in tags:
        out.append(BoundSpec("general_cm", {"n": n, "d": d}, "cm"))
        if balanced:
            out.append(BoundSpec("balanced_cm", {"n": n, "d": d, "sizes": tuple(sizes)}, "balanced-cm"))
            if sum(binom(s - 1, 2) for s in sizes):
                out.append(BoundSpec("balanced_cm_lps", {"n": n, "d": d, "sizes": tuple(sizes)}, "balanced-cm"))
    if "pseudomanifold" in tags and d >= 3:
        out.append(BoundSpec("pseudo_general", {"n": n, "d": d}, "pseudomanifold"))
        if balanced and pseudo_quadric_count(n, d) >= 1:
            out.append(BoundSpec("pseudo_linear", {"n": n, "d": d}, "balanced-pseudomanifold"))
    return out


__all__ = [
    "BoundSpec",
    "applicable_bounds",
    "betti_clique_multipartite",
    "betti_cone_join_linear",
    "betti_cross_stacked_closed",
    "betti_cross_stacked_recursive",
    "bound_any_balanced",
    "bound_balanced_cm",
    "bound_balanced_cm_lps",
    "bound_cm_deg2",
    "bound_general_cm",
    "bound_lps",
    "bound_pseudo_general",
    "bound_pseudo_linear",
    "clique_multipartite_f_vector",
    "cross_stacked_table",
    "elementary_symmetric",
    "h2_upper_bound",
    "pseudo_quadric_count",
    "skeleton_betti_cm",
]
