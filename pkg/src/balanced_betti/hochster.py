"""Graded Betti numbers of Stanley-Reisner rings through Hochster's formula.

``β_{i,i+j}`` is the sum over all ``W`` with ``|W| = i + j`` of
``dim H̃_{j-1}(Δ_W)``. Every subset of the vertex set is visited once; the
homology of an induced subcomplex is memoised on its relabelled facet list.
"""

from __future__ import annotations

import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable, Mapping

from .complex import SimplicialComplex, subsets_of, vertices_of
from .homology import GF2, FieldSpec, homology_from_faces

DEFAULT_CAP = 16


class CapExceeded(ValueError):
    pass


@dataclass
class BettiTable:
    """Non-zero graded Betti numbers keyed by ``(i, j)`` for ``β_{i,i+j}``."""

    entries: dict[tuple[int, int], int]
    n: int
    d: int
    field: str = "GF(2)"
    max_j: int | None = None
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, BettiTable):
            return self.entries == other.entries
        if isinstance(other, Mapping):
            return self.entries == {k: v for k, v in other.items() if v}
        return NotImplemented

    @property
    def max_i(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def strands(self) -> int:
        """Largest ``j`` with a non-zero entry."""
        return max((j for _, j in self.entries), default=0)

    def row(self, j: int, length: int | None = None) -> list[int]:
        """``[β_{0,j}, β_{1,1+j}, ...]`` for strand ``j``."""
        length = self.max_i + 1 if length is None else length
        return [self[(i, j)] for i in range(length)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("i,j,beta\n")
        for (i, j) in sorted(self.entries, key=lambda k: (k[1], k[0])):
            buf.write(f"{i},{j},{self.entries[(i, j)]}\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, n: int, d: int, field: str = "GF(2)") -> "BettiTable":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines or lines[0].strip() != "i,j,beta":
            raise ValueError("missing 'i,j,beta' header")
        entries = {}
        for ln in lines[1:]:
            i, j, b = (int(x) for x in ln.split(","))
            entries[(i, j)] = b
        return cls(entries, n, d, field)

    def to_markdown(self) -> str:
        """Rows are strands ``j``, columns homological degrees ``i``."""
        width = self.max_i + 1
        rows = range(0, self.strands + 1)
        head = "| j \\ i | " + " | ".join(str(i) for i in range(width)) + " |"
        sep = "|---" * (width + 1) + "|"
        lines = [head, sep]
        for j in rows:
            lines.append(f"| {j} | " + " | ".join(str(self[(i, j)]) for i in range(width)) + " |")
        return "\n".join(lines) + "\n"


def _compress(mask: int, positions: dict[int, int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= positions[low]
        mask ^= low
    return out


def _faces_from_facets(facets: Iterable[int], top: int) -> list[list[int]]:
    seen: set[int] = set()
    for F in facets:
        seen.update(subsets_of(F))
    groups: list[list[int]] = [[] for _ in range(top + 3)]
    for f in seen:
        k = f.bit_count()
        if k < len(groups):
            groups[k].append(f)
    while len(groups) > 1 and not groups[-1]:
        groups.pop()
    return [sorted(g, key=vertices_of) for g in groups]


def _scan(facets: tuple[int, ...], top: int, p: int | None, start: int, stop: int) -> dict[tuple[int, int], int]:
    """Hochster contributions of every ``W`` in ``range(start, stop)``."""
    field = FieldSpec(p)
    memo: dict[tuple[int, ...], list[int]] = {}
    acc: dict[tuple[int, int], int] = {}
    for W in range(start, stop):
        size = W.bit_count()
        positions = {}
        rest, k = W, 0
        while rest:
            low = rest & -rest
            positions[low] = 1 << k
            rest ^= low
            k += 1
        pieces = {F & W for F in facets}
        key = tuple(sorted(_compress(m, positions) for m in pieces))
        h = memo.get(key)
        if h is None:
            groups = _faces_from_facets(key, top)
            h = homology_from_faces(groups, field, top=top)
            memo[key] = h
        # h[j] = dim H̃_{j-1}
        for j, val in enumerate(h):
            if val and size - j >= 0:
                acc[(size - j, j)] = acc.get((size - j, j), 0) + val
    return acc


def graded_betti(
    cx: SimplicialComplex,
    field: FieldSpec = GF2,
    max_j: int | None = None,
    *,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
) -> BettiTable:
    """Graded Betti numbers ``β_{i,i+j}(F[Δ])`` for all ``j <= max_j``.

    Raises :class:`CapExceeded` when ``cx.n`` exceeds ``cap``; the full
    subset enumeration is exponential in the vertex count.
    """
    if cx.n > cap:
        raise CapExceeded(
            f"{cx.n} vertices exceeds the enumeration cap {cap}; "
            "raise the cap or restrict strands with max_j"
        )
    top_j = cx.dim + 1 if max_j is None else min(max_j, cx.dim + 1)
    top = top_j - 1  # highest homology degree needed
    total = 1 << cx.n
    if threads <= 1 or total < 1024:
        acc = _scan(cx.facets, top, field.p, 0, total)
    else:
        chunks = threads * 4
        step = -(-total // chunks)
        bounds = [(a, min(a + step, total)) for a in range(0, total, step)]
        acc = {}
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_scan, cx.facets, top, field.p, a, b) for a, b in bounds]
            for fut in futures:
                for k, v in fut.result().items():
                    acc[k] = acc.get(k, 0) + v
    return BettiTable(acc, cx.n, cx.d, field.name, max_j=max_j)


def linear_strand(cx: SimplicialComplex, field: FieldSpec = GF2, *, cap: int = 20) -> list[int]:
    """``[β_{0,1}, β_{1,2}, ..., β_{n-1,n}]`` from component counts.

    ``dim H̃_0`` does not depend on the field, so ``field`` is accepted for
    interface symmetry only.
    """
    if cx.n > cap:
        raise CapExceeded(f"{cx.n} vertices exceeds the linear-strand cap {cap}")
    n = cx.n
    adj = [0] * n
    for e in cx.faces_by_dim[2] if len(cx.faces_by_dim) > 2 else ():
        a, b = vertices_of(e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    out = [0] * max(n, 1)
    for W in range(1, 1 << n):
        comps = 0
        rest = W
        while rest:
            low = rest & -rest
            frontier = low
            seen = low
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    lb = f & -f
                    nxt |= adj[lb.bit_length() - 1]
                    f ^= lb
                nxt &= W & ~seen
                seen |= nxt
                frontier = nxt
            rest &= ~seen
            comps += 1
        if comps > 1:
            out[W.bit_count() - 1] += comps - 1
    return out


def check_poincare_duality(table: BettiTable, n: int, d: int) -> bool:
    """``β_{i,i+j} == β_{n-d-i, n-i-j}`` for every entry."""
    keys = set(table.entries)
    keys |= {(n - d - i, d - j) for (i, j) in table.entries}
    for i, j in keys:
        if table[(i, j)] != table[(n - d - i, d - j)]:
            return False
    return True


def hilbert_numerator(f: Iterable[int], n: int) -> list[int]:
    """Coefficients of ``Σ_i f_{i-1} t^i (1-t)^{n-i}``."""
    f = list(f)
    coeffs = [0] * (n + 1)
    for i, fi in enumerate(f):
        for k in range(n - i + 1):
            coeffs[i + k] += fi * comb(n - i, k) * (-1) ** k
    return coeffs


def hilbert_checksum(table: BettiTable, f: Iterable[int]) -> bool:
    """Alternating sums ``Σ_i (-1)^i β_{i,k}`` must match the K-polynomial."""
    expect = hilbert_numerator(f, table.n)
    got = [0] * (table.n + 1)
    for (i, j), v in table.entries.items():
        if i + j <= table.n:
            got[i + j] += (-1) ** i * v
    return got == expect


__all__ = [
    "BettiTable",
    "CapExceeded",
    "DEFAULT_CAP",
    "check_poincare_duality",
    "graded_betti",
    "hilbert_checksum",
    "hilbert_numerator",
    "linear_strand",
]
