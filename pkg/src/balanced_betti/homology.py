"""Reduced simplicial homology over GF(p) and the rationals via exact ranks."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .complex import SimplicialComplex, vertices_of


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``GF(p)`` for a prime ``p < 2**16``, or ``Q`` when ``p`` is None."""

    p: int | None = 2

    def __post_init__(self):
        if self.p is not None and not (_is_prime(self.p) and self.p < 1 << 16):
            raise ValueError(f"GF({self.p}): characteristic must be a prime below 65536")

    @property
    def name(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accept ``gf2``, ``gfP`` for a prime P, or ``qq``."""
        t = text.strip().lower()
        if t in ("qq", "q", "rationals"):
            return cls(None)
        if t.startswith("gf") and t[2:].isdigit():
            return cls(int(t[2:]))
        raise ValueError(f"unknown field {text!r} (expected gf2, gfP or qq)")

    def __str__(self) -> str:
        return self.name


GF2 = FieldSpec(2)
QQ = FieldSpec(None)


@dataclass
class BoundaryMatrix:
    """Sparse boundary map ``C_j -> C_{j-1}`` stored column-wise.

    ``columns[c]`` maps row index to a non-zero integer entry (reduced mod p
    for prime fields). Rows are the ``(j-1)``-faces, columns the ``j``-faces,
    both as bit masks in canonical order.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    columns: list[dict[int, int]]
    field: FieldSpec

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out


def _boundary_columns(lower: Sequence[int], upper: Sequence[int], p: int | None) -> list[dict[int, int]]:
    index = {f: i for i, f in enumerate(lower)}
    cols = []
    for face in upper:
        col: dict[int, int] = {}
        for pos, v in enumerate(vertices_of(face)):
            sign = -1 if pos & 1 else 1
            if p is not None:
                sign %= p
            col[index[face & ~(1 << v)]] = sign
        cols.append(col)
    return cols


def boundary_matrix(cx: SimplicialComplex, j: int, field: FieldSpec = GF2) -> BoundaryMatrix:
    """Matrix of ``∂_j`` from ``j``-faces to ``(j-1)``-faces.

    ``j = 0`` maps vertices onto the empty face (augmented complex); ``j``
    beyond the dimension yields an empty matrix.
    """
    groups = cx.faces_by_dim
    lower = groups[j] if 0 <= j < len(groups) else ()
    upper = groups[j + 1] if 0 <= j + 1 < len(groups) else ()
    return BoundaryMatrix(tuple(lower), tuple(upper), _boundary_columns(lower, upper, field.p), field)


# -- ranks -------------------------------------------------------------------


def _rank_gf2_bits(cols: Sequence[int]) -> int:
    """Rank of bit-packed GF(2) vectors (xor basis keyed by leading bit)."""
    basis: dict[int, int] = {}
    for v in cols:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


def _rank_mod_p(cols: Sequence[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for col in cols:
        col = {r: v % p for r, v in col.items() if v % p}
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(col[low], -1, p)
                pivots[low] = {r: v * inv % p for r, v in col.items()}
                break
            factor = col[low]
            for r, v in piv.items():
                nv = (col.get(r, 0) - factor * v) % p
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
    return len(pivots)


def _rank_integer(cols: Sequence[dict[int, int]]) -> int:
    """Rank over Q by fraction-free elimination, keeping columns primitive."""
    pivots: dict[int, dict[int, int]] = {}
    for col in cols:
        col = {r: v for r, v in col.items() if v}
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                break
            a, b = piv[low], col[low]
            merged: dict[int, int] = {}
            for r in piv.keys() | col.keys():
                nv = a * col.get(r, 0) - b * piv.get(r, 0)
                if nv:
                    merged[r] = nv
            g = 0
            for v in merged.values():
                g = gcd(g, v)
            col = {r: v // g for r, v in merged.items()} if g > 1 else merged
    return len(pivots)


def _columns_from_dense(M: Sequence[Sequence[int]]) -> list[dict[int, int]]:
    if not M:
        return []
    ncols = len(M[0])
    return [{r: M[r][c] for r in range(len(M)) if M[r][c]} for c in range(ncols)]


def matrix_rank(M, field: FieldSpec = GF2) -> int:
    """Exact rank of a :class:`BoundaryMatrix` or a dense integer matrix."""
    cols = M.columns if isinstance(M, BoundaryMatrix) else _columns_from_dense(M)
    if field.p == 2:
        packed = []
        for col in cols:
            v = 0
            for r, x in col.items():
                if x & 1:
                    v |= 1 << r
            packed.append(v)
        return _rank_gf2_bits(packed)
    if field.p is None:
        return _rank_integer(cols)
    return _rank_mod_p(cols, field.p)


# -- homology ----------------------------------------------------------------


def boundary_rank(lower: Sequence[int], upper: Sequence[int], field: FieldSpec) -> int:
    """Rank of the boundary map between two canonical face lists."""
    if not lower or not upper:
        return 0
    if field.p == 2:
        index = {f: i for i, f in enumerate(lower)}
        packed = []
        for face in upper:
            v = 0
            rest = face
            while rest:
                low = rest & -rest
                v |= 1 << index[face ^ low]
                rest ^= low
            packed.append(v)
        return _rank_gf2_bits(packed)
    cols = _boundary_columns(lower, upper, field.p)
    if field.p is None:
        return _rank_integer(cols)
    return _rank_mod_p(cols, field.p)


def homology_from_faces(groups: Sequence[Sequence[int]], field: FieldSpec = GF2, top: int | None = None) -> list[int]:
    """Reduced Betti numbers from faces grouped by size.

    ``groups[k]`` lists the faces with ``k`` vertices, sorted canonically.
    Returns ``[dim H̃_{-1}, dim H̃_0, ...]`` up to ``H̃_{top}`` (default: the
    top dimension present).
    """
    nd = len(groups)
    last = nd - 2 if top is None else top
    ranks = [0] * (last + 3)
    # ranks[k] = rank of the map from k-vertex faces to (k-1)-vertex faces
    for k in range(1, min(last + 3, nd)):
        ranks[k] = boundary_rank(groups[k - 1], groups[k], field)
    out = []
    for k in range(0, last + 2):
        fk = len(groups[k]) if k < nd else 0
        out.append(fk - ranks[k] - ranks[k + 1])
    return out


def reduced_homology_dims(cx: SimplicialComplex, field: FieldSpec = GF2) -> list[int]:
    """``(dim H̃_{-1}, ..., dim H̃_{dim})`` of ``cx`` over ``field``."""
    return homology_from_faces(cx.faces_by_dim, field)


__all__ = [
    "BoundaryMatrix",
    "FieldSpec",
    "GF2",
    "QQ",
    "boundary_matrix",
    "boundary_rank",
    "homology_from_faces",
    "matrix_rank",
    "reduced_homology_dims",
]
