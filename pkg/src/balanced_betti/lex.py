"""Lexicographic monomial order, lex segments and Eliahou-Kervaire counts.

Variables are ``x_1 > x_2 > ... > x_m``; a monomial is its exponent tuple,
so Python tuple comparison *is* the lex order (across degrees as well).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, isqrt
from typing import Iterable, Iterator, Sequence


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero whenever ``b < 0`` or ``a < b``."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True, order=True)
class Monomial:
    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError("exponents must be non-negative")

    @classmethod
    def from_vars(cls, m: int, *indices: int) -> "Monomial":
        """Product of the given 1-based variables, e.g. ``from_vars(8, 2, 5)`` is ``x2*x5``."""
        e = [0] * m
        for i in indices:
            e[i - 1] += 1
        return cls(tuple(e))

    @property
    def nvars(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def max_index(self) -> int:
        """``max(u)``: largest 1-based index of a variable dividing ``u`` (0 for 1)."""
        for k in range(len(self.exps), 0, -1):
            if self.exps[k - 1]:
                return k
        return 0

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k + 1 for k, e in enumerate(self.exps) if e)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __str__(self) -> str:
        parts = []
        for k, e in enumerate(self.exps, start=1):
            if e == 1:
                parts.append(f"x{k}")
            elif e > 1:
                parts.append(f"x{k}^{e}")
        return "*".join(parts) or "1"

    @classmethod
    def parse(cls, text: str, m: int) -> "Monomial":
        e = [0] * m
        text = text.strip()
        if text == "1":
            return cls(tuple(e))
        for part in text.split("*"):
            var, caret, power = part.strip().partition("^")
            if not var.startswith("x") or not var[1:].isdigit() or (caret and not power.isdigit()):
                raise ValueError(f"bad monomial factor {part!r}")
            idx = int(var[1:])
            if not 1 <= idx <= m:
                raise ValueError(f"variable x{idx} outside x1..x{m}")
            e[idx - 1] += int(power) if power else 1
        return cls(tuple(e))


def lex_compare(u: Monomial, v: Monomial) -> int:
    """``1`` if ``u >lex v``, ``-1`` if smaller, ``0`` if equal."""
    if u.nvars != v.nvars:
        raise ValueError(f"variable count mismatch: {u.nvars} vs {v.nvars}")
    return (u.exps > v.exps) - (u.exps < v.exps)


def monomials(m: int, degree: int) -> Iterator[Monomial]:
    """All degree-``degree`` monomials in ``m`` variables, lex-descending."""

    def rec(k: int, left: int) -> Iterator[tuple[int, ...]]:
        if k == m - 1:
            yield (left,)
            return
        for e in range(left, -1, -1):
            for tail in rec(k + 1, left - e):
                yield (e,) + tail

    if m == 0:
        if degree == 0:
            yield Monomial(())
        return
    for t in rec(0, degree):
        yield Monomial(t)


def squarefree_monomials(m: int, degree: int) -> Iterator[Monomial]:
    """Squarefree monomials of a degree, lex-descending."""
    for idx in combinations(range(1, m + 1), degree):
        yield Monomial.from_vars(m, *idx)


class MonomialSet:
    """Monomials grouped by degree, each group kept lex-descending."""

    def __init__(self, items: Iterable[Monomial] = (), nvars: int | None = None):
        self._by_deg: dict[int, list[Monomial]] = {}
        self.nvars = nvars
        for u in items:
            self.add(u)

    def add(self, u: Monomial) -> None:
        if self.nvars is None:
            self.nvars = u.nvars
        elif u.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        group = self._by_deg.setdefault(u.degree, [])
        if u not in group:
            group.append(u)
            group.sort(reverse=True)

    def degree(self, k: int) -> list[Monomial]:
        return list(self._by_deg.get(k, ()))

    def degrees(self) -> list[int]:
        return sorted(k for k, g in self._by_deg.items() if g)

    def __iter__(self) -> Iterator[Monomial]:
        for k in self.degrees():
            yield from self._by_deg[k]

    def __len__(self) -> int:
        return sum(len(g) for g in self._by_deg.values())

    def __contains__(self, u: Monomial) -> bool:
        return u in self._by_deg.get(u.degree, ())

    def __repr__(self) -> str:
        return "MonomialSet{" + ", ".join(str(u) for u in self) + "}"


# -- b-th largest quadrics ---------------------------------------------------


def _max_triangular(t: int) -> int:
    """Largest ``s >= 0`` with ``s(s+1)/2 <= t``."""
    s = (isqrt(8 * t + 1) - 1) // 2
    return s


def bth_largest_deg2(m: int, b: int) -> tuple[int, int]:
    """``(p, q)`` with ``x_p x_q`` the ``b``-th largest degree-2 monomial in ``m`` variables."""
    if not 1 <= b <= comb(m + 1, 2):
        raise ValueError(f"b={b} outside [1, {comb(m + 1, 2)}] for m={m}")
    p = m - _max_triangular(comb(m + 1, 2) - b)
    q = b + (p - 1) * (p - 2 * m) // 2
    return p, q


def bth_largest_sqfree_deg2(m: int, b: int) -> tuple[int, int]:
    """``(p, q)``, ``p < q``, for the ``b``-th largest squarefree quadric in ``m`` variables."""
    if not 1 <= b <= comb(m, 2):
        raise ValueError(f"b={b} outside [1, {comb(m, 2)}] for m={m}")
    p = m - 1 - _max_triangular(comb(m, 2) - b)
    q = b + comb(p + 1, 2) - (p - 1) * m
    return p, q


def lex_segment(m: int, degree: int, count: int) -> MonomialSet:
    """The ``count`` lex-largest monomials of the given degree."""
    total = comb(m + degree - 1, degree) if m else int(degree == 0)
    if not 0 <= count <= total:
        raise ValueError(f"count={count} outside [0, {total}]")
    out = MonomialSet(nvars=m)
    for k, u in enumerate(monomials(m, degree)):
        if k == count:
            break
        out.add(u)
    return out


def squarefree_lex_segment(m: int, degree: int, count: int) -> MonomialSet:
    total = comb(m, degree)
    if not 0 <= count <= total:
        raise ValueError(f"count={count} outside [0, {total}]")
    out = MonomialSet(nvars=m)
    for k, u in enumerate(squarefree_monomials(m, degree)):
        if k == count:
            break
        out.add(u)
    return out


def power_ideal_generators(m: int, degree: int) -> MonomialSet:
    """Minimal generators of ``m^degree``: every monomial of that degree."""
    return MonomialSet(monomials(m, degree), nvars=m)


def minimal_generators(gens: Iterable[Monomial]) -> MonomialSet:
    gens = sorted(set(gens), key=lambda u: (u.degree, tuple(-e for e in u.exps)))
    kept: list[Monomial] = []
    for u in gens:
        if not any(v.divides(u) for v in kept):
            kept.append(u)
    nv = kept[0].nvars if kept else None
    return MonomialSet(kept, nvars=nv)


def lex_plus_power_generators(m: int, b: int, j: int) -> MonomialSet:
    """Minimal generators of ``Lex(b) + m^{j+1}`` where ``Lex(b)`` is a quadric lex segment."""
    seg = list(lex_segment(m, 2, b))
    out = MonomialSet(seg, nvars=m)
    if j + 1 <= 2:
        return minimal_generators(list(seg) + list(monomials(m, j + 1)))
    for u in monomials(m, j + 1):
        if not any(v.divides(u) for v in seg):
            out.add(u)
    return out


# -- stability checks ----------------------------------------------------------


def _in_ideal(u: Monomial, gens: Sequence[Monomial]) -> bool:
    return any(g.divides(u) for g in gens)


def is_stable(gens: Iterable[Monomial]) -> bool:
    """Stable ideal test: ``x_i u / x_max(u)`` lies in the ideal for ``i < max(u)``."""
    gens = list(gens)
    for u in gens:
        mx = u.max_index
        for i in range(1, mx):
            e = list(u.exps)
            e[mx - 1] -= 1
            e[i - 1] += 1
            if not _in_ideal(Monomial(tuple(e)), gens):
                return False
    return True


def is_squarefree_stable(gens: Iterable[Monomial]) -> bool:
    gens = list(gens)
    for u in gens:
        if not u.is_squarefree:
            return False
        mx = u.max_index
        for i in range(1, mx):
            if u.exps[i - 1]:
                continue
            e = list(u.exps)
            e[mx - 1] = 0
            e[i - 1] = 1
            if not _in_ideal(Monomial(tuple(e)), gens):
                return False
    return True


def is_squarefree_lex(gens: Iterable[Monomial], m: int) -> bool:
    """Each degree piece of the squarefree part is an initial lex segment."""
    gens = list(gens)
    if not gens:
        return True
    if any(not u.is_squarefree for u in gens):
        return False
    top = max(u.degree for u in gens)
    for k in range(1, top + 1):
        inside = True
        for v in squarefree_monomials(m, k):
            if _in_ideal(v, gens):
                if not inside:
                    return False
            else:
                inside = False
    return True


# -- Eliahou-Kervaire ------------------------------------------------------------


def ek_betti(gens: Iterable[Monomial], i: int, j: int, *, check: bool = __debug__) -> int:
    """``β_{i,i+j}(S/I)`` for a stable ideal with minimal generators ``gens``."""
    gens = list(gens)
    if check and not is_stable(gens):
        raise ValueError("generators do not span a stable ideal")
    if i == 0:
        return int(j == 0)
    return sum(binom(u.max_index - 1, i - 1) for u in gens if u.degree == j + 1)


def sqfree_ek_betti(gens: Iterable[Monomial], i: int, j: int, *, check: bool = __debug__) -> int:
    """``β_{i,i+j}(S/I)`` for a squarefree stable ideal with minimal generators ``gens``."""
    gens = list(gens)
    for u in gens:
        if not u.is_squarefree:
            raise ValueError(f"{u} is not squarefree")
    if check and not is_squarefree_stable(gens):
        raise ValueError("generators do not span a squarefree stable ideal")
    if i == 0:
        return int(j == 0)
    return sum(binom(u.max_index - j - 1, i - 1) for u in gens if u.degree == j + 1)


def colon_by_face(gens: Iterable[Monomial], F: Sequence[int]) -> list[Monomial] | None:
    """Minimal generators of ``(I : x_F)`` for squarefree ``I``, in the variables off ``F``.

    The result is relabelled to ``m - |F|`` variables keeping their order.
    Returns ``None`` when the colon is the unit ideal.
    """
    gens = list(gens)
    m = gens[0].nvars if gens else None
    Fset = set(F)
    reduced = []
    for u in gens:
        e = [0 if (k + 1) in Fset else x for k, x in enumerate(u.exps)]
        if not any(e):
            return None
        reduced.append(e)
    if m is None:
        return []
    keep = [k for k in range(m) if (k + 1) not in Fset]
    relabelled = [Monomial(tuple(e[k] for k in keep)) for e in reduced]
    return list(minimal_generators(relabelled))


def lex_plus_squares_betti(L: Iterable[Monomial], m: int, i: int, j: int, *, check: bool = __debug__) -> int:
    """``β_{i,i+j}(S/(L + P))`` with ``P = (x_1^2, ..., x_m^2)`` and ``L`` squarefree lex.

    Sums the Betti numbers of the colon ideals ``(L : x_F)`` over all
    ``F`` with ``|F| = k <= j`` in homological degree ``i - k`` and strand
    ``j - k``; each colon is squarefree lex in the variables off ``F`` and is
    evaluated with the squarefree Eliahou-Kervaire count.
    """
    L = list(minimal_generators(L)) if L else []
    if any(u.nvars != m for u in L):
        raise ValueError("variable count mismatch")
    if check and not is_squarefree_lex(L, m):
        raise ValueError("L is not a squarefree lex ideal")
    total = 0
    for k in range(0, j + 1):
        a, s = i - k, j - k
        if a < 0:
            continue
        for F in combinations(range(1, m + 1), k):
            col = colon_by_face(L, F)
            if col is None:
                continue
            if a == 0:
                total += int(s == 0)
            else:
                total += sum(binom(u.max_index - s - 1, a - 1) for u in col if u.degree == s + 1)
    return total


__all__ = [
    "Monomial",
    "MonomialSet",
    "binom",
    "bth_largest_deg2",
    "bth_largest_sqfree_deg2",
    "colon_by_face",
    "ek_betti",
    "is_squarefree_lex",
    "is_squarefree_stable",
    "is_stable",
    "lex_compare",
    "lex_plus_power_generators",
    "lex_plus_squares_betti",
    "lex_segment",
    "minimal_generators",
    "monomials",
    "power_ideal_generators",
    "sqfree_ek_betti",
    "squarefree_lex_segment",
    "squarefree_monomials",
]
