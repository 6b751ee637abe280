"""Brute-force verification path that never looks at the Betti formulas.

I_Z is built as an explicit monomial ideal and its Betti numbers are read off
the Taylor complex: for each multidegree ``alpha`` the subsets ``S`` of the
generators with ``lcm(S) = x^alpha`` span a small complex of vector spaces
whose homology in position ``u + 1`` is ``beta_{u, alpha}`` of the ideal.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .core import BettiTable, FatPointConfig, FatPointsError

TAYLOR_GENERATOR_CAP = 27


class OracleScaleError(FatPointsError):
    pass


class Monomial4(NamedTuple):
    """Exponent vector of ``x0^e0 x1^e1 x2^e2 x3^e3``."""

    e0: int
    e1: int
    e2: int
    e3: int

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.e0 + self.e1, self.e2 + self.e3)

    def divides(self, other: "Monomial4") -> bool:
        return all(x <= y for x, y in zip(self, other))

    def lcm(self, other: "Monomial4") -> "Monomial4":
        return Monomial4(*(max(x, y) for x, y in zip(self, other)))

    def __str__(self):
        parts = [f"x{k}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(self) if e]
        return "*".join(parts) or "1"


ONE = Monomial4(0, 0, 0, 0)


def minimalize(monomials: Iterable[Monomial4]) -> tuple[Monomial4, ...]:
    """Drop every monomial divisible by another one; sort the survivors."""
    pool = sorted(set(monomials), key=sum)
    kept: list[Monomial4] = []
    for m in pool:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    gens: tuple[Monomial4, ...]
    unit: bool = False

    def __post_init__(self):
        object.__setattr__(self, "gens", minimalize(Monomial4(*g) for g in self.gens))

    def __len__(self):
        return len(self.gens)

    def contains(self, m: Sequence[int]) -> bool:
        m = Monomial4(*m)
        return any(g.divides(m) for g in self.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(tuple(g.lcm(h) for g in self.gens for h in other.gens))

    def bidegree_census(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for g in self.gens:
            out[g.bidegree] += 1
        return dict(sorted(out.items()))


def power_of_point(m: int, u: int, v: int) -> MonomialIdeal:
    """``(x_u, x_v)^m`` as a monomial ideal."""
    gens = []
    for s in range(m + 1):
        e = [0, 0, 0, 0]
        e[u], e[v] = s, m - s
        gens.append(Monomial4(*e))
    return MonomialIdeal(tuple(gens))


# variable pairs cutting out P11, P12, P21
POINT_VARIABLES = {"m11": (0, 2), "m12": (0, 3), "m21": (1, 2)}


def fat_point_ideal(config) -> MonomialIdeal:
    config = FatPointConfig.of(config)
    if config.is_empty:
        warnings.warn("empty configuration: returning the unit ideal", stacklevel=2)
        return MonomialIdeal((ONE,), unit=True)
    ideal = MonomialIdeal((ONE,))
    for name, (u, v) in POINT_VARIABLES.items():
        m = getattr(config, name)
        if m:
            ideal = ideal.intersect(power_of_point(m, u, v))
    return ideal


def dim_bidegree(ideal: MonomialIdeal, a: int, b: int) -> int:
    """Number of monomials of bidegree (a, b) lying in the ideal.

    For a fixed x0-exponent i, the generator g divides ``x0^i x1^(a-i) x2^j x3^(b-j)``
    exactly for j in ``[g2, b - g3]``; the count is the size of the union of
    those intervals.
    """
    if a < 0 or b < 0:
        return 0
    gens = [g for g in ideal.gens if g.e0 + g.e1 <= a and g.e2 + g.e3 <= b]
    total = 0
    for i in range(a + 1):
        spans = sorted((g.e2, b - g.e3) for g in gens if g.e0 <= i and g.e1 <= a - i)
        reach = -1
        for lo, hi in spans:
            if hi > reach:
                total += hi - max(lo, reach + 1) + 1
                reach = hi
    return total


def rank_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Pivots are chosen with the smallest nonzero absolute value in the column;
    every division is exact, so only Python integers are involved.
    """
    rows = [[int(x) for x in r] for r in matrix]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank, prev = 0, 1
    for col in range(n_cols):
        live = [r for r in range(rank, n_rows) if rows[r][col]]
        if not live:
            continue
        piv = min(live, key=lambda r: abs(rows[r][col]))
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        top = rows[rank]
        for r in range(rank + 1, n_rows):
            row = rows[r]
            f = row[col]
            for c in range(col + 1, n_cols):
                row[c] = (p * row[c] - f * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def _strand_differential(sources, targets, lcm_of):
    """Matrix of d_p restricted to one multidegree, targets x sources."""
    index = {t: k for k, t in enumerate(targets)}
    mat = [[0] * len(sources) for _ in targets]
    for col, s in enumerate(sources):
        full = lcm_of[s]
        for pos_, _ in enumerate(s):
            face = s[:pos_] + s[pos_ + 1:]
            if face in index and lcm_of[face] == full:
                mat[index[face]][col] = -1 if pos_ % 2 else 1
    return mat


@dataclass(frozen=True)
class TaylorReport:
    table: BettiTable
    strands: int
    vanishing_checked: bool


def taylor_strands(ideal: MonomialIdeal, max_size: int):
    """Group the subsets of generators (sizes 1..max_size) by their lcm."""
    gens = ideal.gens
    lcm_of: dict[tuple[int, ...], Monomial4] = {}
    strands: dict[Monomial4, dict[int, list]] = defaultdict(lambda: defaultdict(list))
    for size in range(1, max_size + 1):
        for subset in combinations(range(len(gens)), size):
            if size == 1:
                m = gens[subset[0]]
            else:
                m = lcm_of[subset[:-1]].lcm(gens[subset[-1]])
            lcm_of[subset] = m
            strands[m][size].append(subset)
    return strands, lcm_of


def taylor_betti_report(ideal: MonomialIdeal, max_level: int = 2,
                        check_vanishing: bool = False) -> TaylorReport:
    if ideal.unit:
        return TaylorReport(BettiTable(), 0, False)
    g = len(ideal.gens)
    if g > TAYLOR_GENERATOR_CAP:
        raise OracleScaleError(f"oracle scale exceeded: {g} generators > {TAYLOR_GENERATOR_CAP}")
    if not 0 <= max_level <= 2:
        raise ValueError("max_level must be 0, 1 or 2")
    top = max_level + 2 + (1 if check_vanishing else 0)
    strands, lcm_of = taylor_strands(ideal, top)

    counts = []
    for alpha, by_size in strands.items():
        if not any(by_size.get(p) for p in range(1, max_level + 2)) and not check_vanishing:
            continue
        ranks = {1: 0}
        for p in range(2, top + 1):
            src, tgt = by_size.get(p, []), by_size.get(p - 1, [])
            ranks[p] = rank_exact(_strand_differential(src, tgt, lcm_of)) if src and tgt else 0
        ranks[top + 1] = 0
        bideg = alpha.bidegree
        for p in range(1, max_level + 2):
            h = len(by_size.get(p, [])) - ranks[p] - ranks[p + 1]
            if h:
                counts.append((p - 1, bideg[0], bideg[1], h))
        if check_vanishing:
            p = max_level + 2
            # H_p is exact here: im d_{p+1} is included because subsets of size p+1 were built
            h = len(by_size.get(p, [])) - ranks[p] - ranks[p + 1]
            if h:
                raise RuntimeError(f"Taylor strand at {alpha} has H_{p} of dimension {h}; "
                                   "the resolution is longer than expected")
    return TaylorReport(BettiTable.from_counts(counts), len(strands), check_vanishing)


def taylor_betti(ideal: MonomialIdeal, max_level: int = 2) -> BettiTable:
    """Betti numbers of a monomial ideal from Taylor strand homology."""
    return taylor_betti_report(ideal, max_level).table


def oracle_betti(config) -> BettiTable:
    return taylor_betti(fat_point_ideal(config))
