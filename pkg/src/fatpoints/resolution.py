"""Minimal bigraded free resolutions and Betti tables of I_Z.

Two independent routes are provided and are expected to agree:

* :func:`res_recursive` peels one unit off ``m11`` and ``m21`` at a time and
  bottoms out in the two-point resolutions :func:`res_two_collinear` and
  :func:`res_two_noncollinear`;
* :func:`betti_closed` writes every Betti number directly in terms of
  :func:`fatpoints.phi.phi_td`, splitting on ``m11 <= m21`` versus
  ``m11 > m21`` (the latter through the D-set classification).

The low-level builders require a normalized configuration (``m12 >= m21``);
:func:`resolve` and :func:`betti_closed` accept anything and transpose back.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    Bidegree,
    BettiTable,
    ContractError,
    FatPointConfig,
    FatPointsError,
    FreeResolution,
    normalize,
    pos,
)
from .phi import phi_td


def res_two_collinear(m11: int, m12: int) -> FreeResolution:
    """Resolution of ``(x0,x2)^m11 ∩ (x0,x3)^m12``: two points on the line x0 = 0."""
    if m11 < 0 or m12 < 0:
        raise FatPointsError("multiplicities must be nonnegative")
    if m11 == m12 == 0:
        raise FatPointsError("empty configuration")
    top = max(m11, m12)
    gens = [Bidegree(t, pos(m11 - t) + pos(m12 - t)) for t in range(top + 1)]
    syz = [Bidegree(t, pos(m11 - t + 1) + pos(m12 - t + 1)) for t in range(1, top + 1)]
    return FreeResolution((tuple(gens), tuple(syz), ()))


def res_two_noncollinear(m12: int, m21: int) -> FreeResolution:
    """Resolution of ``(x0,x3)^m12 ∩ (x1,x2)^m21``.

    Summands are indexed by tuples ``(a, b, c, d)`` with ``0 <= a, d <= m12``
    and ``0 <= b, c <= m21``; the exponent sums ``a + d`` and ``b + c`` exceed
    ``m12`` and ``m21`` by a total of ``u`` at level ``u``. The twist is
    ``(a + b, c + d)``.
    """
    if m12 < 0 or m21 < 0:
        raise FatPointsError("multiplicities must be nonnegative")
    if m12 == m21 == 0:
        raise FatPointsError("empty configuration")

    def pairs(m, s):
        return [(x, s - x) for x in range(m + 1) if 0 <= s - x <= m]

    def level(excess_ad, excess_bc):
        out = []
        for a, d in pairs(m12, m12 + excess_ad):
            for b, c in pairs(m21, m21 + excess_bc):
                out.append(Bidegree(a + b, c + d))
        return out

    return FreeResolution((
        tuple(level(0, 0)),
        tuple(level(1, 0) + level(0, 1)),
        tuple(level(1, 1)),
    ))


def _a_sets(config: FatPointConfig):
    m11, m12, m21 = config.as_tuple()
    p = pos(m12 - m11)
    s = m11 + m21 + p
    a0 = [Bidegree(s - b, b) for b in range(0, p + 1)]
    a1 = [Bidegree(s + 1 - b, b) for b in range(1, p + 1)]
    a2 = [Bidegree(s + 2 - b, b) for b in range(2, p + 2)]
    return a0, a1, a2


def res_recursive(config) -> FreeResolution:
    """Minimal free resolution of I_Z for a normalized configuration.

    Each step passes from ``Z`` to ``Z1 = (m11-1, m12, m21-1)``, shifts the
    resolution of ``I_{Z1}`` by ``(0, 1)`` and adds the A-set summands.
    """
    config = FatPointConfig.of(config)
    if not config.is_normalized:
        raise ContractError(f"res_recursive needs m12 >= m21, got {config}")
    if config.is_empty:
        return FreeResolution.empty()
    m11, m12, m21 = config.as_tuple()
    if m11 == 0:
        return res_two_noncollinear(m12, m21)
    if m21 == 0:
        return res_two_collinear(m11, m12)

    inner = res_recursive(FatPointConfig(m11 - 1, m12, m21 - 1)).shifted(0, 1)
    a0, a1, a2 = _a_sets(config)
    extra = Bidegree(m11 + m21, pos(m12 - m11) + 1)
    l0, l1, l2 = inner.levels
    return FreeResolution((
        tuple(a0) + l0,
        tuple(a1) * 2 + (extra,) + l1,
        tuple(a2) + l2,
    ))


def resolve(config) -> FreeResolution:
    """Recursive resolution for any configuration, in its own orientation."""
    norm, transposed = normalize(config)
    res = res_recursive(norm)
    return res.transposed() if transposed else res


@dataclass(frozen=True)
class DSetClassification:
    """The four families of generator degrees used when ``m11 > m21``.

    D1 lies on ``a + 2b = m11 + m21``, D2 and D3 on
    ``a + b = max(m11, m12 + m21)``, D4 on ``2a + b = m11 + m12``; each is
    listed by ascending ``b``.
    """

    d1: tuple[Bidegree, ...]
    d2: tuple[Bidegree, ...]
    d3: tuple[Bidegree, ...]
    d4: tuple[Bidegree, ...]

    @property
    def sets(self):
        return (self.d1, self.d2, self.d3, self.d4)

    def union(self) -> frozenset[Bidegree]:
        return frozenset(self.d1 + self.d2 + self.d3 + self.d4)

    def which(self, a: int, b: int) -> int | None:
        """Index 1..4 of the D-set containing (a, b), or None."""
        bd = Bidegree(a, b)
        for k, s in enumerate(self.sets, start=1):
            if bd in s:
                return k
        return None


def d_sets(config) -> DSetClassification:
    config = FatPointConfig.of(config)
    if not config.is_normalized:
        raise ContractError(f"d_sets needs m12 >= m21, got {config}")
    m11, m12, m21 = config.as_tuple()
    if m11 <= m21:
        raise ContractError(f"d_sets applies only when m11 > m21, got {config}")
    bz = config.b_z
    low = pos(-bz) - pos(-bz - m21)
    line = max(m11, m12 + m21)
    top = m21 + abs(bz + m21)

    d1 = [Bidegree(m11 + m21 - 2 * b, b) for b in range(0, low) if m11 + m21 - 2 * b >= 0]
    d2 = [Bidegree(line - b, b) for b in range(low, m21) if line - b >= 0]
    d3 = [Bidegree(line - b, b) for b in range(m21, top + 1) if line - b >= 0]
    d4 = [
        Bidegree((m11 + m12 - b) // 2, b)
        for b in range(top + 1, m11 + m12 + 1)
        if (m11 + m12 - b) % 2 == 0
    ]
    return DSetClassification(tuple(d1), tuple(d2), tuple(d3), tuple(d4))


@lru_cache(maxsize=1024)
def _betti_case_one(config: FatPointConfig) -> BettiTable:
    m11, m12, m21 = config.as_tuple()
    line = m12 + m21

    def b0(a, b):
        if a < 0 or b < 0 or a + b != line:
            return 0
        return pos(min(a, b - m11, m21 - m11) + 1) + phi_td(m12, m12 - m11, b)

    rows = []
    for b in range(line + 1):
        rows.append((0, line - b, b, b0(line - b, b)))
    for b in range(line + 2):
        a = line + 1 - b
        rows.append((1, a, b, pos(b0(a, b - 1) + b0(a - 1, b) - 1)))
    for b in range(line + 3):
        a = line + 2 - b
        rows.append((2, a, b, pos(b0(a - 1, b - 1) - 1)))
    return BettiTable.from_counts(rows)


@lru_cache(maxsize=1024)
def _betti_case_two(config: FatPointConfig) -> BettiTable:
    m11, m12, m21 = config.as_tuple()
    bz = config.b_z
    ds = d_sets(config)
    gens: dict[Bidegree, int] = {}
    for bd in ds.d1:
        gens[bd] = 1
    for bd in ds.d2:
        gens[bd] = phi_td(m21 + bz, bz, bd.b)
    for bd in ds.d3:
        gens[bd] = 1 + phi_td(m21 + bz, bz, bd.b)
    for bd in ds.d4:
        gens[bd] = 1

    def b0(a, b):
        return gens.get(Bidegree(a, b), 0)

    middle = set(ds.d2) | set(ds.d3)
    d1, d4 = set(ds.d1), set(ds.d4)
    rows = [(0, bd.a, bd.b, m) for bd, m in gens.items()]
    # first syzygies sit one step above or to the right of a generator
    candidates = {bd.shifted(0, 1) for bd in gens} | {bd.shifted(1, 0) for bd in gens}
    for a, b in sorted(candidates):
        hits = []
        if (a, b - 1) in d1:
            hits.append(1)
        if (a, b - 1) in middle:
            hits.append(b0(a, b - 1) + b0(a - 1, b) - 1)
        if (a - 1, b) in d4:
            hits.append(1)
        if len(hits) > 1:
            raise RuntimeError(f"overlapping syzygy cases at {(a, b)} for {config}")
        if hits:
            rows.append((1, a, b, hits[0]))
    for bd in middle:
        rows.append((2, bd.a + 1, bd.b + 1, b0(bd.a, bd.b) - 1))
    return BettiTable.from_counts(rows)


def betti_closed(config) -> BettiTable:
    """Betti table of I_Z from the closed formulas, in the caller's orientation."""
    norm, transposed = normalize(config)
    if norm.is_empty:
        return BettiTable()
    if norm.m11 <= norm.m21:
        table = _betti_case_one(norm)
    else:
        table = _betti_case_two(norm)
    return table.transposed() if transposed else table


def betti_recursive(config) -> BettiTable:
    return resolve(config).betti_table()

