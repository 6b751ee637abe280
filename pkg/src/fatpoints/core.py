"""Shared domain types for fat points on the three-point ACI support of P1 x P1.

The support is fixed once and for all: with ``R = k[x0, x1, x2, x3]`` graded by
``deg x0 = deg x1 = (1, 0)`` and ``deg x2 = deg x3 = (0, 1)``, the three points
have ideals

    I(P11) = (x0, x2),   I(P12) = (x0, x3),   I(P21) = (x1, x2).

P11 and P12 share the (1,0)-form x0, P11 and P21 share the (0,1)-form x2.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple

MAX_MULTIPLICITY = 10**6


class FatPointsError(ValueError):
    """Bad input at the API boundary (negative or oversized multiplicities...)."""


class ContractError(FatPointsError):
    """A routine was called outside its documented domain."""


class Bidegree(NamedTuple):
    a: int
    b: int

    def transposed(self) -> "Bidegree":
        return Bidegree(self.b, self.a)

    def shifted(self, da: int, db: int) -> "Bidegree":
        return Bidegree(self.a + da, self.b + db)


def pos(n: int) -> int:
    """``(n)_+ = max(n, 0)``."""
    return n if n > 0 else 0


def binom2(m: int) -> int:
    """Number of conditions imposed by a fat point of multiplicity m, C(m+1, 2)."""
    return m * (m + 1) // 2


@dataclass(frozen=True)
class FatPointConfig:
    m11: int
    m12: int
    m21: int

    def __post_init__(self):
        for name in ("m11", "m12", "m21"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise FatPointsError(f"{name} must be an integer, got {v!r}")
            if v < 0:
                raise FatPointsError(f"{name} must be nonnegative, got {v}")
            if v > MAX_MULTIPLICITY:
                raise FatPointsError(f"{name}={v} exceeds the cap {MAX_MULTIPLICITY}")

    @classmethod
    def of(cls, config: "FatPointConfig | Iterable[int]") -> "FatPointConfig":
        if isinstance(config, cls):
            return config
        m = tuple(config)
        if len(m) != 3:
            raise FatPointsError(f"expected three multiplicities, got {len(m)}")
        return cls(*m)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m11, self.m12, self.m21)

    @property
    def is_empty(self) -> bool:
        return self.m11 == self.m12 == self.m21 == 0

    @property
    def is_normalized(self) -> bool:
        return self.m12 >= self.m21

    @property
    def b_z(self) -> int:
        """``m12 - m11``, the integer that drives the D-set classification."""
        return self.m12 - self.m11

    @property
    def degree(self) -> int:
        """Length of the scheme: the eventual constant value of the Hilbert function."""
        return binom2(self.m11) + binom2(self.m12) + binom2(self.m21)

    @property
    def stabilization_bound(self) -> int:
        return self.m11 + self.m12 + self.m21

    def swapped(self) -> "FatPointConfig":
        return FatPointConfig(self.m11, self.m21, self.m12)

    def __str__(self):
        return f"({self.m11},{self.m12},{self.m21})"


def normalize(config) -> tuple[FatPointConfig, bool]:
    """Bring a configuration to ``m12 >= m21``.

    Swapping P12 and P21 exchanges the two P1 factors, so when ``transposed``
    is true every bidegree computed for the returned config must be read as
    ``(b, a)`` for the original one.
    """
    config = FatPointConfig.of(config)
    if config.m12 >= config.m21:
        return config, False
    return config.swapped(), True


BettiKey = tuple[int, Bidegree]


@dataclass(frozen=True)
class BettiTable:
    """Nonzero bigraded Betti numbers of a fat point ideal.

    ``u`` is the homological index over the ideal: 0 for minimal generators,
    1 for first syzygies, 2 for second syzygies.
    """

    entries: Mapping[BettiKey, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (u, bd), mult in self.entries.items():
            if u not in (0, 1, 2):
                raise ContractError(f"homological index {u} out of range")
            if mult < 0:
                raise ContractError(f"negative Betti number at {(u, bd)}")
            if mult:
                clean[(u, Bidegree(*bd))] = mult
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    @classmethod
    def from_counts(cls, counts: Iterable[tuple[int, int, int, int]]) -> "BettiTable":
        """Build from ``(u, a, b, mult)`` rows; repeated keys are summed."""
        acc: Counter = Counter()
        for u, a, b, mult in counts:
            acc[(u, Bidegree(a, b))] += mult
        return cls(dict(acc))

    def __getitem__(self, key) -> int:
        u, a, b = key
        return self.entries.get((u, Bidegree(a, b)), 0)

    def __iter__(self) -> Iterator[tuple[int, int, int, int]]:
        for (u, bd), mult in self.entries.items():
            yield u, bd.a, bd.b, mult

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(tuple(self.entries.items()))

    def level(self, u: int) -> dict[Bidegree, int]:
        return {bd: m for (v, bd), m in self.entries.items() if v == u}

    def total(self, u: int) -> int:
        return sum(self.level(u).values())

    def transposed(self) -> "BettiTable":
        return BettiTable({(u, bd.transposed()): m for (u, bd), m in self.entries.items()})

    def rows(self) -> list[tuple[int, int, int, int]]:
        return list(self)

    def __repr__(self):
        body = ", ".join(f"{u}:({a},{b})={m}" for u, a, b, m in self)
        return f"BettiTable({body})"


@dataclass(frozen=True)
class FreeResolution:
    """Twists of a minimal bigraded free resolution ``0 -> L2 -> L1 -> L0 -> I``.

    ``levels[u]`` lists the shifts ``(a, b)`` of the summands ``R(-a, -b)`` of
    ``L_u``, with repetition, sorted lexicographically.
    """

    levels: tuple[tuple[Bidegree, ...], tuple[Bidegree, ...], tuple[Bidegree, ...]]

    def __post_init__(self):
        if len(self.levels) != 3:
            raise ContractError("a resolution here has exactly three levels")
        lv = tuple(tuple(sorted(Bidegree(*s) for s in level)) for level in self.levels)
        object.__setattr__(self, "levels", lv)

    @classmethod
    def empty(cls) -> "FreeResolution":
        return cls(((), (), ()))

    def betti_table(self) -> BettiTable:
        return BettiTable.from_counts((u, s.a, s.b, 1) for u, level in enumerate(self.levels) for s in level)

    def shifted(self, da: int, db: int) -> "FreeResolution":
        return FreeResolution(tuple(tuple(s.shifted(da, db) for s in level) for level in self.levels))

    def transposed(self) -> "FreeResolution":
        return FreeResolution(tuple(tuple(s.transposed() for s in level) for level in self.levels))

    def ranks(self) -> tuple[int, int, int]:
        return tuple(len(level) for level in self.levels)


@dataclass(frozen=True)
class DeltaMatrix:
    """A finite window of first differences of a bigraded Hilbert function.

    Layout follows the usual printed tables: ``rows[i][j] = DeltaH(a=j, b=i)``,
    i.e. the row index runs over the second coordinate. Entries outside the
    stored rectangle are zero, so the last row and last column must vanish.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise FatPointsError("empty matrix")
        width = len(rows[0])
        for k, r in enumerate(rows):
            if len(r) != width:
                raise FatPointsError(f"ragged matrix: row {k} has {len(r)} entries, expected {width}")
            for v in r:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise FatPointsError(f"non-integer entry {v!r} in row {k}")
        if any(rows[-1]) or any(r[-1] for r in rows):
            raise FatPointsError("last row and last column must be zero (pad the matrix with zeros)")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def at(self, a: int, b: int) -> int:
        """Value at bidegree ``(a, b)``, zero outside the window."""
        n_rows, n_cols = self.shape
        if 0 <= b < n_rows and 0 <= a < n_cols:
            return self.rows[b][a]
        return 0

    def padded(self, n_rows: int, n_cols: int) -> "DeltaMatrix":
        r0, c0 = self.shape
        n_rows, n_cols = max(n_rows, r0), max(n_cols, c0)
        return DeltaMatrix(tuple(
            tuple(self.rows[i][j] if i < r0 and j < c0 else 0 for j in range(n_cols))
            for i in range(n_rows)
        ))

    def total(self) -> int:
        return sum(map(sum, self.rows))

    def __str__(self):
        return "\n".join(" ".join(f"{v:3d}" for v in r) for r in self.rows)
