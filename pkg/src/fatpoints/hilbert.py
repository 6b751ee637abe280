"""Hilbert functions H_Z(a, b) and their first differences.

Three routes, kept independent of each other:

* :func:`hilbert_from_betti` - alternating sum over a Betti table;
* :func:`hilbert_direct` - counting the monomials of bidegree (a, b) outside I_Z;
* :func:`delta_closed` - the piecewise description of the first difference
  in terms of generator degrees only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .core import (
    Bidegree,
    BettiTable,
    ContractError,
    DeltaMatrix,
    FatPointConfig,
    normalize,
)
from .resolution import betti_closed, betti_recursive, d_sets


def hilbert_from_betti(table: BettiTable, a: int, b: int) -> int:
    """H(a, b) of R/I from the Betti numbers of a proper ideal I."""
    if a < 0 or b < 0:
        return 0
    h = (a + 1) * (b + 1)
    for u, i, j, mult in table:
        if i <= a and j <= b:
            h -= (-1) ** u * mult * (a - i + 1) * (b - j + 1)
    return h


def hilbert_direct(config, a: int, b: int) -> int:
    """H(a, b) by counting monomials ``x0^i x1^(a-i) x2^j x3^(b-j)`` not in I_Z.

    Membership in the monomial ideal I_Z is the three exponent inequalities
    ``i + j >= m11``, ``i + (b - j) >= m12`` and ``(a - i) + j >= m21``; for
    fixed i the admissible j form an interval.
    """
    if a < 0 or b < 0:
        return 0
    m11, m12, m21 = FatPointConfig.of(config).as_tuple()
    inside = 0
    for i in range(a + 1):
        lo = max(0, m11 - i, m21 - a + i)
        hi = min(b, b - m12 + i)
        if hi >= lo:
            inside += hi - lo + 1
    return (a + 1) * (b + 1) - inside


def delta(h: Callable[[int, int], int], a: int, b: int) -> int:
    """First difference of any Hilbert function backend, with H = 0 off the quadrant."""

    def hv(x, y):
        return h(x, y) if x >= 0 and y >= 0 else 0

    return hv(a, b) + hv(a - 1, b - 1) - hv(a - 1, b) - hv(a, b - 1)


def delta_from_betti(table: BettiTable, a: int, b: int) -> int:
    """``1 - B0 + B1 - B2`` where ``B_u`` sums beta_u over degrees ``<= (a, b)``."""
    if a < 0 or b < 0:
        return 0
    acc = 1
    for u, i, j, mult in table:
        if i <= a and j <= b:
            acc += (-1) ** (u + 1) * mult
    return acc


@lru_cache(maxsize=256)
def _closed_data(config: FatPointConfig):
    gens = betti_closed(config).level(0)
    if config.m11 <= config.m21:
        return gens, None
    return gens, d_sets(config).union()


def delta_closed(config, a: int, b: int) -> int:
    """First difference read off the generator degrees (normalized configs only).

    For ``m11 <= m21`` the value is 1 below the line ``a + b = m12 + m21``,
    ``1 - beta_0`` on it and 0 above. Otherwise it is ``1 - beta_0`` on the
    D-set degrees, 1 at degrees weakly dominated by some D-set degree, and 0
    elsewhere.
    """
    config = FatPointConfig.of(config)
    if not config.is_normalized:
        raise ContractError(f"delta_closed needs m12 >= m21, got {config}")
    if a < 0 or b < 0 or config.is_empty:
        return 0
    gens, dset = _closed_data(config)
    bd = Bidegree(a, b)
    if dset is None:
        line = config.m12 + config.m21
        if a + b < line:
            return 1
        if a + b == line:
            return 1 - gens.get(bd, 0)
        return 0
    if bd in dset:
        return 1 - gens.get(bd, 0)
    if any(a <= p.a and b <= p.b for p in dset):
        return 1
    return 0


def hilbert(config, a: int, b: int, method: str = "direct") -> int:
    """H_Z(a, b) for any configuration via the chosen backend.

    ``method`` is one of ``"direct"``, ``"closed"`` (Betti table from the
    closed formulas) or ``"recursive"`` (Betti table of the recursive
    resolution).
    """
    config = FatPointConfig.of(config)
    if method == "direct":
        return hilbert_direct(config, a, b)
    if config.is_empty:
        return 0
    if method == "closed":
        return hilbert_from_betti(betti_closed(config), a, b)
    if method == "recursive":
        return hilbert_from_betti(betti_recursive(config), a, b)
    raise ValueError(f"unknown method {method!r}")


def delta_value(config, a: int, b: int, method: str = "direct") -> int:
    """DeltaH_Z(a, b) in the caller's orientation.

    ``method="formula"`` uses :func:`delta_closed` after normalizing.
    """
    config = FatPointConfig.of(config)
    if method == "formula":
        norm, transposed = normalize(config)
        return delta_closed(norm, b, a) if transposed else delta_closed(norm, a, b)
    if method == "betti":
        if config.is_empty or a < 0 or b < 0:
            return 0
        return delta_from_betti(betti_closed(config), a, b)
    return delta(lambda x, y: hilbert(config, x, y, method), a, b)


@dataclass(frozen=True)
class HilbertTable:
    """H_Z on the window ``[0, amax] x [0, bmax]``.

    ``rows[b][a] = H(a, b)``, matching the layout of :class:`DeltaMatrix`.
    """

    config: FatPointConfig
    rows: tuple[tuple[int, ...], ...]

    @property
    def gamma(self) -> int:
        return self.config.degree

    @property
    def amax(self) -> int:
        return len(self.rows[0]) - 1

    @property
    def bmax(self) -> int:
        return len(self.rows) - 1

    def at(self, a: int, b: int) -> int:
        return self.rows[b][a]


def hilbert_table(config, amax: int | None = None, bmax: int | None = None,
                  method: str = "direct") -> HilbertTable:
    config = FatPointConfig.of(config)
    bound = config.stabilization_bound
    amax = bound if amax is None else amax
    bmax = bound if bmax is None else bmax
    rows = tuple(tuple(hilbert(config, a, b, method) for a in range(amax + 1)) for b in range(bmax + 1))
    return HilbertTable(config, rows)


def delta_rows(config, amax: int | None = None, bmax: int | None = None,
               method: str = "direct") -> tuple[tuple[int, ...], ...]:
    """First differences on ``[0, amax] x [0, bmax]``, ``rows[b][a]``.

    The window defaults to the stabilization bound, where everything vanishes.
    """
    config = FatPointConfig.of(config)
    bound = config.stabilization_bound
    amax = bound if amax is None else amax
    bmax = bound if bmax is None else bmax
    if method == "direct":
        table = hilbert_table(config, amax, bmax)
        h = lambda a, b: table.at(a, b)  # noqa: E731
        return tuple(tuple(delta(h, a, b) for a in range(amax + 1)) for b in range(bmax + 1))
    return tuple(tuple(delta_value(config, a, b, method) for a in range(amax + 1))
                 for b in range(bmax + 1))


def delta_matrix(config, amax: int | None = None, bmax: int | None = None,
                 method: str = "direct") -> DeltaMatrix:
    """:func:`delta_rows` wrapped as a zero-bordered :class:`DeltaMatrix`."""
    return DeltaMatrix(delta_rows(config, amax, bmax, method))


def checked_delta_matrix(config, amax: int | None = None, bmax: int | None = None) -> DeltaMatrix:
    """Closed-form first differences, cross-checked against the Betti-table route.

    Raises ``RuntimeError`` on the first disagreement.
    """
    closed = delta_matrix(config, amax, bmax, method="formula")
    betti = delta_matrix(config, amax, bmax, method="betti")
    if closed != betti:
        for i, (r1, r2) in enumerate(zip(closed.rows, betti.rows)):
            for j, (x, y) in enumerate(zip(r1, r2)):
                if x != y:
                    raise RuntimeError(
                        f"closed first difference disagrees at (a,b)=({j},{i}) for {config}: {x} vs {y}")
    return closed
