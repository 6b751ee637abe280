"""Inverse problem: which (m11, m12, m21), if any, produce a given DeltaH table?

The procedure reads four integers off the table (the degree ``gamma``, the
staircase depth ``d`` and the extents ``alpha``/``beta`` of the first ``d``
columns and rows), solves a handful of small systems for candidate
multiplicities, and then recomputes DeltaH for every candidate. Only the
recomputation decides the verdict.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import isqrt

from .core import DeltaMatrix, FatPointConfig, binom2
from .hilbert import delta_rows

log = logging.getLogger(__name__)

CASE_ONE = "CaseOne"
CASE_TWO = "CaseTwo"
IS_HF = "IsHilbertFunction"
NOT_HF = "NotHilbertFunction"


@dataclass(frozen=True)
class Invariants:
    gamma: int
    alpha: int
    beta: int
    d: int
    witness: tuple[int, int]  # (d1, d2): rectangle where "h = 1 iff i + j < d" was verified


def staircase_depth(h: DeltaMatrix) -> int:
    """Largest k such that every entry with ``i + j < k`` equals 1."""
    n_rows, n_cols = h.shape
    k = 0
    while all(i < n_rows and k - i < n_cols and h.rows[i][k - i] == 1 for i in range(k + 1)):
        k += 1
    return k


def _witness(h: DeltaMatrix, d: int) -> tuple[int, int]:
    n_rows, n_cols = h.shape
    for s in range(min(d, n_rows, n_cols), 0, -1):
        if all((h.rows[i][j] == 1) == (i + j < d) for i in range(s) for j in range(s)):
            return (s, s)
    return (0, 0)  # unreachable for d >= 1: the 1x1 box always qualifies


def analyze(h: DeltaMatrix) -> Invariants | None:
    """Invariants of a DeltaH table, or None when it cannot come from three points.

    Rows of ``h`` are indexed by the second coordinate. ``None`` means the
    table does not start with a triangle of ones (``h[0][0] != 1``).
    """
    d = staircase_depth(h)
    if d == 0:
        return None
    witness = _witness(h, d)
    rows = h.rows
    n_rows, n_cols = h.shape
    row_sums = [sum(rows[i][j] for j in range(min(d, n_cols))) for i in range(n_rows)]
    col_sums = [sum(rows[i][j] for i in range(min(d, n_rows))) for j in range(n_cols)]
    alpha = max((i for i, s in enumerate(row_sums) if s), default=-1) + 1
    beta = max((j for j, s in enumerate(col_sums) if s), default=-1) + 1
    return Invariants(h.total(), alpha, beta, d, witness)


def _triangular_root(v: int) -> int | None:
    """x >= 0 with x(x+1)/2 == v, if any."""
    if v < 0:
        return None
    x = (isqrt(8 * v + 1) - 1) // 2
    return x if binom2(x) == v else None


def _valid(*xs) -> bool:
    return all(x is not None and x >= 0 for x in xs)


def solve_systems(gamma: int, alpha: int, beta: int, d: int,
                  extended: bool = True) -> list[tuple[tuple[int, int, int], str]]:
    """Nonnegative integer solutions ``(m11, m12, m21) = (x, y, z)`` of

    * (i)   ``x + y = alpha, x + z = beta, y + z = d``
    * (ii)  ``x + y = alpha, y = beta, y + z = d``
    * (iii) ``z = alpha, x + z = beta, y + z = d``
    * (iv)  ``z = alpha, y = beta, C(x+1,2) + C(y+1,2) + C(z+1,2) = gamma``

    and, when ``extended``, of (i*), (ii*), (iii*): the first three with
    ``y + z = d`` swapped for the degree equation. A triple found by several
    systems is reported once, under the first.
    """
    found: list[tuple[tuple[int, int, int], str]] = []

    def add(triple, system):
        if _valid(*triple) and triple not in [t for t, _ in found]:
            found.append((triple, system))

    twice_x = alpha + beta - d
    if twice_x % 2 == 0:
        x = twice_x // 2
        add((x, alpha - x, beta - x), "i")
    add((alpha - beta, beta, d - beta), "ii")
    add((beta - alpha, d - alpha, alpha), "iii")
    add((_triangular_root(gamma - binom2(beta) - binom2(alpha)), beta, alpha), "iv")

    if extended:
        for x in range(min(alpha, beta) + 1):
            t = (x, alpha - x, beta - x)
            if sum(binom2(m) for m in t) == gamma:
                add(t, "i*")
        x = alpha - beta
        if x >= 0:
            add((x, beta, _triangular_root(gamma - binom2(x) - binom2(beta))), "ii*")
        x = beta - alpha
        if x >= 0:
            add((x, _triangular_root(gamma - binom2(x) - binom2(alpha)), alpha), "iii*")
    return found


@dataclass(frozen=True)
class Candidate:
    triple: tuple[int, int, int]
    system: str
    matched: bool
    # first disagreement as (row, col, input value, recomputed value)
    mismatch: tuple[int, int, int, int] | None = None
    forward: DeltaMatrix | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class InterpReport:
    case: str
    invariants: Invariants | None
    candidates: tuple[Candidate, ...]
    verdict: str
    triple: tuple[int, int, int] | None = None
    diagnostics: tuple[str, ...] = ()

    @property
    def is_hilbert_function(self) -> bool:
        return self.verdict == IS_HF

    def to_dict(self) -> dict:
        inv = self.invariants
        return {
            "case": self.case,
            "invariants": None if inv is None else {
                "gamma": inv.gamma, "alpha": inv.alpha, "beta": inv.beta, "d": inv.d,
                "witness": list(inv.witness),
            },
            "candidates": [
                {
                    "triple": list(c.triple),
                    "system": c.system,
                    "matched": c.matched,
                    "mismatch": None if c.mismatch is None else dict(
                        zip(("row", "col", "input", "forward"), c.mismatch)),
                }
                for c in self.candidates
            ],
            "verdict": self.verdict,
            "triple": None if self.triple is None else list(self.triple),
            "diagnostics": list(self.diagnostics),
        }


def forward_delta(triple, n_rows: int, n_cols: int, method: str = "formula") -> DeltaMatrix:
    """DeltaH of a configuration on a window at least ``n_rows x n_cols``."""
    config = FatPointConfig.of(triple)
    size = config.stabilization_bound + 1
    rows = delta_rows(config, amax=max(n_cols, size) - 1, bmax=max(n_rows, size) - 1, method=method)
    return DeltaMatrix(rows)


def _first_mismatch(h: DeltaMatrix, f: DeltaMatrix):
    for i, (r1, r2) in enumerate(zip(h.rows, f.rows)):
        for j, (x, y) in enumerate(zip(r1, r2)):
            if x != y:
                return (i, j, x, y)
    return None


def _line_diagnostics(inv: Invariants, triple) -> list[str]:
    m11, m12, m21 = triple
    notes = []
    if inv.alpha != max(m11 + m12, m21):
        notes.append(f"alpha={inv.alpha} differs from max(m11+m12, m21)={max(m11 + m12, m21)} for {triple}")
    if inv.beta != max(m11 + m21, m12):
        notes.append(f"beta={inv.beta} differs from max(m11+m21, m12)={max(m11 + m21, m12)} for {triple}")
    if inv.d != m12 + m21:
        notes.append(f"d={inv.d} differs from m12+m21={m12 + m21} for {triple}")
    return notes


def interpolate(h: DeltaMatrix, extended: bool = True, method: str = "formula") -> InterpReport:
    """Decide whether ``h`` is DeltaH of some ``m11 P11 + m12 P12 + m21 P21``.

    Every candidate is recomputed and compared, even after a match, so
    ambiguous inputs show all their realizations.
    """
    inv = analyze(h)
    if inv is None:
        return InterpReport(CASE_TWO, None, (), NOT_HF)

    n_rows, n_cols = h.shape
    candidates = []
    diagnostics: list[str] = []
    for triple, system in solve_systems(inv.gamma, inv.alpha, inv.beta, inv.d, extended):
        f = forward_delta(triple, n_rows, n_cols, method)
        padded = h.padded(*f.shape)
        miss = _first_mismatch(padded, f)
        candidates.append(Candidate(triple, system, miss is None, miss, f))
        if miss is None:
            diagnostics.extend(_line_diagnostics(inv, triple))

    for note in diagnostics:
        log.info(note)
    matched = [c for c in candidates if c.matched]
    if matched:
        return InterpReport(CASE_ONE, inv, tuple(candidates), IS_HF, matched[0].triple, tuple(diagnostics))
    return InterpReport(CASE_ONE, inv, tuple(candidates), NOT_HF, None, tuple(diagnostics))
