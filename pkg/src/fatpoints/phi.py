"""The tent-shaped counting functions phi_t and phi_{t,d}.

``phi_t`` is supported on ``0 <= n <= 2t - 2`` and climbs by one every two
steps up to the middle, e.g. ``phi_7 = (1,1,2,2,3,3,4,3,3,2,2,1,1)``. Every
Betti number formula in :mod:`fatpoints.resolution` is built from these.
"""

from __future__ import annotations

from .core import ContractError


def phi(t: int, n: int) -> int:
    """Evaluate phi_t(n) by unrolling the defining recursion on t.

    Kept deliberately naive (O(t)); it is the reference the closed form is
    tested against.
    """
    if t <= 0 or n < 0:
        return 0
    value = 1 if n == 0 else 0  # phi_1
    for s in range(2, t + 1):
        if n < s - 1:
            pass
        elif n < 2 * s - 1:
            value += 1
        else:
            value = 0
    return value


def phi_closed(t: int, n: int) -> int:
    """phi_t(n) = (floor(min(n, 2t-2-n) / 2) + 1)_+ ; zero for t <= 0."""
    if t <= 0:
        return 0
    v = min(n, 2 * t - 2 - n) // 2 + 1
    return v if v > 0 else 0


def phi_td(t: int, d: int, n: int) -> int:
    """phi_{t,d}(n) = phi_t(n+d) - phi_d(n+d), defined for t >= d."""
    if t < d:
        raise ContractError(f"phi_td needs t >= d, got t={t}, d={d}")
    return phi_closed(t, n + d) - phi_closed(d, n + d)


def phi_tuple(t: int, length: int | None = None) -> tuple[int, ...]:
    """``(phi_t(0), phi_t(1), ...)`` up to the end of the support (or ``length`` entries)."""
    if length is None:
        length = max(2 * t - 1, 1)
    return tuple(phi_closed(t, n) for n in range(length))


def phi_td_tuple(t: int, d: int, length: int) -> tuple[int, ...]:
    return tuple(phi_td(t, d, n) for n in range(length))
