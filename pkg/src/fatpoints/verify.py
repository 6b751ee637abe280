"""Exhaustive cross-checks over all small configurations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import FatPointConfig, normalize
from .hilbert import (
    delta,
    delta_closed,
    delta_from_betti,
    delta_matrix,
    hilbert_direct,
    hilbert_from_betti,
)
from .interp import forward_delta, interpolate
from .oracle import fat_point_ideal, taylor_betti
from .resolution import betti_closed, betti_recursive

CHECKS = ("closed=recursive", "closed=oracle", "hilbert", "delta", "degree", "roundtrip")


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, what: str):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = what


@dataclass
class VerifyReport:
    mmax: int
    configs: int = 0
    tallies: dict[str, CheckTally] = field(default_factory=lambda: {c: CheckTally() for c in CHECKS})

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.tallies.values())

    def lines(self) -> list[str]:
        out = [f"verified {self.configs} configurations with multiplicities <= {self.mmax}"]
        for name, t in self.tallies.items():
            status = "PASS" if t.failed == 0 else "FAIL"
            line = f"{status} {name}: {t.passed} passed, {t.failed} failed, {t.skipped} skipped"
            if t.first_failure:
                line += f"; first counterexample: {t.first_failure}"
            out.append(line)
        return out


def configs_up_to(mmax: int, include_empty: bool = False):
    for t in itertools.product(range(mmax + 1), repeat=3):
        if include_empty or any(t):
            yield FatPointConfig(*t)


def check_config(config: FatPointConfig, report: VerifyReport, oracle: bool = True,
                 oracle_cap: int = 14, roundtrip: bool = True) -> None:
    tally = report.tallies
    closed = betti_closed(config)
    tally["closed=recursive"].record(closed == betti_recursive(config), f"{config}")

    if oracle:
        ideal = fat_point_ideal(config)
        if len(ideal) <= oracle_cap:
            tally["closed=oracle"].record(taylor_betti(ideal) == closed, f"{config}")
        else:
            tally["closed=oracle"].skipped += 1
    else:
        tally["closed=oracle"].skipped += 1

    n = config.stabilization_bound + 2
    norm, transposed = normalize(config)
    hil_ok, delta_ok, deg_total = True, True, 0
    where_h = where_d = None
    for a in range(n + 1):
        for b in range(n + 1):
            hd = hilbert_direct(config, a, b)
            if hd != hilbert_from_betti(closed, a, b) and where_h is None:
                hil_ok, where_h = False, (a, b)
            fd = delta(lambda x, y: hilbert_direct(config, x, y), a, b)
            dc = delta_closed(norm, b, a) if transposed else delta_closed(norm, a, b)
            if (fd != dc or fd != delta_from_betti(closed, a, b)) and where_d is None:
                delta_ok, where_d = False, (a, b)
            if a >= config.stabilization_bound or b >= config.stabilization_bound:
                if fd != 0 and where_d is None:
                    delta_ok, where_d = False, (a, b)
            deg_total += fd
    tally["hilbert"].record(hil_ok, f"{config} at {where_h}")
    tally["delta"].record(delta_ok, f"{config} at {where_d}")
    tally["degree"].record(deg_total == config.degree, f"{config}: sum {deg_total} != {config.degree}")

    if roundtrip:
        h = delta_matrix(config)
        rep = interpolate(h)
        ok = rep.is_hilbert_function
        if ok:
            fwd = forward_delta(rep.triple, *h.shape, method="direct")
            ok = h.padded(*fwd.shape) == fwd
        tally["roundtrip"].record(ok, f"{config} -> {rep.verdict} {rep.triple}")
    else:
        tally["roundtrip"].skipped += 1


def run_verification(mmax: int, oracle: bool = True, oracle_cap: int = 14) -> VerifyReport:
    report = VerifyReport(mmax)
    for config in configs_up_to(mmax):
        report.configs += 1
        check_config(config, report, oracle=oracle, oracle_cap=oracle_cap)
    return report
