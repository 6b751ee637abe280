"""Exact bigraded invariants of at most three fat points on an ACI support in P1xP1.

Points: P11, P12 share the first ruling coordinate, P11, P21 share the second.
A configuration ``(m11, m12, m21)`` is the fat point scheme
``m11 P11 + m12 P12 + m21 P21``.
"""

from .core import (
    Bidegree,
    BettiTable,
    ContractError,
    DeltaMatrix,
    FatPointConfig,
    FatPointsError,
    FreeResolution,
    normalize,
)
from .hilbert import (
    HilbertTable,
    checked_delta_matrix,
    delta_closed,
    delta_matrix,
    delta_value,
    hilbert,
    hilbert_table,
)
from .interp import InterpReport, analyze, interpolate, solve_systems
from .oracle import OracleScaleError, fat_point_ideal, oracle_betti, taylor_betti
from .phi import phi, phi_closed, phi_td, phi_td_tuple, phi_tuple
from .resolution import betti_closed, betti_recursive, d_sets, res_recursive, resolve

__all__ = [
    "Bidegree", "BettiTable", "ContractError", "DeltaMatrix", "FatPointConfig",
    "FatPointsError", "FreeResolution", "HilbertTable", "InterpReport", "OracleScaleError",
    "analyze", "betti_closed", "betti_recursive", "checked_delta_matrix", "d_sets",
    "delta_closed", "delta_matrix", "delta_value", "fat_point_ideal", "hilbert",
    "hilbert_table", "interpolate", "normalize", "oracle_betti", "phi", "phi_closed",
    "phi_td", "phi_td_tuple", "phi_tuple", "res_recursive", "resolve", "solve_systems",
    "taylor_betti",
]
