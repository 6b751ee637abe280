import itertools

import pytest

from fatpoints.core import DeltaMatrix, FatPointConfig, binom2
from fatpoints.hilbert import delta_matrix
from fatpoints.interp import (
    CASE_ONE,
    CASE_TWO,
    IS_HF,
    NOT_HF,
    analyze,
    forward_delta,
    interpolate,
    solve_systems,
    staircase_depth,
)
from golden import DELTA_324, DELTA_CANDIDATE


def test_invariants_of_reference_input():
    inv = analyze(DeltaMatrix(DELTA_CANDIDATE))
    assert (inv.gamma, inv.alpha, inv.beta, inv.d) == (18, 4, 7, 6)


def test_invariants_of_111():
    inv = analyze(delta_matrix((1, 1, 1)))
    assert (inv.gamma, inv.alpha, inv.beta, inv.d) == (3, 2, 2, 2)


def test_all_zero_is_not_case_one():
    assert analyze(DeltaMatrix(((0, 0), (0, 0)))) is None
    rep = interpolate(DeltaMatrix(((0, 0), (0, 0))))
    assert (rep.case, rep.verdict, rep.candidates) == (CASE_TWO, NOT_HF, ())


def test_staircase_depth():
    assert staircase_depth(DeltaMatrix(DELTA_CANDIDATE)) == 6
    assert staircase_depth(DeltaMatrix(((1, 0), (0, 0)))) == 1


def test_systems_on_reference_invariants():
    assert solve_systems(18, 4, 7, 6, extended=False) == [((3, 2, 4), "iii")]
    assert solve_systems(18, 4, 7, 6) == [((3, 2, 4), "iii")]
    assert ((1, 1, 1), "i") in solve_systems(3, 2, 2, 2)


def test_binomial_system_has_no_root_on_reference():
    # gamma - C(8,2) - C(5,2) is negative, so x(x+1)/2 cannot match it
    assert 18 - binom2(7) - binom2(4) < 0
    assert all(s != "iv" for _, s in solve_systems(18, 4, 7, 6))


def test_reference_input_is_rejected():
    rep = interpolate(DeltaMatrix(DELTA_CANDIDATE))
    assert rep.case == CASE_ONE and rep.verdict == NOT_HF and rep.triple is None
    assert [(c.triple, c.system, c.matched) for c in rep.candidates] == [((3, 2, 4), "iii", False)]
    cand = rep.candidates[0]
    assert cand.mismatch == (4, 2, -2, -1)
    n_rows, n_cols = cand.forward.shape
    assert cand.forward == DeltaMatrix(DELTA_324).padded(n_rows, n_cols)


@pytest.mark.parametrize("triple", [(2, 5, 4), (1, 1, 1), (3, 1, 1), (0, 0, 3), (4, 0, 0)])
def test_round_trip_examples(triple):
    rep = interpolate(delta_matrix(triple))
    assert rep.verdict == IS_HF
    assert forward_delta(rep.triple, 1, 1) == forward_delta(triple, 1, 1)


def test_ambiguous_input_lists_every_realization():
    rep = interpolate(delta_matrix((3, 2, 4)))
    matched = {c.triple for c in rep.candidates if c.matched}
    assert matched == {(3, 2, 4), (2, 1, 5)}
    assert delta_matrix((2, 1, 5)).padded(10, 10) == delta_matrix((3, 2, 4)).padded(10, 10)


def test_round_trip_and_gamma_up_to_five():
    for t in itertools.product(range(6), repeat=3):
        if not any(t):
            continue
        h = delta_matrix(t)
        rep = interpolate(h)
        assert rep.is_hilbert_function, t
        fwd = forward_delta(rep.triple, *h.shape, method="direct")
        assert h.padded(*fwd.shape) == fwd, t
        for c in rep.candidates:
            if c.matched:
                assert rep.invariants.gamma == FatPointConfig(*c.triple).degree


def test_line_systems_alone_can_miss():
    # here d differs from m12 + m21, which only the degree-equation variants cover
    assert interpolate(delta_matrix((3, 1, 1)), extended=False).verdict == NOT_HF
    assert interpolate(delta_matrix((3, 1, 1))).verdict == IS_HF


def test_perturbations_never_confirm_the_original():
    for t in itertools.product(range(4), repeat=3):
        if not any(t):
            continue
        base = delta_matrix(t)
        n_rows, n_cols = base.shape
        for i in range(n_rows - 1):
            for j in range(n_cols - 1):
                for eps in (-1, 1):
                    rows = [list(r) for r in base.rows]
                    rows[i][j] += eps
                    h = DeltaMatrix(tuple(map(tuple, rows)))
                    rep = interpolate(h)
                    if rep.is_hilbert_function:
                        assert rep.triple != t
                        fwd = forward_delta(rep.triple, *h.shape)
                        assert h.padded(*fwd.shape) == fwd


def test_report_serialization():
    d = interpolate(DeltaMatrix(DELTA_CANDIDATE)).to_dict()
    assert d["verdict"] == NOT_HF
    assert d["invariants"] == {"alpha": 4, "beta": 7, "d": 6, "gamma": 18, "witness": [6, 6]}
    assert d["candidates"][0]["mismatch"] == {"row": 4, "col": 2, "input": -2, "forward": -1}
