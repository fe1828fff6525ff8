import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coptensor.detector import Status
from coptensor.physics import (
    PerturbativityWarning,
    QuarticCouplings,
    analytic_stationary,
    coupling_tensor,
    default_rho_grid,
    potential,
    vacuum_stability,
)
from coptensor.tensor import eval_form
from reference_tables import TABLE4, negative_diagonal, parse_rho

PI = np.pi
ALL_PI = QuarticCouplings(*([PI] * 8))

couplings = st.builds(QuarticCouplings, *[st.floats(-4.0, 4.0) for _ in range(8)])


def test_tensor_entries_all_pi():
    T = coupling_tensor(ALL_PI, 1.0, "paper").values
    assert T[0, 0, 0, 0] == pytest.approx(PI)
    assert T[2, 2, 2, 2] == pytest.approx(PI)
    # l3 + l4 rho^2 spread over the 6 permutations of (1,1,2,2)
    assert T[0, 0, 1, 1] == pytest.approx(2 * PI / 6)
    assert T[0, 1, 0, 1] == pytest.approx(2 * PI / 6)
    assert T[0, 0, 2, 2] == pytest.approx(PI / 6)
    assert T[0, 1, 2, 2] == pytest.approx(-PI / 12)
    assert T[2, 1, 2, 0] == pytest.approx(-PI / 12)
    assert T[0, 0, 0, 1] == 0.0


def test_modes_differ_only_in_mixed_entry():
    P = coupling_tensor(ALL_PI, 0.5, "paper_listing").values
    M = coupling_tensor(ALL_PI, 0.5, "monomial").values
    diff = np.argwhere(P != M)
    assert {tuple(sorted(d)) for d in diff} == {(0, 1, 2, 2)}
    assert M[0, 1, 2, 2] == pytest.approx(0.5 * P[0, 1, 2, 2])


def test_bad_arguments():
    with pytest.raises(ValueError):
        coupling_tensor(ALL_PI, 1.5)
    with pytest.raises(ValueError):
        coupling_tensor(ALL_PI, 0.5, "other")
    with pytest.raises(ValueError):
        vacuum_stability(ALL_PI, rho_grid=[])
    with pytest.raises(ValueError):
        vacuum_stability(ALL_PI, rho_grid=[2.0])


def test_perturbativity_warning():
    with pytest.warns(PerturbativityWarning):
        QuarticCouplings(5 * PI, PI, PI, PI, PI, PI, PI, PI)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        QuarticCouplings(PI, PI, PI, PI, PI, PI, PI, 4 * PI)


@settings(max_examples=50, deadline=None)
@given(couplings, st.floats(0.0, 1.0), st.integers(0, 2**32 - 1))
def test_monomial_mode_matches_potential(c, rho, seed):
    T = coupling_tensor(c, rho, "monomial")
    rng = np.random.default_rng(seed)
    for x in rng.uniform(0, 2, size=(5, 3)):
        want = potential(c, rho, *x)
        scale = max(1.0, sum(abs(v) for v in c.to_dict().values()) * np.max(x) ** 4)
        assert abs(eval_form(T, x) - want) <= 1e-10 * scale


@pytest.mark.parametrize("row", TABLE4, ids=[f"row{i + 1}" for i in range(len(TABLE4))])
def test_analytic_columns(row):
    c, h1, h2, s, rho_text, vmin, _, _ = row
    a = analytic_stationary(QuarticCouplings(*c))
    rho, imaginary = parse_rho(rho_text)
    assert a.h1_sq == pytest.approx(h1, abs=0.01)
    assert a.h2_sq == pytest.approx(h2, abs=0.01)
    assert a.s_sq == pytest.approx(s, abs=0.01)
    assert a.rho == pytest.approx(rho, abs=0.01)
    assert a.v_min == pytest.approx(vmin, abs=0.01)
    assert a.rho_imaginary is imaginary
    assert a.format_rho().endswith("i") is imaginary


def test_analytic_degenerate():
    # t vanishes for this choice
    c = QuarticCouplings(0, 0, 0, 0, 0, 0, 0, 0)
    a = analytic_stationary(c)
    assert a.degenerate and a.format_rho() == "nan"
    assert a.to_dict()["h1_sq"] is None


def test_vacuum_examples():
    assert vacuum_stability(ALL_PI).result == "Yes"
    c = QuarticCouplings(PI, PI, -PI, PI, PI, PI, PI, 4 * PI)
    rep = vacuum_stability(c)
    assert rep.result == "No"
    assert all(v.status is Status.NOT_COPOSITIVE and v.iterations == 1 for _, v in rep.per_rho)
    for l3 in (0.0, PI):
        c = QuarticCouplings(PI, PI, PI, l3, PI, -PI, -PI, 2 * PI)
        assert vacuum_stability(c).result == "No"


@settings(max_examples=25, deadline=None)
@given(couplings)
def test_negative_diagonal_shortcut(c):
    if min(c.l1, c.l2, c.ls) >= 0:
        return
    rep = vacuum_stability(c, rho_grid=default_rho_grid(5))
    assert rep.result == "No"
    assert all(v.iterations == 1 for _, v in rep.per_rho)


@pytest.mark.parametrize("row", [r for r in TABLE4 if negative_diagonal(r[0])])
def test_negative_diagonal_table_rows(row):
    rep = vacuum_stability(QuarticCouplings(*row[0]))
    assert rep.result == "No" and rep.max_iterations == 1


@settings(max_examples=15, deadline=None)
@given(couplings)
def test_no_persists_under_refinement(c):
    coarse = vacuum_stability(c, rho_grid=default_rho_grid(3), mode="monomial")
    if coarse.result == "No":
        # grid of 5 contains the grid of 3
        assert vacuum_stability(c, rho_grid=default_rho_grid(5), mode="monomial").result == "No"


def test_default_grid():
    g = default_rho_grid()
    assert len(g) == 21 and g[0] == 0.0 and g[-1] == 1.0
    assert default_rho_grid(1) == [1.0]


def test_report_dict():
    d = vacuum_stability(ALL_PI, rho_grid=[0.0, 1.0]).to_dict(timing=False)
    assert d["result"] == "Yes" and d["mode"] == "paper_listing"
    assert d["analytic"]["rho_text"] == "1.00"
    assert [r["rho"] for r in d["per_rho"]] == [0.0, 1.0]


def test_parallel_scan_matches_sequential():
    c = QuarticCouplings(PI, PI, PI, 0, PI, -PI, 0, PI / 2)
    a = vacuum_stability(c, rho_grid=default_rho_grid(5))
    b = vacuum_stability(c, rho_grid=default_rho_grid(5), workers=2)
    assert a.result == b.result
    assert [v.status for _, v in a.per_rho] == [v.status for _, v in b.per_rho]
