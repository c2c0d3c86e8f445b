
import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from hacs6.catalog import params_from_dict
from hacs6.lie import LieAlg, derivations, transport
from hacs6.verify import HypothesisError, symmetry_dimension
from hacs6.verify.a1solver import grid_from_axes, solve_a1_family
from hacs6.verify.gh import NEVER, expected_classes, gh_realization_sweep, scaled
from hacs6.verify.report import ClaimReport
from hacs6.verify.table import ERRATA, check_point, verify_table_row
from hacs6.verify.tensors import CASES, case_model, tensor_summary
from hacs6.verify.type2 import dJ3_locus, sweep_type2

from conftest import model, small_fracs

NDG_POINT = {"case": "A2.1", "r": "1", "t": "2"}


def test_symmetry_dimension_ndg():
    assert symmetry_dimension(model(NDG_POINT)) == 9


def test_symmetry_dimension_rejects_outside_hypothesis():
    with pytest.raises(HypothesisError, match="not non-degenerate"):
        symmetry_dimension(model({"case": "A1.2", "q": "j", "p": "k"}))


@settings(max_examples=15)
@given(small_fracs, small_fracs)
def test_symmetry_dimension_invariant_under_complex_rescaling(a, b):
    # x -> (a + bJ) x commutes with J, so it conjugates der(m) inside gl(m, J)
    assume(a != 0 or b != 0)
    m = model(NDG_POINT)
    P = a * np.eye(6, dtype=int).astype(object) + b * m.J
    L = transport(LieAlg(m.cm), P)
    assert len(derivations(L, commute_with=m.J)) == symmetry_dimension(m) - m.nm


def test_report_json_shape():
    rep = ClaimReport("demo", "x")
    rep.add({"a": 1}).check("ok", True)
    rep.add({"a": 2}).check("ok", False, "why")
    js = rep.to_json()
    assert js["n_points"] == 2 and js["n_failed"] == 1 and not js["passed"]
    assert rep.failures()[0].witnesses == {"ok": "why"}


def test_table_check_point_records_claims():
    rep = ClaimReport("table", "A1.1")
    pt = check_point(params_from_dict({"case": "A1.1", "alpha": "1", "r": "1", "eps": "1", "q": "j"}), rep)
    assert {"jacobi", "equivariance", "nijenhuis_formula", "degeneracy"} <= set(pt.claims)
    assert pt.passed


def test_table_invalid_point_is_a_failure():
    rep = ClaimReport("table", "A1.1")
    pt = check_point(params_from_dict({"case": "A1.1", "alpha": "0", "r": "1", "eps": "1", "q": "j"}), rep)
    assert not pt.passed and "α≠0" in pt.witnesses["valid_params"]


@pytest.mark.parametrize("case", sorted(ERRATA))
def test_erratum_rows_literal_vs_corrected(case):
    spec = {"case": case, "r": "1/2", "t": "1"} if case != "A5.2" else {"case": case, "r": "1/2", "lam": "1"}
    grid = [params_from_dict(spec)]
    assert not verify_table_row(case, grid, literal=True).passed
    assert verify_table_row(case, grid, literal=False).passed


def test_table_row_rejects_foreign_points():
    with pytest.raises(ValueError):
        verify_table_row("A1.1", [params_from_dict(NDG_POINT)])


@pytest.mark.parametrize("q,on", [("i", True), ("-i", True), ("j", True), ("3/5j+4/5k", True),
                                  ("3/5i+4/5k", False), ("1/3i+2/3j+2/3k", False)])
def test_type_two_locus_a14(q, on):
    P = params_from_dict({"case": "A1.4", "eps": "-1", "q": q})
    assert dJ3_locus(P) is on
    assert sweep_type2("A1.4", [P]).passed


def test_gh_sweep_single_row():
    grid = [scaled("A1.4", {"eps": "-1", "q": "j"}, s) for s in ("1", "-1/6", "1/6", "1/3")]
    rep = gh_realization_sweep(["A1.4"], {"A1.4": grid})["A1.4"]
    realized = set(rep.extra["realized"])
    assert {"1,2,3", "2,3", "1,2", "1,3"} <= realized
    assert not any(",".join(map(str, c)) in realized for c in NEVER)


def test_gh_corrected_expectation():
    assert (3, 4) in expected_classes("A1.1", literal=True)
    assert (3, 4) not in expected_classes("A1.1", literal=False)
    assert (4,) in expected_classes("A1.3", literal=False)
    assert expected_classes("A1.4", False) == expected_classes("A1.4", True)


@pytest.mark.parametrize("case", [c for c in CASES if c.number in (2, 5, 6)], ids=lambda c: f"case{c.number}")
def test_tensor_summary_small_cases(case):
    s = tensor_summary(case_model(case))
    assert s["metric_dim"] == case.metric_dim
    assert s["two_form_dim"] == case.two_form_dim


def test_a1_solver_small_grid():
    pts = grid_from_axes(lam=["0", "1"], b=["0", "i"], c=["0"], eps=["0", "1"], a=["0", "1", "i"])
    rep = solve_a1_family(pts)
    assert rep.passed
    assert rep.extra["grid_points"] == len(pts)
    assert 0 < rep.extra["jacobi_solutions"] <= len(pts)


def test_a1_solver_backends_agree():
    pts = grid_from_axes(lam=["-1", "1"], b=["0", "j"], c=["0", "k"], eps=["1"], a=["0", "i", "1/2+j"])
    a = solve_a1_family(pts, use_numba=True).extra
    b = solve_a1_family(pts, use_numba=False).extra
    assert a["jacobi_solutions"] == b["jacobi_solutions"] and a["rows"] == b["rows"]
