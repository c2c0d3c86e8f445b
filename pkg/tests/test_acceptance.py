"""Acceptance criteria 1-11.

Each criterion records one PASS/FAIL line (printed in the terminal summary).
A criterion is PASS only if its claims hold as stated.  Where a stated claim
is contradicted by exact computation, the literal claim is kept as a strict
xfail, the criterion line reads FAIL, and the corrected claim is asserted.
"""
import math

import pytest

from hacs6.catalog import ALL_CASES
from hacs6.verify import (gh_realization_sweep, solve_a1_family, sweep_type2, verify_g2, verify_kahler,
                          verify_skt_theorem, verify_snk, verify_symmetry, verify_table_row,
                          verify_tensor_cases)
from hacs6.verify.gh import LCK_ROWS, NEVER, missing_witnesses
from hacs6.verify.grids import default_grid
from hacs6.verify.table import ERRATA

from conftest import record_verdict

TABLE_ROWS = [c for c in ALL_CASES if not c.startswith("G2")]


def _claims(reports, name):
    """All recorded values of one claim across a list of reports."""
    return [p.claims[name] for r in reports for p in r.points if name in p.claims]


def _fails(reports, name):
    return [(r.case, p.params) for r in reports for p in r.points if p.claims.get(name) is False]


@pytest.fixture(scope="module")
def table():
    return {c: verify_table_row(c, default_grid(c), literal=True) for c in TABLE_ROWS}


@pytest.fixture(scope="module")
def kahler():
    return verify_kahler(literal=True)


@pytest.fixture(scope="module")
def gh():
    return gh_realization_sweep(literal=True)


@pytest.fixture(scope="module")
def g2():
    return verify_g2(literal_dJ3=True)


# -- 1 ---------------------------------------------------------------------

def test_criterion_1_structural_soundness(table):
    counts = {c: len(r.points) for c, r in table.items()}
    thin = [c for c, n in counts.items() if n < 8 and c != "A6"]  # A6 has no parameters
    reps = list(table.values())
    bad = _fails(reps, "jacobi") + _fails(reps, "equivariance") + _fails(reps, "valid_params")
    ok = not thin and not bad and all(_claims(reps, "jacobi")) and len(_claims(reps, "jacobi")) == sum(counts.values())
    record_verdict(1, "Jacobi and equivariance defects are exactly zero", ok,
                   f"{len(counts)} rows, {sum(counts.values())} points, at least "
                   f"{min(n for c, n in counts.items() if c != 'A6')} per parametrized row")
    assert not thin, thin
    assert not bad, bad[:3]


# -- 2 ---------------------------------------------------------------------

def _corrected_table_ok(table):
    out = []
    for case, rep in table.items():
        for p in rep.points:
            for name, ok in p.claims.items():
                if name == "nijenhuis_formula" and case in ERRATA:
                    continue
                if not ok:
                    out.append((case, name, p.params))
    return out


def test_criterion_2_nijenhuis_fidelity(table):
    reps = list(table.values())
    literal_bad = sorted({c for c, _ in _fails(reps, "nijenhuis_formula") + _fails(reps, "degeneracy")})
    corrected_bad = _corrected_table_ok(table)
    record_verdict(2, "closed-form Nijenhuis tensors and degeneracy classes", not literal_bad,
                   "printed formula off by a unit factor on " + ", ".join(literal_bad)
                   + "; corrected formulas match everywhere" if literal_bad else "")
    assert not corrected_bad, corrected_bad[:3]
    assert set(literal_bad) <= set(ERRATA)
    assert all(_claims(reps, "nijenhuis_formula_corrected"))


@pytest.mark.xfail(strict=True, reason="printed N_J for A2.3, A4.3 and A5.2 differs by a unit factor")
def test_criterion_2_literal_formula(table):
    assert all(_claims(list(table.values()), "nijenhuis_formula"))


# -- 3 ---------------------------------------------------------------------

def test_criterion_3_kahler_theorem(kahler):
    model1, model2 = kahler
    literal = all(_claims([model1], "ricci_minus_4g"))
    record_verdict(3, "Kahler theorem models", literal and model1.passed and model2.passed,
                   "Ricci = -2 g, not -4 g; -4 is the cosmological constant (n-2) lambda / 2" if not literal else "")
    for name in ("d_omega_zero", "integrable", "nabla_omega_zero", "einstein_lambda",
                 "cosmological_constant", "weyl_nonzero", "signature"):
        assert all(_claims([model1], name)), name
    assert model2.passed, [p.to_json() for p in model2.failures()]
    assert {p.params["eps"] for p in model2.points} == {"0", "1"}


@pytest.mark.xfail(strict=True, reason="the model-1 metric has Ricci = -2 g")
def test_criterion_3_literal_ricci(kahler):
    assert all(_claims([kahler[0]], "ricci_minus_4g"))


# -- 4 ---------------------------------------------------------------------

def test_criterion_4_snk():
    rep = verify_snk()
    cases = [p.params["case"] for p in rep.points]
    ok = rep.passed and cases.count("A3.2") == 2 and {"A2.1", "A4.1", "G2c"} <= set(cases)
    record_verdict(4, "strongly nearly Kahler points", ok, f"{len(cases)} points")
    assert ok, [p.to_json() for p in rep.failures()]
    # the A2.1 / A4.1 points really are in Q(sqrt3) \ Q
    assert "sqrt3" in rep.points[0].params["r"] or "sqrt3" in rep.points[1].params["r"]


# -- 5 ---------------------------------------------------------------------

def test_criterion_5_skt():
    case2, case3, case1 = verify_skt_theorem()
    thetas = {p.params["theta"] for p in case1.points if p.params["expect_skt"]}
    controls = [p for r in (case1, case2, case3) for p in r.points if not p.params["expect_skt"]]
    ok = case1.passed and case2.passed and case3.passed and len(thetas) >= 5 and controls
    record_verdict(5, "SKT loci (cases 2-3 exact, case 1 float at tol 1e-9)", bool(ok),
                   f"{len(thetas)} theta values, {len(controls)} off-locus controls")
    assert ok, [p.to_json() for r in (case1, case2, case3) for p in r.failures()]
    assert all(math.isfinite(t) for t in thetas)


# -- 6 ---------------------------------------------------------------------

def test_criterion_6_type_two():
    reps = [sweep_type2("A1.4"), sweep_type2("A3.5")]
    sizes = [len(r.points) for r in reps]
    on = [r.extra["on_locus"] for r in reps]
    ok = all(r.passed for r in reps) and min(sizes) >= 20 and all(0 < k < n for k, n in zip(on, sizes))
    record_verdict(6, "d_J^k omega on the type-II rows", ok,
                   f"A1.4 {sizes[0]} points ({on[0]} on locus), A3.5 {sizes[1]} points ({on[1]} on locus)")
    assert ok, [p.to_json() for r in reps for p in r.failures()][:3]


# -- 7 ---------------------------------------------------------------------

def test_criterion_7_gh_realization(gh):
    missing = missing_witnesses(gh)
    never = [(c, p.params) for c, r in gh.items() for p in r.points if p.claims.get("not_excluded") is False]
    lck = [(c, p.params) for c, r in gh.items() for p in r.points if p.claims.get("integrable_is_lck") is False]
    record_verdict(7, "Gray-Hervella classes realized per row", not missing and not never,
                   "no witness for " + "; ".join(f"{c} {m}" for c, m in sorted(missing.items()))
                   + " (integrable points there are locally conformally Kahler, class W4)" if missing else "")
    assert not never, never[:3]
    assert not lck, lck[:3]
    # everything listed is realized except (3, 4) on the lcK rows, which shows up as (4,)
    assert set(missing) <= set(LCK_ROWS)
    assert all(m == [[3, 4]] for m in missing.values())
    for c in LCK_ROWS:
        assert "4" in gh[c].extra["realized"]
    assert not any(",".join(map(str, n)) in r.extra["realized"] for r in gh.values() for n in NEVER)


@pytest.mark.xfail(strict=True, reason="W3+W4 is not realized on A1.1 or A1.3")
def test_criterion_7_literal_witnesses(gh):
    assert not missing_witnesses(gh)


# -- 8 ---------------------------------------------------------------------

def test_criterion_8_symmetry():
    reps = verify_symmetry()
    empty = [r.case for r in reps if not r.points]
    ok = all(r.passed for r in reps) and not empty
    record_verdict(8, "dim der(m) & gl(m,J) = 3 at NDG points", ok,
                   f"{sum(len(r.points) for r in reps)} NDG points over {len(reps)} rows")
    assert ok, (empty, [p.to_json() for r in reps for p in r.failures()][:3])


# -- 9 ---------------------------------------------------------------------

def test_criterion_9_invariant_tensors():
    rep = verify_tensor_cases()
    record_verdict(9, "invariant metric and 2-form dimensions, cases 1-8", rep.passed,
                   f"{len(rep.points)} cases")
    assert rep.passed, [p.to_json() for p in rep.failures()]
    assert len(rep.points) == 8


# -- 10 --------------------------------------------------------------------

def test_criterion_10_g2(g2):
    literal = all(_claims([g2], "dJ3_nonzero"))
    record_verdict(10, "G2 construction", literal and g2.passed,
                   "d_J^3 omega = 0 on both forms (d_J^2 omega is a multiple of omega^2)" if not literal else "")
    for name in ("der_dim_14", "stabilizer_dim_8", "signature", "ndg", "einstein", "dJ2_nonzero",
                 "dJ3_zero", "dJ4_zero"):
        assert all(_claims([g2], name)), name


@pytest.mark.xfail(strict=True, reason="d_J^3 omega vanishes for the nearly Kahler G2 structures")
def test_criterion_10_literal_dJ3(g2):
    assert all(_claims([g2], "dJ3_nonzero"))


# -- 11 --------------------------------------------------------------------

def test_criterion_11_a1_solver():
    rep = solve_a1_family()
    ok = rep.passed and rep.extra["grid_points"] >= 10_000 and rep.extra["jacobi_solutions"] > 0
    rows = rep.extra["rows"]
    record_verdict(11, "A1 solver normalizes every Jacobi solution", ok and set(rows) == {"A1.1", "A1.2", "A1.3", "A1.4"},
                   f"{rep.extra['grid_points']} grid points, {rep.extra['jacobi_solutions']} solutions, rows {rows}")
    assert ok, [p.to_json() for p in rep.failures()][:3]
    assert set(rows) == {"A1.1", "A1.2", "A1.3", "A1.4"}
