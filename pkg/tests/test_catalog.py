import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hacs6.catalog import (ALL_CASES, ParameterError, build_model, invariant_report, params_from_dict,
                           schema_text, validate_params)
from hacs6.catalog.g2 import octonion_mul, octonion_norm_form, octonion_table
from hacs6.lie import algebra_derivations
from hacs6.scalar import array_is_zero
from hacs6.verify.grids import default_grid

from conftest import UNIT_Q, model


def _structurally_sound(m) -> bool:
    rep = invariant_report(m)
    return all(v is True or (not isinstance(v, bool) and v == 0) for v in rep.values())


@pytest.mark.parametrize("case", ALL_CASES)
def test_first_grid_point_is_sound(case):
    grid = default_grid(case)
    assert grid, case
    assert _structurally_sound(build_model(grid[0]))


@settings(max_examples=12)
@given(st.sampled_from(UNIT_Q), st.sampled_from(["0", "1", "-1/2"]), st.sampled_from(["0", "1"]),
       st.sampled_from(["1", "-2", "1/3"]))
def test_a11_sound_for_any_unit_q(q, r, eps, alpha):
    m = model({"case": "A1.1", "alpha": alpha, "r": r, "eps": eps, "q": q})
    assert _structurally_sound(m)
    assert m.metric is not None


def test_metric_comes_from_omega_and_j(kahler_model):
    m = kahler_model
    assert array_is_zero(m.metric - m.omega @ m.J)
    assert array_is_zero(m.metric - m.metric.T)


def test_basis_layout(kahler_model):
    assert (kahler_model.nm, kahler_model.nh) == (6, 3)
    assert kahler_model.g.labels[:6] == ("1", "i", "j", "k", "e", "ie")
    assert kahler_model.m_is_subalgebra()


def test_constraint_message_names_the_condition():
    with pytest.raises(ParameterError, match="α≠0"):
        model({"case": "A1.1", "alpha": "0", "r": "0", "eps": "1", "q": "i"})


@pytest.mark.parametrize("spec,needle", [
    ({"case": "A1.1", "alpha": "1", "r": "0", "eps": "1", "q": "2i"}, "q²=−1"),
    ({"case": "A1.1", "alpha": "1", "r": "0", "eps": "1", "q": "1+i"}, "q∈Im"),
    ({"case": "A1.1", "alpha": "1", "r": "0", "eps": "1", "q": "i", "b": "0"}, "b≠0"),
    ({"case": "A1.1", "alpha": "1", "r": "0", "q": "i"}, "missing parameter eps"),
])
def test_validation_messages(spec, needle):
    problems = validate_params(params_from_dict(spec))
    assert any(needle in p for p in problems), problems


def test_unknown_case_and_key():
    with pytest.raises(ValueError, match="unknown case"):
        params_from_dict({"case": "A9.9"})
    with pytest.raises(ValueError, match="unknown parameter"):
        params_from_dict({"case": "A6", "zeta": 1})


def test_exact_mode_rejects_floats_and_bad_text():
    with pytest.raises(ValueError, match="exact mode"):
        params_from_dict({"case": "A2.1", "r": 0.5, "t": "1"})
    with pytest.raises(ValueError, match="Q\\(sqrt3\\)"):
        params_from_dict({"case": "A2.1", "r": "sqrt2", "t": "1"})


def test_aliases_and_nested_params():
    a = params_from_dict({"case": "A1.1", "α": "1", "r": "0", "ε": "1", "q": "i"})
    b = params_from_dict({"case": "A1.1", "params": {"alpha": 1, "r": 0, "eps": 1, "q": "i"}})
    assert a == b
    assert a.alpha == Fraction(1)


@pytest.mark.parametrize("case", ALL_CASES)
def test_params_json_round_trip(case):
    P = default_grid(case)[0]
    assert params_from_dict(P.to_json()) == P
    assert schema_text(case)


def test_float_mode_agrees_with_exact():
    spec = {"case": "A1.3", "alpha": "0", "beta": "1/2", "r": "1", "eps": "1", "q": "3/5i+4/5k"}
    me = build_model(params_from_dict(spec))
    mf = build_model(params_from_dict(spec, exact=False))
    assert not mf.exact
    np.testing.assert_allclose(me.g.c.astype(float), mf.g.c, atol=1e-12)
    np.testing.assert_allclose(me.metric.astype(float), mf.metric, atol=1e-12)


def test_model_json_is_deterministic(kahler_model):
    text = kahler_model.dumps()
    assert text == model({"case": "A1.1", "alpha": "1", "r": "0", "eps": "1", "q": "i", "b": "i"}).dumps()
    obj = json.loads(text)
    assert obj["case"] == "A1.1" and obj["m_dim"] == 6


@pytest.mark.parametrize("split", [False, True])
def test_octonions(split):
    M = octonion_table(split)
    N = octonion_norm_form(M)
    rng = np.random.default_rng(1)
    x, y = rng.integers(-3, 4, 8).astype(object), rng.integers(-3, 4, 8).astype(object)
    # composition algebra: N(xy) = N(x) N(y)
    xy = octonion_mul(M, x, y)
    assert xy.dot(N).dot(xy) * 1 == (x.dot(N).dot(x)) * (y.dot(N).dot(y))
    assert len(algebra_derivations(M)) == 14


@pytest.mark.parametrize("case,form", [("G2c", "compact"), ("G2s", "split")])
def test_g2_models(case, form):
    m = model({"case": case})
    assert (m.nm, m.nh) == (6, 8)
    assert _structurally_sound(m)
