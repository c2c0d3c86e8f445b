import json
from functools import lru_cache

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hacs6.geometry import (KForm, apply_J, ce_differential, connection_defects, curvature,
                            degeneracy_class, dJ, gh_class, gh_components, is_kahler, nabla_omega,
                            nijenhuis, nijenhuis_symmetry_defect, nomizu_connection, omega_form,
                            report, snk_check)
from hacs6.quaternion import format_quat, parse_quat
from hacs6.scalar import array_is_zero
from hacs6.verify.type2 import dJ_powers

from conftest import UNIT_Q, model, small_fracs

POOL = [
    {"case": "A1.1", "alpha": "1", "r": "0", "eps": "1", "q": "i", "b": "i"},
    {"case": "A1.1", "alpha": "-1", "r": "1", "eps": "1", "q": "i", "b": "-i"},
    {"case": "A1.1", "alpha": "1", "r": "1", "eps": "0", "q": "j", "b": "2j"},
    {"case": "A1.2", "q": "j", "p": "k"},
    {"case": "A1.2", "q": "i", "p": "i"},
    {"case": "A1.3", "alpha": "0", "beta": "-1/2", "r": "1", "eps": "1", "q": "i"},
    {"case": "A1.3", "alpha": "0", "beta": "0", "r": "1", "eps": "0", "q": "i"},
    {"case": "A1.4", "eps": "-1", "q": "j", "b": "-1/6j"},
    {"case": "A1.4", "eps": "1", "q": "3/5i+4/5k"},
    {"case": "A2.1", "r": "sqrt3/3", "t": "2/3*sqrt3"},
    {"case": "A2.2", "r": "1", "t": "2"},
    {"case": "A3.4", "q": "i", "alpha": "0", "beta": "-1/2", "eps": "1", "p": "0", "u": "2i"},
    {"case": "A4.3", "r": "1/2", "t": "1"},
    {"case": "G2c"},
]


@lru_cache(maxsize=None)
def _cached(key: str):
    return model(json.loads(key))


def pooled(spec):
    return _cached(json.dumps(spec, sort_keys=True))


pool = st.sampled_from(POOL).map(pooled)


def test_pool_parses():
    for spec in POOL:
        assert pooled(spec).metric is not None, spec


@settings(max_examples=25)
@given(pool)
def test_d_squared_vanishes_on_invariant_forms(m):
    w = omega_form(m)
    dw = ce_differential(m, w)
    assert ce_differential(m, dw).is_zero()
    assert ce_differential(m, dJ(m, w), check=False).is_zero()


@given(vals=st.lists(small_fracs, min_size=15, max_size=15))
def test_d_squared_on_arbitrary_forms_of_a_subalgebra(kahler_model, vals):
    # m is itself a Lie algebra here, so d^2 = 0 without invariance
    assert kahler_model.m_is_subalgebra()
    idx = [(a, b) for a in range(6) for b in range(a + 1, 6)]
    alpha = KForm(2, 6, dict(zip(idx, vals)))
    d1 = ce_differential(kahler_model, alpha, check=False)
    assert ce_differential(kahler_model, d1, check=False).is_zero()


def test_d_rejects_non_invariant_form(kahler_model):
    with pytest.raises(ValueError):
        ce_differential(kahler_model, KForm(1, 6, {(0,): 1}))


def test_kform_algebra():
    a = KForm(2, 4, {(1, 0): 3})
    assert a[(0, 1)] == -3 and a[(1, 0)] == 3
    T = a.to_tensor()
    assert array_is_zero(T + T.T)
    assert KForm.from_tensor(T) == a
    assert (a - a).is_zero() and (2 * a)[(1, 0)] == 6
    with pytest.raises(ValueError):
        KForm(5, 4)


@given(pool)
def test_nijenhuis_anticommutes_with_J(m):
    N = nijenhuis(m)
    assert nijenhuis_symmetry_defect(m, N) == 0
    assert array_is_zero(N + np.transpose(N, (1, 0, 2)))


@given(pool)
def test_nomizu_connection_is_levi_civita(m):
    d = connection_defects(m, nomizu_connection(m))
    assert d["metric"] == 0 and d["torsion"] == 0


@given(pool)
def test_einstein_scalar_is_n_lambda(m):
    cur = curvature(m)
    lam = cur.einstein_lambda()
    if lam is not None:
        assert cur.scalar == 6 * lam


@given(pool)
def test_gray_hervella_components_sum_to_nabla_omega(m):
    comps = gh_components(m)
    assert array_is_zero(sum(comps.values()) - nabla_omega(m))


@given(pool)
def test_kahler_equivalences(m):
    closed = ce_differential(m, omega_form(m)).is_zero()
    integrable = degeneracy_class(nijenhuis(m)) == "ZERO"
    assert is_kahler(m) == (gh_class(m) == []) == (closed and integrable)


@given(pool)
def test_snk_means_class_one(m):
    if snk_check(m):
        assert gh_class(m) == [1]


@given(pool)
def test_integrable_means_no_w1_w2(m):
    if degeneracy_class(nijenhuis(m)) == "ZERO":
        assert not {1, 2} & set(gh_class(m))


@given(st.sampled_from(UNIT_Q), st.sampled_from(["-1", "1"]))
def test_type_two_locus_symmetric_under_q_sign(q, eps):
    m1 = model({"case": "A1.4", "eps": eps, "q": q})
    m2 = model({"case": "A1.4", "eps": eps, "q": format_quat(-parse_quat(q))})
    z1 = [f.is_zero() for f in dJ_powers(m1)]
    z2 = [f.is_zero() for f in dJ_powers(m2)]
    assert z1 == z2


def test_apply_J_twice_on_two_form(kahler_model):
    w = omega_form(kahler_model)
    # omega is J-invariant, and J acts on 2-forms as an involution
    assert apply_J(kahler_model, w) == w


def test_flat_and_kahler_report(kahler_model):
    rec = report(kahler_model)
    assert rec["kahler"] is True
    assert rec["nijenhuis_class"] == "ZERO"
    assert rec["einstein_lambda"] == "-2"
    assert rec["cosmological_constant"] == "-4"
    assert rec["gh_class"] == []
    flat = pooled(POOL[6])
    assert curvature(flat).is_flat()


def test_snk_point_in_sqrt3(g2_compact):
    m = pooled(POOL[9])
    assert snk_check(m) and snk_check(g2_compact)
    assert degeneracy_class(nijenhuis(m)) == "NDG"
