from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from hacs6 import linalg
from hacs6.catalog.tables import simple_part, sl2c
from hacs6.lie import (LieAlg, Rep, abelian, algebra_derivations, center, derivations,
                       derived_series_dims, equivariance_defect, from_brackets, invariant_tensors,
                       is_invariant_form, jacobi_defect, killing_form, transport)
from hacs6.scalar import array_is_zero, exact_array

from conftest import small_fracs

SU2 = simple_part(-1)
SU11 = simple_part(1)


def heisenberg():
    return from_brackets(3, {(0, 1): {2: 1}}, ("x", "y", "z"))


@pytest.mark.parametrize("L", [SU2, SU11, heisenberg(), sl2c(), abelian(4)], ids=["su2", "su11", "heis", "sl2c", "ab4"])
def test_jacobi_holds(L):
    d, bad = jacobi_defect(L)
    assert d == 0 and bad == []
    assert L.is_antisymmetric()


def test_jacobi_failure_reports_triples():
    L = from_brackets(3, {(0, 1): {1: 1}, (1, 2): {0: 1}})
    d, bad = jacobi_defect(L)
    assert d != 0 and bad == [(0, 1, 2)]


@given(st.lists(small_fracs, min_size=9, max_size=9))
def test_jacobi_invariant_under_basis_change(entries):
    P = exact_array(entries).reshape(3, 3)
    assume(linalg.det(P) != 0)
    for L in (SU2, SU11, heisenberg()):
        L2 = transport(L, P)
        assert jacobi_defect(L2)[0] == 0
        # [Px, Py]' = P [x, y]
        x, y = exact_array([1, 2, 0]), exact_array([0, 1, -1])
        assert array_is_zero(L2.bracket(P.dot(x), P.dot(y)) - P.dot(L.bracket(x, y)))


@pytest.mark.parametrize("L,sig", [(SU2, (0, 3, 0)), (SU11, (2, 1, 0)), (heisenberg(), (0, 0, 3))])
def test_killing_signature(L, sig):
    assert linalg.sym_signature(killing_form(L)) == sig


def test_derivations():
    assert len(derivations(SU2)) == 3
    assert len(derivations(heisenberg())) == 6
    assert len(derivations(abelian(3))) == 9
    # complex-linear derivations of sl2(C) as a real algebra: sl2(C) itself
    assert len(algebra_derivations(sl2c().c)) == 6


def test_center_and_derived_series():
    H = heisenberg()
    assert len(center(H)) == 1
    assert derived_series_dims(H) == [3, 1, 0]
    assert derived_series_dims(SU2) == [3]


def _adjoint_rep(L: LieAlg) -> Rep:
    return Rep(L, L.ad_basis())


def _m_valued(c):
    # bilinear map m x m -> m, padded with a zero h-block
    return np.concatenate([c, np.zeros(c.shape, dtype=int).astype(object)], axis=2)


@pytest.mark.parametrize("L", [SU2, SU11])
def test_adjoint_rep_invariants(L):
    rep = _adjoint_rep(L)
    assert rep.homomorphism_defect() == 0
    K = killing_form(L)
    assert is_invariant_form(rep, K)
    sym = invariant_tensors(rep, "sym2")
    assert len(sym) == 1
    assert len(invariant_tensors(rep, "alt2")) == 0
    # the bracket is an equivariant map
    assert equivariance_defect(rep, _m_valued(L.c)) == 0


def test_equivariance_defect_detects_broken_map():
    rep = _adjoint_rep(SU2)
    B = SU2.c.copy()
    B[0, 1, 0] = Fraction(1)
    B[1, 0, 0] = Fraction(-1)
    assert equivariance_defect(rep, _m_valued(B)) != 0


def test_json_round_trip():
    L = sl2c()
    L2 = LieAlg.from_json(L.to_json())
    assert array_is_zero(L.c - L2.c)
    assert L2.labels == L.labels


def test_rejects_bad_shape():
    with pytest.raises(ValueError):
        LieAlg(np.zeros((2, 3, 3)))
