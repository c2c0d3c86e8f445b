from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from hacs6 import kernels, linalg
from hacs6.scalar import Scalar, array_is_zero, exact_array

from conftest import small_fracs

ints = st.integers(-3, 3)


def mat(n, elements=small_fracs):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n).map(exact_array)


@given(mat(4))
def test_kernel_vectors_are_annihilated(M):
    K = linalg.mat_kernel(M)
    assert len(K) + linalg.rank(M) == 4
    for v in K:
        assert array_is_zero(M.dot(v))


@given(mat(4))
def test_inverse_and_det(M):
    d = linalg.det(M)
    if d == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(M)
        return
    Minv = linalg.inverse(M)
    assert array_is_zero(M.dot(Minv) - np.eye(4, dtype=int).astype(object))
    assert linalg.det(Minv) == 1 / d


@given(mat(4), st.lists(small_fracs, min_size=4, max_size=4))
def test_solve_consistent_system(A, x):
    b = A.dot(exact_array(x))
    sol = linalg.solve(A, b)
    assert sol is not None
    assert array_is_zero(A.dot(sol) - b)


@given(mat(4), mat(4))
def test_signature_is_congruence_invariant(S, P):
    assume(linalg.det(P) != 0)
    G = S + S.T
    assert linalg.sym_signature(P.T.dot(G).dot(P)) == linalg.sym_signature(G)


def test_signature_over_sqrt3():
    r = Scalar(0, 1)
    G = exact_array([[1, r, 0], [r, 1, 0], [0, 0, -1]])
    # eigenvalues 1 +- sqrt3 and -1
    assert linalg.sym_signature(G) == (1, 2, 0)


def test_float_and_exact_signature_agree():
    G = exact_array([[2, 1, 0], [1, 2, 0], [0, 0, 0]])
    assert linalg.sym_signature(G) == linalg.sym_signature(G.astype(float)) == (2, 0, 1)


def _su2_batch(nb, scale=1):
    C = np.zeros((nb, 3, 3, 3), dtype=np.int64)
    for (a, b, c) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        C[:, a, b, c] = scale
        C[:, b, a, c] = -scale
    return C


@given(st.lists(st.tuples(*[ints] * 6), min_size=1, max_size=6))
def test_jacobi_backends_agree(rows):
    C = np.zeros((len(rows), 3, 3, 3), dtype=np.int64)
    for b, (x, y, z, u, v, w) in enumerate(rows):
        for (i, j), (p, q) in zip(((0, 1), (0, 2), (1, 2)), ((x, y), (z, u), (v, w))):
            C[b, i, j, (i + j) % 3] = p
            C[b, i, j, 2 - i] += q
            C[b, j, i] = -C[b, i, j]
    np.testing.assert_array_equal(kernels.jacobi_max_batch(C, use_numba=True),
                                  kernels.jacobi_max_batch(C, use_numba=False))


def test_jacobi_batch_on_known_algebras():
    C = _su2_batch(2)
    C[1, 0, 1, 0] = 1  # breaks Jacobi
    C[1, 1, 0, 0] = -1
    out = kernels.jacobi_max_batch(C)
    assert out[0] == 0 and out[1] > 0


def test_jacobi_batch_rejects_large_entries():
    with pytest.raises(OverflowError):
        kernels.jacobi_max_batch(_su2_batch(1, scale=kernels.INT_BOUND + 1))
    with pytest.raises(ValueError):
        kernels.jacobi_max_batch(np.zeros((3, 3, 3)))


def test_backend_name():
    assert kernels.backend_name() in ("numba", "numpy")


def test_row_space_and_independent_subset():
    vecs = [exact_array([1, 0, 1]), exact_array([2, 0, 2]), exact_array([0, Fraction(1, 2), 0])]
    assert len(linalg.row_space(vecs, 3)) == 2
    assert linalg.independent_subset(vecs, 3) == [0, 2]
