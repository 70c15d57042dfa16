import importlib
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ, symbols
from sympy.matrices.normalforms import invariant_factors

from heckek import _pykernels, kernels
from heckek.linalg import (IntMatrix, char_poly, cokernel_invariants, det, exterior_traces,
                           integer_kernel, inverse, inverse_unimodular, matmul, rank,
                           smith_normal_form)
from heckek.weyl import build_group


def int_matrices(max_rows=6, max_cols=6, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(lambda m: st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


def square_matrices(max_n=5, lo=-5, hi=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=n, max_size=n))


def sympy_divisors(rows):
    inv = invariant_factors(Matrix(rows), domain=ZZ)
    return [abs(int(d)) for d in inv if d != 0]


@settings(max_examples=200, deadline=None)
@given(int_matrices())
def test_smith_form_factorization(rows):
    D, U, V = smith_normal_form(rows)
    assert matmul(matmul(U, rows), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    m, n = len(rows), len(rows[0])
    for i in range(m):
        for j in range(n):
            if i != j:
                assert D[i][j] == 0
    diag = [D[i][i] for i in range(min(m, n))]
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert diag[:len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@settings(max_examples=200, deadline=None)
@given(int_matrices())
def test_elementary_divisors_match_sympy(rows):
    expected = sympy_divisors(rows)
    D, _, _ = smith_normal_form(rows)
    assert [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]] == expected
    assert kernels.snf_diagonal(rows) == expected
    assert _pykernels.snf_diagonal(rows) == expected


def test_smith_form_examples():
    assert kernels.snf_diagonal([[2, 4], [6, 8]]) == [2, 4]
    assert kernels.snf_diagonal([[0, 0], [0, 0]]) == []
    assert kernels.snf_diagonal([[1], [1]]) == [1]
    assert cokernel_invariants([[1], [1]]) == (1, [])
    assert cokernel_invariants([[2, 0], [0, 3]]) == (0, [6])
    assert cokernel_invariants([[2]]) == (0, [2])
    assert rank([[1, 2], [2, 4]]) == 1


def test_compiled_kernel_overflow_falls_back():
    # entries far beyond int64 still give exact results through the fallback
    big = [[10 ** 30, 3], [7, 10 ** 25]]
    assert kernels.snf_diagonal(big) == sympy_divisors(big)


@settings(max_examples=100, deadline=None)
@given(square_matrices())
def test_det_and_char_poly_match_sympy(rows):
    M = Matrix(rows)
    assert det(rows) == M.det()
    t = symbols("t")
    expected = [int(c) for c in M.charpoly(t).all_coeffs()]
    assert char_poly(rows) == expected
    n = len(rows)
    traces = exterior_traces(rows)
    assert traces[0] == 1 and traces[1] == M.trace()
    assert traces[n] == M.det()


@settings(max_examples=100, deadline=None)
@given(square_matrices())
def test_inverse(rows):
    M = Matrix(rows)
    if M.det() == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(rows)
        return
    inv = inverse(rows)
    assert Matrix(inv) == M.inv()
    if abs(M.det()) == 1:
        assert Matrix(inverse_unimodular(rows)) == M.inv()
    else:
        with pytest.raises(ValueError):
            inverse_unimodular(rows)


@settings(max_examples=100, deadline=None)
@given(int_matrices(5, 5, -3, 3))
def test_integer_kernel(rows):
    basis = integer_kernel(rows)
    n = len(rows[0])
    assert len(basis) == n - Matrix(rows).rank()
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    if basis:
        # a saturated lattice: the basis extends to a unimodular matrix
        assert kernels.snf_diagonal(basis) == [1] * len(basis)


def test_int_matrix():
    A = IntMatrix([[1, 2], [3, 4]])
    assert A.transpose() == IntMatrix([[1, 3], [2, 4]])
    assert (A @ A).rows == [[7, 10], [15, 22]]
    assert A[1, 0] == 3
    assert A.elementary_divisors() == [1, 2]
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_commuting_indices_backends_agree(seed):
    rng = np.random.default_rng(seed)
    W = build_group("B", 4)
    images, signs = W.element_arrays()
    w = W.elements()[int(rng.integers(W.order))]
    args = (images, signs, np.array(w.image, dtype=np.int32), np.array(w.signs, dtype=np.int8))
    got = list(kernels.commuting_indices(*args))
    assert got == list(_pykernels.commuting_indices(*args))
    els = W.elements()
    assert got == [k for k, z in enumerate(els) if z * w == w * z]


def test_backend_selected_at_import():
    assert kernels.BACKEND in ("compiled", "python")
    env = dict(os.environ, HECKEK_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import heckek; print(heckek.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.skipif(bool(os.environ.get("HECKEK_PURE_PYTHON")),
                    reason="pure-Python backend forced")
def test_compiled_backend_is_built():
    # the package ships a compiled core; the fallback is only for broken builds
    assert importlib.util.find_spec("heckek._ckernels") is not None
    assert kernels.BACKEND == "compiled"
