import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import qhh.linalg as la
from qhh.linalg import SparseMatrix, _fallback, nullity, rank

compiled = pytest.mark.skipif(la._kernels is None, reason="compiled kernel not built")


def dense_rank(rows, ncols, p=0):
    """Textbook Gauss-Jordan over Fraction or integers mod p."""
    m = [[Fraction(r.get(j, 0)) if not p else r.get(j, 0) % p for j in range(ncols)] for r in rows]
    rk = 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = 1 / m[rk][c] if not p else pow(m[rk][c], -1, p)
        for i in range(len(m)):
            if i != rk and m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [(x - f * y) if not p else (x - f * y) % p for x, y in zip(m[i], m[rk])]
        rk += 1
    return rk


@st.composite
def sparse(draw, max_rows=12, max_cols=12, lo=-3, hi=3, nrows=None, ncols=None):
    nrows = draw(st.integers(0, max_rows)) if nrows is None else nrows
    ncols = draw(st.integers(1, max_cols)) if ncols is None else ncols
    rows = []
    for _ in range(nrows):
        cols = draw(st.lists(st.integers(0, ncols - 1), max_size=ncols, unique=True))
        rows.append({c: v for c in cols if (v := draw(st.integers(lo, hi)))})
    return SparseMatrix.from_rows(rows, ncols)


def test_trivial_ranks():
    assert rank(SparseMatrix(3, 4)) == 0
    eye = SparseMatrix.from_rows([{i: 1} for i in range(5)], 5)
    for ch in (0, 2, 3):
        assert rank(eye, ch) == 5
        assert nullity(eye, ch) == 0


def test_single_entry_two():
    m = SparseMatrix.from_rows([{0: 2}], 1)
    assert rank(m, 0) == 1 and rank(m, 2) == 0 and rank(m, 3) == 1


@pytest.mark.parametrize("backend", ["python", "compiled"])
@given(m=sparse(), p=st.sampled_from([0, 2, 3, 5, 7, 2147483647]))
def test_rank_matches_dense_reference(backend, m, p):
    if backend == "compiled" and la._kernels is None:
        pytest.skip("compiled kernel not built")
    assert rank(m, p, backend=backend) == dense_rank(m.rows, m.ncols, p)


@given(sparse(lo=-(2**70), hi=2**70), st.sampled_from([0, 3]))
def test_big_entries(m, p):
    assert rank(m, p) == dense_rank(m.rows, m.ncols, p)


@given(sparse())
def test_rank_mod_p_at_most_rank_q(m):
    r0 = rank(m, 0)
    assert all(rank(m, p) <= r0 for p in (2, 3, 5))


@given(st.data(), st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_matmul_and_transpose(data, n, k, m):
    a = data.draw(sparse(nrows=n, ncols=k))
    b = data.draw(sparse(nrows=k, ncols=m))
    assert (a.matmul(b).to_dense() == a.to_dense().dot(b.to_dense())).all()
    with pytest.raises(ValueError):
        a.matmul(SparseMatrix(k + 1, m))
    assert (a.transpose().to_dense() == a.to_dense().T).all()
    assert rank(a.transpose()) == rank(a)


@compiled
def test_int64_kernel_reports_overflow():
    big = 2**40
    m = SparseMatrix.from_rows([{0: big, 1: 1}, {0: 1, 1: big}, {0: 3, 1: big + 7}], 2)
    indptr, indices, data = m.csr()
    assert la._kernels.rank_int64(indptr, indices, data, 2) in (-1, 2)
    assert rank(m, 0) == 2


def test_fallback_direct():
    rows = [{0: 1, 1: 2}, {0: 2, 1: 4}, {2: 6}]
    assert _fallback.rank_integer([dict(r) for r in rows]) == 2
    assert _fallback.rank_mod_p([dict(r) for r in rows], 3) == 1


def test_labels():
    m = SparseMatrix.from_labels(["r0", "r1"], ["x", "y"])
    m.add_labeled("r0", "x", 1)
    m.add_labeled("r0", "x", -1)
    m.add_labeled("r1", "y", 4)
    assert m.rows == [{}, {1: 4}] and m.nnz() == 1 and not m.is_zero()


def test_pure_python_switch():
    env = dict(os.environ, QHH_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import qhh.linalg as l; print(l.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
