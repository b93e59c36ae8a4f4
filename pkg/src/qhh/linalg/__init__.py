"""Exact sparse linear algebra over Q and GF(p).

The elimination loops come from the compiled ``_kernels`` extension when it
is importable, otherwise from the pure-Python ``_fallback``.  Setting
``QHH_PURE_PYTHON=1`` forces the fallback.  ``BACKEND`` names the choice.
"""

from __future__ import annotations

import os
from collections.abc import Hashable, Iterable

import numpy as np

from . import _fallback

try:
    if os.environ.get("QHH_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernels
except ImportError:
    _kernels = None

BACKEND = "compiled" if _kernels is not None else "python"

_KERNEL_MAX_P = 1 << 31


class SparseMatrix:
    """Integer matrix stored as a list of ``{column: value}`` rows.

    Rows and columns may carry labels (cyclic pairs, basis positions...);
    ``row_index``/``col_index`` map labels back to positions.
    """

    def __init__(self, nrows: int, ncols: int, rows=None, row_labels=None, col_labels=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: list[dict[int, int]] = rows if rows is not None else [{} for _ in range(nrows)]
        self.row_labels = list(row_labels) if row_labels is not None else None
        self.col_labels = list(col_labels) if col_labels is not None else None

    @classmethod
    def from_labels(cls, row_labels: Iterable[Hashable], col_labels: Iterable[Hashable]):
        rl, cl = list(row_labels), list(col_labels)
        m = cls(len(rl), len(cl), row_labels=rl, col_labels=cl)
        m.row_index = {x: i for i, x in enumerate(rl)}
        m.col_index = {x: j for j, x in enumerate(cl)}
        return m

    @classmethod
    def from_rows(cls, rows: Iterable[dict[int, int]], ncols: int):
        rows = [dict(r) for r in rows]
        return cls(len(rows), ncols, rows)

    def add(self, i: int, j: int, v: int):
        row = self.rows[i]
        nv = row.get(j, 0) + v
        if nv:
            row[j] = nv
        else:
            row.pop(j, None)

    def add_labeled(self, row_label, col_label, v: int):
        self.add(self.row_index[row_label], self.col_index[col_label], v)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=object)
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i, j] = v
        return out

    def transpose(self) -> SparseMatrix:
        t = SparseMatrix(self.ncols, self.nrows, row_labels=self.col_labels, col_labels=self.row_labels)
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                t.rows[j][i] = v
        return t

    def matmul(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = SparseMatrix(self.nrows, other.ncols)
        for i, r in enumerate(self.rows):
            acc: dict[int, int] = {}
            for k, v in r.items():
                for j, w in other.rows[k].items():
                    acc[j] = acc.get(j, 0) + v * w
            out.rows[i] = {j: v for j, v in acc.items() if v}
        return out

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def vstack(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.ncols:
            raise ValueError("column mismatch")
        return SparseMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def csr(self, modulus: int = 0):
        """Rows sorted shortest first, each sorted by column, as int64 CSR arrays.

        With ``modulus`` the entries are reduced first (and zero entries dropped).
        """
        rows = self.rows
        if modulus:
            rows = [{j: v % modulus for j, v in r.items() if v % modulus} for r in rows]
        order = sorted((r for r in rows if r), key=len)
        indptr = np.zeros(len(order) + 1, dtype=np.int64)
        np.cumsum(np.fromiter(map(len, order), dtype=np.int64, count=len(order)), out=indptr[1:])
        flat = [x for r in order for kv in sorted(r.items()) for x in kv]
        pairs = np.array(flat, dtype=np.int64).reshape(-1, 2)
        indices = np.ascontiguousarray(pairs[:, 0])
        data = np.ascontiguousarray(pairs[:, 1])
        return indptr, indices, data


def _fits_int64(m: SparseMatrix) -> bool:
    lim = 1 << 62
    return all(-lim < v < lim for r in m.rows for v in r.values())


def rank(m: SparseMatrix, characteristic: int = 0, backend: str | None = None) -> int:
    """Exact rank of ``m`` over Q (characteristic 0) or GF(p)."""
    backend = backend or BACKEND
    if m.nrows == 0 or m.ncols == 0:
        return 0
    use_kernel = backend == "compiled" and _kernels is not None
    if characteristic:
        if use_kernel and characteristic < _KERNEL_MAX_P:
            indptr, indices, data = m.csr(characteristic)
            return _kernels.rank_mod_p(indptr, indices, data, m.ncols, characteristic)
        rows = sorted((r for r in m.rows if r), key=len)
        return _fallback.rank_mod_p(rows, characteristic)
    if use_kernel and _fits_int64(m):
        indptr, indices, data = m.csr()
        res = _kernels.rank_int64(indptr, indices, data, m.ncols)
        if res >= 0:
            return res
    rows = sorted((r for r in m.rows if r), key=len)
    return _fallback.rank_integer(rows)


def nullity(m: SparseMatrix, characteristic: int = 0, backend: str | None = None) -> int:
    return m.ncols - rank(m, characteristic, backend)


__all__ = ["BACKEND", "SparseMatrix", "nullity", "rank"]
