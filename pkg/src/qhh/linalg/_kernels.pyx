# distutils: language = c++
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels over CSR input.

Rows are kept as sorted vectors of (column, value).  rank_mod_p works in
GF(p) for p < 2**31; rank_int64 does fraction-free elimination over the
integers and returns -1 as soon as a product would overflow int64, so the
caller can redo the computation with Python integers.
"""

from libc.stdint cimport int64_t
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp cimport bool as cbool

cdef extern from *:
    """
    #include <cstdint>
    static inline bool qhh_mul_ovf(int64_t a, int64_t b, int64_t* out) {
        return __builtin_mul_overflow(a, b, out);
    }
    static inline bool qhh_sub_ovf(int64_t a, int64_t b, int64_t* out) {
        return __builtin_sub_overflow(a, b, out);
    }
    """
    cbool qhh_mul_ovf(int64_t a, int64_t b, int64_t* out) nogil
    cbool qhh_sub_ovf(int64_t a, int64_t b, int64_t* out) nogil

ctypedef pair[int, int64_t] entry
ctypedef vector[entry] srow


cdef inline int64_t _mod(int64_t v, int64_t p) nogil:
    v %= p
    if v < 0:
        v += p
    return v


cdef int64_t _inv_mod(int64_t a, int64_t p) nogil:
    cdef int64_t t = 0, nt = 1, r = p, nr = a, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef int64_t _gcd(int64_t a, int64_t b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef void _axpy_mod(srow& r, const srow& piv, int64_t f, int64_t p, srow& out) nogil:
    # out = r - f * piv (mod p), both inputs sorted by column
    out.clear()
    cdef size_t i = 0, j = 0
    cdef int64_t v
    while i < r.size() or j < piv.size():
        if j >= piv.size() or (i < r.size() and r[i].first < piv[j].first):
            out.push_back(r[i])
            i += 1
        elif i >= r.size() or piv[j].first < r[i].first:
            v = _mod(-f * piv[j].second, p)
            if v:
                out.push_back(entry(piv[j].first, v))
            j += 1
        else:
            v = _mod(r[i].second - f * piv[j].second, p)
            if v:
                out.push_back(entry(r[i].first, v))
            i += 1
            j += 1


cdef cbool _axpy_int(const srow& r, const srow& piv, int64_t mr, int64_t mp, srow& out) nogil:
    # out = mr * r - mp * piv over the integers; False on overflow
    out.clear()
    cdef size_t i = 0, j = 0
    cdef int64_t a, b, v
    while i < r.size() or j < piv.size():
        if j >= piv.size() or (i < r.size() and r[i].first < piv[j].first):
            if qhh_mul_ovf(r[i].second, mr, &a):
                return False
            out.push_back(entry(r[i].first, a))
            i += 1
        elif i >= r.size() or piv[j].first < r[i].first:
            if qhh_mul_ovf(piv[j].second, mp, &b):
                return False
            out.push_back(entry(piv[j].first, -b))
            j += 1
        else:
            if qhh_mul_ovf(r[i].second, mr, &a) or qhh_mul_ovf(piv[j].second, mp, &b):
                return False
            if qhh_sub_ovf(a, b, &v):
                return False
            if v:
                out.push_back(entry(r[i].first, v))
            i += 1
            j += 1
    return True


cdef void _load_row(const int64_t[:] indptr, const int64_t[:] indices, const int64_t[:] data,
                    Py_ssize_t k, srow& r) nogil:
    # CSR rows are expected sorted by column with no duplicates
    r.clear()
    cdef int64_t t
    for t in range(indptr[k], indptr[k + 1]):
        if data[t]:
            r.push_back(entry(<int>indices[t], data[t]))


def rank_mod_p(const int64_t[:] indptr, const int64_t[:] indices, const int64_t[:] data,
               int ncols, int64_t p):
    """Rank of a CSR integer matrix over GF(p)."""
    if p <= 1 or p >= (1 << 31):
        raise ValueError("p must satisfy 1 < p < 2**31")
    cdef Py_ssize_t nrows = indptr.shape[0] - 1
    cdef vector[srow] pivots = vector[srow](ncols)
    cdef vector[char] has = vector[char](ncols, 0)
    cdef srow r, tmp
    cdef Py_ssize_t k
    cdef int c, rank = 0
    cdef int64_t inv, f
    cdef size_t q
    with nogil:
        for k in range(nrows):
            _load_row(indptr, indices, data, k, r)
            tmp.clear()
            for q in range(r.size()):
                f = _mod(r[q].second, p)
                if f:
                    tmp.push_back(entry(r[q].first, f))
            r.swap(tmp)
            while r.size():
                c = r[0].first
                if not has[c]:
                    inv = _inv_mod(r[0].second, p)
                    for q in range(r.size()):
                        r[q].second = (r[q].second * inv) % p
                    pivots[c].swap(r)
                    has[c] = 1
                    rank += 1
                    break
                f = r[0].second
                _axpy_mod(r, pivots[c], f, p, tmp)
                r.swap(tmp)
    return rank


def rank_int64(const int64_t[:] indptr, const int64_t[:] indices, const int64_t[:] data,
               int ncols):
    """Rank over Q by fraction-free elimination; -1 if int64 would overflow."""
    cdef Py_ssize_t nrows = indptr.shape[0] - 1
    cdef vector[srow] pivots = vector[srow](ncols)
    cdef vector[char] has = vector[char](ncols, 0)
    cdef srow r, tmp
    cdef Py_ssize_t k
    cdef int c, rank = 0
    cdef int64_t g, pv, f
    cdef size_t q
    cdef cbool overflow = False
    with nogil:
        for k in range(nrows):
            _load_row(indptr, indices, data, k, r)
            while r.size():
                c = r[0].first
                if not has[c]:
                    g = 0
                    for q in range(r.size()):
                        g = _gcd(g, r[q].second)
                    if r[0].second < 0:
                        g = -g
                    for q in range(r.size()):
                        r[q].second = r[q].second // g
                    pivots[c].swap(r)
                    has[c] = 1
                    rank += 1
                    break
                pv = pivots[c][0].second
                f = r[0].second
                g = _gcd(pv, f)
                if not _axpy_int(r, pivots[c], pv // g, f // g, tmp):
                    overflow = True
                    break
                g = 0
                for q in range(tmp.size()):
                    g = _gcd(g, tmp[q].second)
                if g > 1:
                    for q in range(tmp.size()):
                        tmp[q].second = tmp[q].second // g
                r.swap(tmp)
            if overflow:
                break
    return -1 if overflow else rank
