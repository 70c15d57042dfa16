# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the loops in _pykernels. Same signatures, same results."""
import numpy as np
cimport numpy as cnp

ctypedef long long i64

cdef extern from *:
    bint __builtin_smulll_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_ssubll_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_saddll_overflow(long long a, long long b, long long *res) nogil


cdef inline i64 _abs(i64 x) nogil:
    return -x if x < 0 else x


cdef inline i64 _fdiv(i64 a, i64 b) nogil:
    # floor division, matching Python's //
    cdef i64 q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef int _axpy(i64[:, ::1] a, Py_ssize_t dst, Py_ssize_t src, i64 q, Py_ssize_t lo,
               Py_ssize_t n, bint rows) nogil:
    # rows: a[dst, j] -= q * a[src, j]; else a[j, dst] -= q * a[j, src]
    cdef Py_ssize_t j
    cdef i64 prod, res, s
    for j in range(lo, n):
        s = a[src, j] if rows else a[j, src]
        if s == 0:
            continue
        if __builtin_smulll_overflow(q, s, &prod):
            return 1
        if rows:
            if __builtin_ssubll_overflow(a[dst, j], prod, &res):
                return 1
            a[dst, j] = res
        else:
            if __builtin_ssubll_overflow(a[j, dst], prod, &res):
                return 1
            a[j, dst] = res
    return 0


def snf_diagonal(rows):
    """Nonzero elementary divisors. Raises OverflowError when int64 is not enough."""
    arr = np.array(rows, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        return []
    arr = np.ascontiguousarray(arr)
    cdef i64[:, ::1] a = arr
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t t, i, j, bi, bj, bad
    cdef i64 best, v, p, q, tmp, res
    cdef bint clean
    divs = []
    for t in range(min(m, n)):
        while True:
            best = 0
            bi = -1
            bj = -1
            for i in range(t, m):
                for j in range(t, n):
                    v = a[i, j]
                    if v != 0 and (best == 0 or _abs(v) < best):
                        best = _abs(v)
                        bi = i
                        bj = j
            if best == 0:
                return divs
            if bi != t:
                for j in range(n):
                    tmp = a[t, j]
                    a[t, j] = a[bi, j]
                    a[bi, j] = tmp
            if bj != t:
                for i in range(m):
                    tmp = a[i, t]
                    a[i, t] = a[i, bj]
                    a[i, bj] = tmp
            p = a[t, t]
            clean = True
            for i in range(t + 1, m):
                v = a[i, t]
                if v != 0:
                    q = _fdiv(v, p)
                    if _axpy(a, i, t, q, t, n, True):
                        raise OverflowError("int64 overflow in Smith form")
                    if a[i, t] != 0:
                        clean = False
            for j in range(t + 1, n):
                v = a[t, j]
                if v != 0:
                    q = _fdiv(v, p)
                    if _axpy(a, j, t, q, t, m, False):
                        raise OverflowError("int64 overflow in Smith form")
                    if a[t, j] != 0:
                        clean = False
            if not clean:
                continue
            bad = -1
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i, j] % p != 0:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            for j in range(t, n):
                if __builtin_saddll_overflow(a[t, j], a[bad, j], &res):
                    raise OverflowError("int64 overflow in Smith form")
                a[t, j] = res
        divs.append(int(_abs(a[t, t])))
    return divs


def commuting_indices(images, signs, w_image, w_signs):
    """Indices k with elements[k] * w == w * elements[k] (signed permutations)."""
    cdef cnp.int32_t[:, ::1] zi = np.ascontiguousarray(images, dtype=np.int32)
    cdef cnp.int8_t[:, ::1] zs = np.ascontiguousarray(signs, dtype=np.int8)
    cdef cnp.int32_t[::1] wi = np.ascontiguousarray(w_image, dtype=np.int32)
    cdef cnp.int8_t[::1] ws = np.ascontiguousarray(w_signs, dtype=np.int8)
    cdef Py_ssize_t N = zi.shape[0], n = wi.shape[0], k, i, j, j2
    cdef bint ok
    out = []
    for k in range(N):
        ok = True
        for i in range(n):
            j = wi[i]
            j2 = zi[k, i]
            if zi[k, j] != wi[j2] or ws[i] * zs[k, j] != zs[k, i] * ws[j2]:
                ok = False
                break
        if ok:
            out.append(k)
    return out
