# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels, bit-identical to ``_pykernels``.

Arithmetic runs in 128-bit integers with overflow checks; any overflow drops
the call to exact Python integers, so results never depend on the backend.
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow

from ._pykernels import eval_table as _py_eval_table

cdef extern from *:
    """
    typedef __int128 i128;
    static inline int mul128(i128 a, i128 b, i128 *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int add128(i128 a, i128 b, i128 *r) { return __builtin_add_overflow(a, b, r); }
    static PyObject *i128_to_py(i128 v) {
        unsigned char buf[16];
        unsigned __int128 u = (unsigned __int128)v;
        int i;
        if (v >= LLONG_MIN && v <= LLONG_MAX) return PyLong_FromLongLong((long long)v);
        for (i = 0; i < 16; i++) buf[i] = (unsigned char)((u >> (8 * i)) & 0xff);
        return _PyLong_FromByteArray(buf, 16, 1, 1);
    }
    """
    # Cython sees a stand-in type; the C code uses a real 128-bit integer.
    # Only comparisons, casts and the helpers below may touch it.
    ctypedef long long i128
    bint mul128(i128 a, i128 b, i128 *r) nogil
    bint add128(i128 a, i128 b, i128 *r) nogil
    object i128_to_py(i128 v)


cdef bint _small(object v, long long *out):
    cdef int overflow = 0
    out[0] = PyLong_AsLongLongAndOverflow(v, &overflow)
    return overflow == 0


def eval_table(exps, coeffs, point):
    cdef Py_ssize_t nterm = len(coeffs)
    cdef Py_ssize_t v, k, e, top
    cdef long long x
    cdef i128 acc, term, tmp
    cdef i128 pw[5][65]
    cdef int tops[5]
    cdef bint ok = True
    cdef long long cl
    cdef long long xs[5]
    for v in range(5):
        if not _small(point[v], &xs[v]):
            return _py_eval_table(exps, coeffs, point)
    cdef list ex = list(exps)

    for v in range(5):
        top = 0
        for k in range(v, 5 * nterm, 5):
            if ex[k] > top:
                top = ex[k]
        x = xs[v]
        if top > 64:
            ok = False
            break
        tops[v] = top
        pw[v][0] = 1
        for e in range(1, top + 1):
            if mul128(pw[v][e - 1], x, &pw[v][e]):
                ok = False
                break
        if not ok:
            break
    if ok:
        acc = 0
        for k in range(nterm):
            if not _small(coeffs[k], &cl):
                ok = False
                break
            term = cl
            for v in range(5):
                if mul128(term, pw[v][<Py_ssize_t>ex[5 * k + v]], &tmp):
                    ok = False
                    break
                term = tmp
            if not ok or add128(acc, term, &tmp):
                ok = False
                break
            acc = tmp
        if ok:
            return i128_to_py(acc)
    return _py_eval_table(exps, coeffs, point)


cdef int _eval_fast(tuple coeffs, long long num, long long den, i128 *out):
    """0 on success, 1 on overflow."""
    cdef i128 acc = 0, dpow = 1, tmp, t2
    cdef long long c
    cdef Py_ssize_t i, n = len(coeffs)
    for i in range(n - 1, -1, -1):
        if not _small(coeffs[i], &c):
            return 1
        if mul128(acc, num, &tmp):
            return 1
        if mul128(<i128>c, dpow, &t2):
            return 1
        if add128(tmp, t2, &acc):
            return 1
        if i and mul128(dpow, den, &dpow):
            return 1
    out[0] = acc
    return 0


cdef object _eval_obj(coeffs, num, den):
    acc = 0
    dpow = 1
    for c in reversed(coeffs):
        acc = acc * num + c * dpow
        dpow *= den
    return acc


def eval_homogeneous(coeffs, num, den):
    cdef long long n, d
    cdef i128 r
    if _small(num, &n) and _small(den, &d) and _eval_fast(tuple(coeffs), n, d, &r) == 0:
        return i128_to_py(r)
    return _eval_obj(coeffs, num, den)


def sign_variations_at(chain, num, den):
    cdef long long n = 0, d = 0
    cdef bint small = _small(num, &n) and _small(den, &d)
    cdef i128 r
    cdef int count = 0, prev = 0, s
    for coeffs in chain:
        if small and _eval_fast(<tuple>coeffs, n, d, &r) == 0:
            s = (r > 0) - (r < 0)
        else:
            v = _eval_obj(coeffs, num, den)
            s = (v > 0) - (v < 0)
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count
