# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled dense polynomial kernels.

Same interface as ``_pykernels``.  Multiplication and exact division run on
machine integers when every coefficient fits in 62 bits and no intermediate
overflows; otherwise they fall back to the generic object loops.
"""
from fractions import Fraction
from math import gcd as _igcd

from cpython.mem cimport PyMem_Malloc, PyMem_Free

cdef extern from *:
    """
    static int gb_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int gb_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static int gb_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint gb_mul_ovf(long long a, long long b, long long *r)
    bint gb_add_ovf(long long a, long long b, long long *r)
    bint gb_sub_ovf(long long a, long long b, long long *r)

DEF LIMIT = 4611686018427387904  # 2**62

__all__ = ["mul", "divmod_", "divexact", "gcd", "trim"]


cpdef list trim(list a):
    while a and not a[len(a) - 1]:
        a.pop()
    return a


cdef inline bint _small(list a):
    cdef object x
    for x in a:
        if type(x) is not int or not (-LIMIT < x < LIMIT):
            return False
    return True


cdef long long* _load(list a) except NULL:
    cdef Py_ssize_t i, n = len(a)
    cdef long long* buf = <long long*> PyMem_Malloc((n + 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = a[i]
    return buf


cdef object _mul_i64(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef long long *pa = _load(a)
    cdef long long *pb = NULL
    cdef long long *pr = NULL
    cdef long long t, x
    cdef bint ok = True
    try:
        pb = _load(b)
        pr = <long long*> PyMem_Malloc((na + nb) * sizeof(long long))
        if pr == NULL:
            raise MemoryError()
        for i in range(na + nb - 1):
            pr[i] = 0
        for i in range(na):
            x = pa[i]
            if x == 0:
                continue
            for j in range(nb):
                if gb_mul_ovf(x, pb[j], &t) or gb_add_ovf(pr[i + j], t, &pr[i + j]):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            return None
        return [pr[i] for i in range(na + nb - 1)]
    finally:
        PyMem_Free(pa)
        PyMem_Free(pb)
        PyMem_Free(pr)


cdef list _mul_obj(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef list res = [0] * (na + nb - 1)
    cdef object x
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                res[i + j] += x * b[j]
    return res


cpdef list mul(list a, list b):
    if not a or not b:
        return []
    cdef object res = None
    if _small(a) and _small(b):
        res = _mul_i64(a, b)
    if res is None:
        res = _mul_obj(a, b)
    return trim(<list> res)


cdef inline object _div(object x, object y):
    if type(x) is int and type(y) is int:
        q, r = divmod(x, y)
        return q if not r else Fraction(x, y)
    return x / y


cdef object _divexact_i64(list a, list b):
    """Exact quotient over Z, or None when it leaves Z, overflows or is inexact."""
    cdef Py_ssize_t na = len(a), nb = len(b), db = nb - 1, nq = na - db, k, j
    cdef long long *pa = _load(a)
    cdef long long *pb = NULL
    cdef long long *pq = NULL
    cdef long long lead, c, t, u
    cdef bint ok = True
    try:
        pb = _load(b)
        pq = <long long*> PyMem_Malloc((nq + 1) * sizeof(long long))
        if pq == NULL:
            raise MemoryError()
        lead = pb[db]
        for k in range(nq - 1, -1, -1):
            c = pa[k + db]
            if c % lead != 0:
                ok = False
                break
            t = c // lead
            pq[k] = t
            if t == 0:
                continue
            for j in range(db):
                if gb_mul_ovf(t, pb[j], &u) or gb_sub_ovf(pa[k + j], u, &pa[k + j]):
                    ok = False
                    break
            if not ok:
                break
            pa[k + db] = 0
        if not ok:
            return None
        for k in range(db):
            if pa[k] != 0:
                return False
        return [pq[k] for k in range(nq)]
    finally:
        PyMem_Free(pa)
        PyMem_Free(pb)
        PyMem_Free(pq)


cpdef tuple divmod_(list a, list b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef Py_ssize_t db = len(b) - 1, k, j
    if len(a) <= db:
        return [], list(a)
    a = list(a)
    cdef object lead = b[db], c, t
    cdef list quot = [0] * (len(a) - db)
    for k in range(len(quot) - 1, -1, -1):
        c = a[k + db]
        if c:
            t = _div(c, lead)
            quot[k] = t
            for j in range(db):
                a[k + j] -= t * b[j]
            a[k + db] = 0
    return trim(quot), trim(a[:db])


cpdef object divexact(list a, list b):
    cdef object res
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return None if a else []
    if _small(a) and _small(b):
        res = _divexact_i64(a, b)
        if res is False:
            return None
        if res is not None:
            return trim(<list> res)
    quot, rem = divmod_(a, b)
    return None if rem else quot


cdef bint _is_rational(list a):
    cdef object c
    for c in a:
        if type(c) is not int and not isinstance(c, Fraction):
            return False
    return True


cdef list _primitive(list a):
    cdef object den = 1, g = 0, c
    for c in a:
        if isinstance(c, Fraction):
            den = den * c.denominator // _igcd(den, c.denominator)
    a = [int(c * den) for c in a]
    for c in a:
        g = _igcd(g, c)
    if a[len(a) - 1] < 0:
        g = -g
    return [c // g for c in a]


cdef list _prem(list a, list b):
    cdef Py_ssize_t db = len(b) - 1, shift, j
    cdef object lb = b[db], c, g, x
    a = list(a)
    while len(a) - 1 >= db:
        c = a[len(a) - 1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        trim(a)
        if not a:
            return a
        g = 0
        for x in a:
            g = _igcd(g, x)
            if g == 1:
                break
        if g > 1:
            a = [x // g for x in a]
    return a


cpdef list gcd(list a, list b):
    a = trim(list(a))
    b = trim(list(b))
    if not a:
        a, b = b, a
    if not a:
        return []
    if not b:
        return [_div(c, a[len(a) - 1]) for c in a]
    cdef list r
    if _is_rational(a) and _is_rational(b):
        a = _primitive(a)
        b = _primitive(b)
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _prem(a, b)
            a, b = b, (_primitive(r) if r else r)
    else:
        while b:
            _, r = divmod_(a, b)
            a, b = b, r
    lead = a[len(a) - 1]
    return [_div(c, lead) for c in a]
