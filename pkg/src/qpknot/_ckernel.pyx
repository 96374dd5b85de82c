# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-arithmetic kernel.

Semantics are identical to `_pykernel`; see that module for the data
contract.  Coefficients and exponent parts stay arbitrary-precision
Python ints, the win here is loop and dispatch overhead.
"""

from math import gcd

IMPL = "c"


cpdef tuple mono_mul(tuple m1, tuple m2):
    cdef Py_ssize_t i = 0, j = 0, n1 = len(m1), n2 = len(m2)
    cdef tuple e1, e2
    cdef object num, den, g
    if n1 == 0:
        return m2
    if n2 == 0:
        return m1
    out = []
    while i < n1 and j < n2:
        e1 = <tuple> m1[i]
        e2 = <tuple> m2[j]
        if e1[0] == e2[0]:
            num = e1[1] * e2[2] + e2[1] * e1[2]
            if num:
                den = e1[2] * e2[2]
                g = gcd(num if num > 0 else -num, den)
                out.append((e1[0], num // g, den // g))
            i += 1
            j += 1
        elif e1[0] < e2[0]:
            out.append(e1)
            i += 1
        else:
            out.append(e2)
            j += 1
    while i < n1:
        out.append(m1[i])
        i += 1
    while j < n2:
        out.append(m2[j])
        j += 1
    return tuple(out)


cpdef tuple mono_pow(tuple m, object num, object den):
    cdef tuple e
    cdef object nn, dd, g
    cdef Py_ssize_t i, n = len(m)
    if num == 0 or n == 0:
        return ()
    out = []
    for i in range(n):
        e = <tuple> m[i]
        nn = e[1] * num
        dd = e[2] * den
        g = gcd(nn if nn > 0 else -nn, dd)
        out.append((e[0], nn // g, dd // g))
    return tuple(out)


cpdef tuple mono_deg(tuple m):
    cdef tuple e
    cdef object num = 0, den = 1, g
    cdef Py_ssize_t i, n = len(m)
    for i in range(n):
        e = <tuple> m[i]
        num = num * e[2] + e[1] * den
        den = den * e[2]
    if num == 0:
        return (0, 1)
    g = gcd(num if num > 0 else -num, den)
    return (num // g, den // g)


cpdef int mono_cmp(tuple m1, tuple m2):
    cdef Py_ssize_t i = 0, j = 0, len1 = len(m1), len2 = len(m2)
    cdef tuple e1, e2, d1, d2
    cdef object lhs, rhs
    if m1 == m2:
        return 0
    d1 = mono_deg(m1)
    d2 = mono_deg(m2)
    lhs = d1[0] * d2[1]
    rhs = d2[0] * d1[1]
    if lhs != rhs:
        return 1 if lhs > rhs else -1
    while i < len1 or j < len2:
        if j >= len2 or (i < len1 and (<tuple> m1[i])[0] < (<tuple> m2[j])[0]):
            return 1 if (<tuple> m1[i])[1] > 0 else -1
        if i >= len1 or (<tuple> m2[j])[0] < (<tuple> m1[i])[0]:
            return -1 if (<tuple> m2[j])[1] > 0 else 1
        e1 = <tuple> m1[i]
        e2 = <tuple> m2[j]
        lhs = e1[1] * e2[2]
        rhs = e2[1] * e1[2]
        if lhs != rhs:
            return 1 if lhs > rhs else -1
        i += 1
        j += 1
    return 0


cpdef dict poly_add(dict t1, dict t2):
    cdef object m, c, s
    if not t2:
        return dict(t1)
    if not t1:
        return dict(t2)
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    out = dict(t1)
    for m, c in t2.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        elif m in out:
            del out[m]
    return out


cpdef dict poly_neg(dict t):
    cdef object m, c
    out = {}
    for m, c in t.items():
        out[m] = -c
    return out


cpdef dict poly_mul(dict t1, dict t2):
    cdef object m1, m2, c1, c2, m, s
    if not t1 or not t2:
        return {}
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    out = {}
    for m2, c2 in t2.items():
        if <tuple> m2:
            for m1, c1 in t1.items():
                m = mono_mul(<tuple> m1, <tuple> m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        else:
            for m1, c1 in t1.items():
                s = out.get(m1, 0) + c1 * c2
                if s:
                    out[m1] = s
                elif m1 in out:
                    del out[m1]
    return out


cpdef dict poly_term_mul(dict t, tuple mono, object coeff):
    cdef object m, c
    if not t or coeff == 0:
        return {}
    out = {}
    if not mono:
        for m, c in t.items():
            out[m] = c * coeff
    else:
        for m, c in t.items():
            out[mono_mul(<tuple> m, mono)] = c * coeff
    return out


cpdef dict poly_accum_term_mul(dict out, dict t, tuple mono, object coeff):
    cdef object m, c, key, s
    if not t or coeff == 0:
        return out
    if mono:
        for m, c in t.items():
            key = mono_mul(<tuple> m, mono)
            s = out.get(key, 0) + c * coeff
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    else:
        for m, c in t.items():
            s = out.get(m, 0) + c * coeff
            if s:
                out[m] = s
            elif m in out:
                del out[m]
    return out
