# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``.

Exponents are unpacked into a C buffer so monomial products avoid
intermediate Python lists.  Coefficients stay Python objects (arbitrary
precision integers, occasionally Fractions).
"""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF

BACKEND = "cython"

cdef enum:
    MAXVARS = 64


cdef inline tuple _mono_mul(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, n
    cdef long buf[MAXVARS]
    cdef tuple t
    cdef object v
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    if lb == 0:
        return a
    if la > MAXVARS:
        raise OverflowError("too many variables in monomial")
    for i in range(la):
        buf[i] = <long>a[i]
    for i in range(lb):
        buf[i] += <long>b[i]
    n = la
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    t = PyTuple_New(n)
    for i in range(n):
        v = buf[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(t, i, v)
    return t


def mono_mul(tuple a, tuple b):
    return _mono_mul(a, b)


def mono_pow(tuple a, long k):
    if k == 0:
        return ()
    return tuple([e * k for e in a])


def poly_add(dict f, dict g, int sign=1):
    cdef dict out = dict(f)
    cdef object m, c, v
    for m, c in g.items():
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def poly_mul(dict f, dict g):
    cdef dict out = {}
    cdef tuple mf, mg, m
    cdef object cf, cg, old
    cdef list fitems
    if len(f) < len(g):
        f, g = g, f
    fitems = list(f.items())
    for mg, cg in g.items():
        for mf, cf in fitems:
            m = _mono_mul(mf, mg)
            old = out.get(m)
            if old is None:
                out[m] = cf * cg
            else:
                out[m] = old + cf * cg
    return {m: c for m, c in out.items() if c}


def poly_mul_term(dict f, tuple mono, object coeff):
    cdef tuple m
    cdef object c
    if not coeff:
        return {}
    if len(mono) == 0:
        if coeff == 1:
            return dict(f)
        return {m: c * coeff for m, c in f.items()}
    return {_mono_mul(m, mono): c * coeff for m, c in f.items()}
