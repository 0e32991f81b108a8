# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``; same data layout, same results.

Exponent tuples are combined with typed C loops; coefficients stay
``Fraction`` objects so results are bit-for-bit those of the fallback.
"""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM, PyTuple_GET_SIZE
from cpython.ref cimport Py_INCREF
from heapq import heappop, heappush

BACKEND = "cython"


cdef inline tuple _add(tuple a, tuple b):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a), i
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = <long>(<object>PyTuple_GET_ITEM(a, i)) + <long>(<object>PyTuple_GET_ITEM(b, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline tuple _sub(tuple a, tuple b):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a), i
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = <long>(<object>PyTuple_GET_ITEM(a, i)) - <long>(<object>PyTuple_GET_ITEM(b, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline long _wdeg(tuple e, tuple w):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(e), i
    cdef long s = 0
    for i in range(n):
        s += <long>(<object>PyTuple_GET_ITEM(e, i)) * <long>(<object>PyTuple_GET_ITEM(w, i))
    return s


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a), i
    for i in range(n):
        if <long>(<object>PyTuple_GET_ITEM(a, i)) > <long>(<object>PyTuple_GET_ITEM(b, i)):
            return False
    return True


def wdeg(exp, weights):
    return _wdeg(tuple(exp), tuple(weights))


def order_key(exp, weights):
    return (wdeg(exp, weights), tuple(-e for e in reversed(exp)))


def mul_terms(dict a, dict b):
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef tuple e
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _add(<tuple>ea, <tuple>eb)
            c = out.get(e)
            if c is None:
                out[e] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def add_scaled(dict acc, dict b, coeff, shift=None):
    cdef tuple e
    for eb, cb in b.items():
        e = <tuple>eb if shift is None else _add(<tuple>eb, <tuple>shift)
        c = acc.get(e)
        v = coeff * cb
        if c is None:
            acc[e] = v
        else:
            c = c + v
            if c:
                acc[e] = c
            else:
                del acc[e]


def divides(a, b):
    return _divides(tuple(a), tuple(b))


def find_divisor(exp, leads):
    cdef tuple e = tuple(exp)
    cdef Py_ssize_t i
    for i in range(len(leads)):
        if _divides(<tuple>leads[i], e):
            return i
    return -1


def reduce_terms(dict f, leads, tails, weights):
    cdef tuple w = tuple(weights)
    cdef list lead_list = [tuple(l) for l in leads]
    cdef Py_ssize_t nl = len(lead_list), i
    cdef dict work = dict(f)
    cdef list heap = []
    cdef dict rem = {}
    cdef tuple e, m, shift
    cdef dict tail
    for e in work:
        heappush(heap, (-_wdeg(e, w), e[::-1], e))
    while heap:
        e = heappop(heap)[2]
        c = work.pop(e, None)
        if c is None:
            continue
        i = 0
        while i < nl and not _divides(<tuple>lead_list[i], e):
            i += 1
        if i == nl:
            rem[e] = c
            continue
        shift = _sub(e, <tuple>lead_list[i])
        tail = <dict>tails[i]
        for et, ct in tail.items():
            m = _add(<tuple>et, shift)
            old = work.get(m)
            v = -c * ct
            if old is None:
                work[m] = v
                heappush(heap, (-_wdeg(m, w), m[::-1], m))
            else:
                old = old + v
                if old:
                    work[m] = old
                else:
                    del work[m]
    return rem


def bilinear_reduce(dict a, dict b, nf):
    cdef dict out = {}
    cdef dict image
    for ea, ca in a.items():
        for eb, cb in b.items():
            image = <dict>nf(_add(<tuple>ea, <tuple>eb))
            if not image:
                continue
            cc = ca * cb
            for e, c in image.items():
                old = out.get(e)
                v = cc * c
                if old is None:
                    out[e] = v
                else:
                    old = old + v
                    if old:
                        out[e] = old
                    else:
                        del out[e]
    return out
