"""Pure-Python sparse polynomial kernels.

Polynomials are ``dict`` objects mapping exponent tuples to ``Fraction``
coefficients; zero coefficients are never stored.  Every function here has
a drop-in twin in ``_ckernels.pyx`` and the two must agree term for term.

Monomial order is weighted graded reverse lexicographic: higher weighted
degree first, ties broken by the smaller exponent in the last variable.
"""

from heapq import heappop, heappush

BACKEND = "python"


def wdeg(exp, weights):
    return sum(e * w for e, w in zip(exp, weights))


def order_key(exp, weights):
    """Sort key: larger key means larger monomial."""
    return (wdeg(exp, weights), tuple(-e for e in reversed(exp)))


def mul_terms(a, b):
    """Product of two term dicts."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            c = get(e)
            if c is None:
                out[e] = ca * cb
            else:
                c += ca * cb
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def add_scaled(acc, b, coeff, shift=None):
    """In place: ``acc += coeff * x**shift * b``."""
    get = acc.get
    for eb, cb in b.items():
        e = eb if shift is None else tuple([x + y for x, y in zip(eb, shift)])
        c = get(e)
        v = coeff * cb
        if c is None:
            acc[e] = v
        else:
            c += v
            if c:
                acc[e] = c
            else:
                del acc[e]


def divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def find_divisor(exp, leads):
    for i, lead in enumerate(leads):
        if divides(lead, exp):
            return i
    return -1


def reduce_terms(f, leads, tails, weights):
    """Full normal form of ``f`` modulo a monic basis.

    ``leads[i]`` is the leading exponent of the i-th basis element and
    ``tails[i]`` its remaining terms (the element is ``x**leads[i] + tails[i]``).
    """
    work = dict(f)
    heap = []
    for e in work:
        heappush(heap, (-wdeg(e, weights), e[::-1], e))
    rem = {}
    while heap:
        _, _, e = heappop(heap)
        c = work.pop(e, None)
        if c is None:
            continue
        i = find_divisor(e, leads)
        if i < 0:
            rem[e] = c
            continue
        shift = tuple([x - y for x, y in zip(e, leads[i])])
        get = work.get
        for et, ct in tails[i].items():
            m = tuple([x + y for x, y in zip(et, shift)])
            old = get(m)
            v = -c * ct
            if old is None:
                work[m] = v
                heappush(heap, (-wdeg(m, weights), m[::-1], m))
            else:
                old += v
                if old:
                    work[m] = old
                else:
                    del work[m]
    return rem


def bilinear_reduce(a, b, nf):
    """``sum a[m1] * b[m2] * nf(m1*m2)`` where ``nf`` returns term dicts."""
    out = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            image = nf(tuple([x + y for x, y in zip(ea, eb)]))
            if not image:
                continue
            cc = ca * cb
            for e, c in image.items():
                old = get(e)
                v = cc * c
                if old is None:
                    out[e] = v
                else:
                    old += v
                    if old:
                        out[e] = old
                    else:
                        del out[e]
    return out
