# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel; mirrors ``_kernel_py`` function for function."""

from fractions import Fraction

IMPLEMENTATION = "cython"

cdef object _Fraction = Fraction


cdef inline object _num(object r):
    if type(r) is _Fraction and r.denominator == 1:
        return r.numerator
    return r


cdef inline object _norm_dict(dict d):
    if not d:
        return 0
    if len(d) == 1 and 0 in d:
        return d[0]
    return d


cdef inline bint _isdict(object a):
    return type(a) is dict


cpdef bint c_iszero(object a):
    return (not _isdict(a)) and a == 0


cpdef object c_neg(object a):
    cdef dict d
    if _isdict(a):
        d = {}
        for e, v in (<dict>a).items():
            d[e] = -v
        return d
    return -a


cpdef object c_add(object a, object b):
    cdef dict d
    cdef object s
    if not _isdict(a):
        if not _isdict(b):
            return _num(a + b)
        if a == 0:
            return b
        d = dict(<dict>b)
        s = _num(d.get(0, 0) + a)
        if s == 0:
            d.pop(0, None)
        else:
            d[0] = s
        return _norm_dict(d)
    if not _isdict(b):
        return c_add(b, a)
    d = dict(<dict>a)
    for e, v in (<dict>b).items():
        s = d.get(e)
        if s is None:
            d[e] = v
        else:
            s = _num(s + v)
            if s == 0:
                del d[e]
            else:
                d[e] = s
    return _norm_dict(d)


cpdef object c_sub(object a, object b):
    return c_add(a, c_neg(b))


cpdef object c_mul(object a, object b):
    cdef dict d
    cdef object s, e
    if not _isdict(a):
        if not _isdict(b):
            return _num(a * b)
        if a == 0:
            return 0
        if a == 1:
            return b
        d = {}
        for e, v in (<dict>b).items():
            d[e] = _num(a * v)
        return d
    if not _isdict(b):
        return c_mul(b, a)
    d = {}
    for e1, v1 in (<dict>a).items():
        for e2, v2 in (<dict>b).items():
            e = e1 + e2
            s = d.get(e)
            if s is None:
                d[e] = _num(v1 * v2)
            else:
                s = _num(s + v1 * v2)
                if s == 0:
                    del d[e]
                else:
                    d[e] = s
    return _norm_dict(d)


cdef inline void _acc(dict acc, object k, object v):
    cdef object s = acc.get(k)
    if s is None:
        acc[k] = v
    else:
        s = c_add(s, v)
        if (not _isdict(s)) and s == 0:
            del acc[k]
        else:
            acc[k] = s


cpdef dict lc_axpy(dict acc, dict x, object c):
    if (not _isdict(c)) and c == 0:
        return acc
    if (not _isdict(c)) and c == 1:
        for k, v in x.items():
            _acc(acc, k, v)
        return acc
    for k, v in x.items():
        _acc(acc, k, c_mul(v, c))
    return acc


cpdef dict lc_add(dict x, dict y):
    return lc_axpy(dict(x), y, 1)


cpdef dict lc_sub(dict x, dict y):
    return lc_axpy(dict(x), y, -1)


cpdef dict lc_scale(dict x, object c):
    cdef dict out = {}
    if (not _isdict(c)) and c == 0:
        return out
    for k, v in x.items():
        out[k] = c_mul(v, c)
    return out


cpdef dict lc_apply(dict x, object image):
    cdef dict acc = {}
    cdef object img
    for k, c in x.items():
        img = image(k)
        if img:
            lc_axpy(acc, <dict>img, c)
    return acc


cpdef dict lc_apply2(dict x, dict y, object image2):
    cdef dict acc = {}
    cdef object img
    for k, c in x.items():
        for l, d in y.items():
            img = image2(k, l)
            if img:
                lc_axpy(acc, <dict>img, c_mul(c, d))
    return acc


cpdef dict lc_splice(dict x, Py_ssize_t pos, Py_ssize_t arity, object image):
    cdef dict acc = {}
    cdef dict img
    cdef tuple key, head, tail
    cdef Py_ssize_t end = pos + arity
    for k, c in x.items():
        key = <tuple>k
        head = key[:pos]
        tail = key[end:]
        img = image(key[pos:end])
        for t, v in img.items():
            _acc(acc, head + <tuple>t + tail, c_mul(v, c))
    return acc


cpdef dict lc_filter(dict x, object pred):
    cdef dict out = {}
    for k, v in x.items():
        if pred(k):
            out[k] = v
    return out


cpdef dict lc_relabel(dict x, object f):
    cdef dict acc = {}
    for k, c in x.items():
        _acc(acc, f(k), c)
    return acc
