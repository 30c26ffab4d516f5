"""Pure-Python kernel for exact sparse linear combinations.

Coefficients ("raw scalars") are either a nonzero ``int``/``Fraction``
(a rational constant) or a ``dict`` mapping integer exponents of ``q`` to
nonzero rationals with at least one nonzero exponent.  Zero is the int ``0``.
A linear combination is a ``dict`` mapping hashable basis keys to nonzero raw
scalars.  Nothing in here mutates its inputs except the explicit
accumulators (``lc_axpy``).

The Cython module ``_kernel_c`` implements exactly the same functions.
"""

from fractions import Fraction

IMPLEMENTATION = "python"


def _num(r):
    if type(r) is Fraction and r.denominator == 1:
        return r.numerator
    return r


def _norm_dict(d):
    if not d:
        return 0
    if len(d) == 1 and 0 in d:
        return d[0]
    return d


def c_iszero(a):
    return type(a) is not dict and a == 0


def c_neg(a):
    if type(a) is dict:
        return {e: -v for e, v in a.items()}
    return -a


def c_add(a, b):
    if type(a) is not dict:
        if type(b) is not dict:
            return _num(a + b)
        if a == 0:
            return b
        d = dict(b)
        s = _num(d.get(0, 0) + a)
        if s == 0:
            d.pop(0, None)
        else:
            d[0] = s
        return _norm_dict(d)
    if type(b) is not dict:
        return c_add(b, a)
    d = dict(a)
    for e, v in b.items():
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


def c_sub(a, b):
    return c_add(a, c_neg(b))


def c_mul(a, b):
    if type(a) is not dict:
        if type(b) is not dict:
            return _num(a * b)
        if a == 0:
            return 0
        if a == 1:
            return b
        return {e: _num(a * v) for e, v in b.items()}
    if type(b) is not dict:
        return c_mul(b, a)
    d = {}
    for e1, v1 in a.items():
        for e2, v2 in b.items():
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


def lc_axpy(acc, x, c):
    """acc += c * x, in place."""
    if type(c) is not dict and c == 0:
        return acc
    if type(c) is not dict and c == 1:
        for k, v in x.items():
            s = acc.get(k)
            if s is None:
                acc[k] = v
            else:
                s = c_add(s, v)
                if type(s) is not dict and s == 0:
                    del acc[k]
                else:
                    acc[k] = s
        return acc
    for k, v in x.items():
        v = c_mul(v, c)
        s = acc.get(k)
        if s is None:
            acc[k] = v
        else:
            s = c_add(s, v)
            if type(s) is not dict and s == 0:
                del acc[k]
            else:
                acc[k] = s
    return acc


def lc_add(x, y):
    return lc_axpy(dict(x), y, 1)


def lc_sub(x, y):
    return lc_axpy(dict(x), y, -1)


def lc_scale(x, c):
    if type(c) is not dict and c == 0:
        return {}
    return {k: c_mul(v, c) for k, v in x.items()}


def lc_apply(x, image):
    """Extend the basis map ``image`` linearly over ``x``."""
    acc = {}
    for k, c in x.items():
        img = image(k)
        if img:
            lc_axpy(acc, img, c)
    return acc


def lc_apply2(x, y, image2):
    """Extend the basis map ``image2`` bilinearly over ``x`` and ``y``."""
    acc = {}
    for k, c in x.items():
        for l, d in y.items():
            img = image2(k, l)
            if img:
                lc_axpy(acc, img, c_mul(c, d))
    return acc


def lc_splice(x, pos, arity, image):
    """Apply a basis map to the tuple slice ``key[pos:pos+arity]`` of every key.

    ``image`` receives the slice and returns a combination keyed by
    replacement tuples, which are spliced back in place of the slice.
    """
    acc = {}
    end = pos + arity
    for k, c in x.items():
        head = k[:pos]
        tail = k[end:]
        img = image(k[pos:end])
        for t, v in img.items():
            nk = head + t + tail
            v = c_mul(v, c)
            s = acc.get(nk)
            if s is None:
                acc[nk] = v
            else:
                s = c_add(s, v)
                if type(s) is not dict and s == 0:
                    del acc[nk]
                else:
                    acc[nk] = s
    return acc


def lc_filter(x, pred):
    return {k: v for k, v in x.items() if pred(k)}


def lc_relabel(x, f):
    """Push coefficients along a key map (non-injective maps accumulate)."""
    acc = {}
    for k, c in x.items():
        nk = f(k)
        s = acc.get(nk)
        if s is None:
            acc[nk] = c
        else:
            s = c_add(s, c)
            if type(s) is not dict and s == 0:
                del acc[nk]
            else:
                acc[nk] = s
    return acc
