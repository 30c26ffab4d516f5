"""Exact linear algebra over Q(q), Q and Q[q]/(f).

Polynomials are dense lists of Fractions (index = exponent).  Laurent
scalars enter through :func:`laurent_to_ratfunc`.  Factorisation of
polynomials over Q is delegated to sympy.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalar import Scalar, raw_terms, to_raw

# --- dense polynomials over Q -------------------------------------------------


def p_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def p_add(a, b):
    n = max(len(a), len(b))
    return p_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def p_neg(a):
    return [-c for c in a]


def p_sub(a, b):
    return p_add(a, p_neg(b))


def p_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return p_trim(out)


def p_scale(a, c):
    return p_trim([x * c for x in a])


def p_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = Fraction(a[-1]) / lead
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        p_trim(a)
    return p_trim(q), a


def p_monic(a):
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(x) / lead for x in a]


def p_gcd(a, b):
    a, b = p_trim(list(a)), p_trim(list(b))
    while b:
        a, b = b, p_divmod(a, b)[1]
    return p_monic(a)


def p_eval(a, v):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * v + c
    return acc


def p_from_scalar(s) -> tuple[int, list]:
    """Laurent scalar -> (shift, poly) with scalar = q^shift * poly and poly(0) != 0."""
    t = raw_terms(to_raw(s))
    if not t:
        return 0, []
    lo = min(t)
    hi = max(t)
    return lo, [Fraction(t.get(e, 0)) for e in range(lo, hi + 1)]


def p_to_scalar(p, shift: int = 0) -> Scalar:
    return Scalar.from_terms({i + shift: c for i, c in enumerate(p) if c})


def p_format(p, var: str = "q") -> str:
    return p_to_scalar(p).to_ascii() if p else "0"


# --- Q(q) ---------------------------------------------------------------------


class RatFunc:
    """Reduced fraction num/den of polynomials in q; den is monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        den = [Fraction(1)] if den is None else den
        num = p_trim([Fraction(x) for x in num])
        den = p_trim([Fraction(x) for x in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = [], [Fraction(1)]
            return
        g = p_gcd(num, den)
        if len(g) > 1:
            num = p_divmod(num, g)[0]
            den = p_divmod(den, g)[0]
        lead = den[-1]
        self.num = [x / lead for x in num]
        self.den = [x / lead for x in den]

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls([Fraction(c)])

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.num
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den)))

    def __add__(self, o):
        return RatFunc(p_add(p_mul(self.num, o.den), p_mul(o.num, self.den)), p_mul(self.den, o.den))

    def __sub__(self, o):
        return RatFunc(p_sub(p_mul(self.num, o.den), p_mul(o.num, self.den)), p_mul(self.den, o.den))

    def __neg__(self):
        return RatFunc(p_neg(self.num), self.den)

    def __mul__(self, o):
        return RatFunc(p_mul(self.num, o.num), p_mul(self.den, o.den))

    def __truediv__(self, o):
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(p_mul(self.num, o.den), p_mul(self.den, o.num))

    def is_laurent(self) -> bool:
        return len(self.den) >= 1 and all(c == 0 for c in self.den[:-1])

    def to_scalar(self) -> Scalar:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return p_to_scalar(self.num, -(len(self.den) - 1))

    def __repr__(self):
        if self.den == [1]:
            return p_format(self.num)
        return f"({p_format(self.num)})/({p_format(self.den)})"


def laurent_to_ratfunc(s) -> RatFunc:
    shift, p = p_from_scalar(s)
    if shift >= 0:
        return RatFunc([Fraction(0)] * shift + p)
    return RatFunc(p, [Fraction(0)] * (-shift) + [Fraction(1)])


# --- Q[q]/(f) -----------------------------------------------------------------


class ModPoly:
    """Element of the field Q[q]/(f) for irreducible f."""

    __slots__ = ("p", "f")

    def __init__(self, p, f):
        self.f = f
        self.p = p_divmod(p_trim([Fraction(x) for x in p]), f)[1] if len(p) >= len(f) else p_trim([Fraction(x) for x in p])

    def __bool__(self):
        return bool(self.p)

    def __add__(self, o):
        return ModPoly(p_add(self.p, o.p), self.f)

    def __sub__(self, o):
        return ModPoly(p_sub(self.p, o.p), self.f)

    def __mul__(self, o):
        return ModPoly(p_mul(self.p, o.p), self.f)

    def inverse(self) -> "ModPoly":
        # extended Euclid: s*p + t*f = 1
        r0, r1 = list(self.f), list(self.p)
        s0, s1 = [], [Fraction(1)]
        while r1:
            qt, r = p_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, p_sub(s0, p_mul(qt, s1))
        if len(r0) != 1:
            raise ZeroDivisionError("not invertible modulo f")
        return ModPoly(p_scale(s0, 1 / r0[0]), self.f)

    def __truediv__(self, o):
        return self * o.inverse()


# --- elimination --------------------------------------------------------------


def row_echelon(rows: list[list], ncols: int):
    """Gaussian elimination (no row scaling).

    Works for any field whose elements support ``+ - * /`` and truthiness.
    Returns (echelon rows, pivot columns, pivot values).
    """
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    pivot_vals: list = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / pv
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        pivot_vals.append(pv)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots, pivot_vals


def rank(rows: list[list], ncols: int) -> int:
    return len(row_echelon(rows, ncols)[1])


def nullspace(rows: list[list], ncols: int, one, zero) -> list[list]:
    """Basis of {x : rows·x = 0} via back substitution on the echelon form."""
    ech, piv, _ = row_echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        x = [zero] * ncols
        x[fc] = one
        for r in range(len(ech) - 1, -1, -1):
            c = piv[r]
            acc = zero
            for j in range(c + 1, ncols):
                if ech[r][j] and x[j]:
                    acc = acc + ech[r][j] * x[j]
            x[c] = (zero - acc) / ech[r][c] if acc else zero
        basis.append(x)
    return basis


def inverse(matrix: list[list]):
    """Inverse of a square matrix over a field (Gauss-Jordan); None if singular."""
    n = len(matrix)
    if n == 0:
        return []
    sample = next((x for row in matrix for x in row if x), None)
    if sample is None:
        return None
    one = sample / sample
    zero = sample - sample
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c]), None)
        if p is None:
            return None
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv if x else x for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b if b else a for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def factor_over_q(p: list) -> list[list]:
    """Distinct monic irreducible factors over Q (sympy)."""
    import sympy

    if len(p) <= 1:
        return []
    x = sympy.Symbol("q")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p))
    _, facs = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))
    out = []
    for f, _mult in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        out.append(p_monic(coeffs))
    out.sort(key=lambda f: (len(f), [(c.numerator, c.denominator) for c in f]))
    return out


def rational_root(f: list) -> Fraction | None:
    """The root of a monic linear factor."""
    if len(f) == 2:
        return -f[0] / f[1]
    return None


def specialize_rows(rows: Sequence[Sequence], f: list):
    """Reduce a matrix of Laurent scalars into the field Q[q]/(f)."""
    root = rational_root(f)
    if root is not None:
        return [[Fraction(Scalar.from_raw(to_raw(x)).substitute(root)) for x in row] for row in rows]
    out = []
    for row in rows:
        new = []
        for x in row:
            shift, p = p_from_scalar(x)
            e = ModPoly(p, f)
            if shift:
                qq = ModPoly([Fraction(0), Fraction(1)], f)
                factor = qq if shift > 0 else qq.inverse()
                for _ in range(abs(shift)):
                    e = e * factor
            new.append(e)
        out.append(new)
    return out
