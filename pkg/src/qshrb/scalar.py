"""Exact scalars: rationals and Laurent polynomials in one variable ``q``."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import DivisionByNonUnit, ParseError, ZeroSubstitution
from .kernel import c_add, c_iszero, c_mul, c_neg, c_sub

_SUPERSCRIPT = str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹")
_FROM_SUPERSCRIPT = str.maketrans("⁻⁰¹²³⁴⁵⁶⁷⁸⁹", "-0123456789")
_SUPER_RUN = re.compile("[⁻⁰¹²³⁴⁵⁶⁷⁸⁹]+")


def _num(r):
    if type(r) is Fraction and r.denominator == 1:
        return r.numerator
    return r


def to_raw(value):
    """Coerce an int, Fraction or Scalar to the kernel's raw coefficient form."""
    if isinstance(value, Scalar):
        return value._raw
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        return _num(Fraction(value))
    if isinstance(value, str):
        return parse_scalar(value)._raw
    raise TypeError(f"cannot use {type(value).__name__} as a scalar")


def raw_terms(raw) -> dict[int, Fraction | int]:
    """Exponent -> coefficient view of a raw scalar."""
    if type(raw) is dict:
        return raw
    if raw == 0:
        return {}
    return {0: raw}


def raw_from_terms(terms) -> object:
    d = {e: _num(Fraction(c)) for e, c in terms.items() if c != 0}
    if not d:
        return 0
    if len(d) == 1 and 0 in d:
        return d[0]
    return d


class Scalar:
    """Immutable exact element of Q[q, 1/q].

    >>> q = Scalar.q()
    >>> (1 - q**2) + q**2
    Scalar(1)
    """

    __slots__ = ("_raw",)

    def __init__(self, value=0):
        object.__setattr__(self, "_raw", to_raw(value))

    @classmethod
    def from_raw(cls, raw) -> "Scalar":
        s = object.__new__(cls)
        object.__setattr__(s, "_raw", raw)
        return s

    @classmethod
    def q(cls, power: int = 1) -> "Scalar":
        return cls.from_raw(1 if power == 0 else {power: 1})

    @classmethod
    def from_terms(cls, terms) -> "Scalar":
        return cls.from_raw(raw_from_terms(terms))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # immutable, so copies can share the instance
    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __reduce__(self):
        return (Scalar.from_raw, (self._raw,))

    @property
    def raw(self):
        return self._raw

    def terms(self) -> dict[int, Fraction]:
        return {e: Fraction(c) for e, c in sorted(raw_terms(self._raw).items())}

    def is_zero(self) -> bool:
        return c_iszero(self._raw)

    def __bool__(self):
        return not c_iszero(self._raw)

    def is_constant(self) -> bool:
        return type(self._raw) is not dict

    def constant(self) -> Fraction:
        """The rational value; raises if ``q`` occurs."""
        if type(self._raw) is dict:
            raise ValueError(f"{self} is not a rational constant")
        return Fraction(self._raw)

    def min_exp(self) -> int:
        t = raw_terms(self._raw)
        return min(t) if t else 0

    def max_exp(self) -> int:
        t = raw_terms(self._raw)
        return max(t) if t else 0

    def is_unit(self) -> bool:
        return len(raw_terms(self._raw)) == 1

    def __add__(self, other):
        try:
            o = to_raw(other)
        except TypeError:
            return NotImplemented
        return Scalar.from_raw(c_add(self._raw, o))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = to_raw(other)
        except TypeError:
            return NotImplemented
        return Scalar.from_raw(c_sub(self._raw, o))

    def __rsub__(self, other):
        try:
            o = to_raw(other)
        except TypeError:
            return NotImplemented
        return Scalar.from_raw(c_sub(o, self._raw))

    def __neg__(self):
        return Scalar.from_raw(c_neg(self._raw))

    def __pos__(self):
        return self

    def __mul__(self, other):
        try:
            o = to_raw(other)
        except TypeError:
            return NotImplemented
        return Scalar.from_raw(c_mul(self._raw, o))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        t = raw_terms(self._raw)
        if len(t) != 1:
            raise DivisionByNonUnit(f"{self} is not a unit of Q[q, 1/q]")
        (e, c), = t.items()
        return Scalar.from_terms({-e: 1 / Fraction(c)})

    def __truediv__(self, other):
        try:
            o = Scalar.from_raw(to_raw(other))
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = Scalar.from_raw(to_raw(other))
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            o = to_raw(other)
        except TypeError:
            return NotImplemented
        return self._raw == o

    def __hash__(self):
        r = self._raw
        if type(r) is dict:
            return hash(frozenset(r.items()))
        return hash(r)

    def substitute(self, v) -> Fraction:
        return substitute_q(self, v)

    def __repr__(self):
        return f"Scalar({self.to_ascii()!r})" if type(self._raw) is dict else f"Scalar({self._raw})"

    def __str__(self):
        return self.to_ascii()

    def to_ascii(self) -> str:
        return _format(self._raw, pretty=False)

    def pretty(self) -> str:
        return _format(self._raw, pretty=True)

    def n_terms(self) -> int:
        return len(raw_terms(self._raw))


def _format(raw, pretty: bool) -> str:
    t = raw_terms(raw)
    if not t:
        return "0"
    minus = "−" if pretty else "-"
    parts = []
    for e in sorted(t):
        c = Fraction(t[e])
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = str(a)
        else:
            if pretty:
                mono = "q" if e == 1 else "q" + str(e).translate(_SUPERSCRIPT)
            else:
                mono = "q" if e == 1 else f"q^{e}"
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a}{mono}" if pretty else f"{a}*{mono}"
            else:
                body = f"({a}){mono}" if pretty else f"{a}*{mono}"
        if not parts:
            parts.append(("-" if not pretty else minus) + body if neg else body)
        else:
            parts.append(minus + body if neg else "+" + body)
    return "".join(parts)


def substitute_q(a, v) -> Fraction:
    """Evaluate a Laurent polynomial at ``q = v`` (``v`` rational)."""
    v = Fraction(v)
    t = raw_terms(to_raw(a))
    if v == 0:
        if any(e < 0 for e in t):
            raise ZeroSubstitution("q = 0 substituted into a negative power of q")
        return Fraction(t.get(0, 0))
    return sum((Fraction(c) * v**e for e, c in t.items()), Fraction(0))


# --- literal parsing ---------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(q)|(\^)|([+\-−])|([*·])|(\()|(\)))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad scalar literal {text!r} at offset {pos}")
        pos = m.end()
        num, q, caret, sign, star, lp, rp = m.groups()
        if num is not None:
            out.append(("num", Fraction(num)))
        elif q:
            out.append(("q", None))
        elif caret:
            out.append(("^", None))
        elif sign:
            out.append(("sign", -1 if sign in "-−" else 1))
        elif star:
            out.append(("*", None))
        elif lp:
            out.append(("(", None))
        elif rp:
            out.append((")", None))
        # trailing whitespace only
        if text[pos:].strip() == "":
            break
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, why):
        raise ParseError(f"bad scalar literal {self.text!r}: {why}")

    def parse(self):
        if not self.toks:
            self.fail("empty")
        val = self.expr()
        if self.i != len(self.toks):
            self.fail("trailing input")
        return val

    def expr(self):
        sign = 1
        if self.peek() == "sign":
            sign = self.take()[1]
        val = self.product() * sign
        while self.peek() == "sign":
            s = self.take()[1]
            val = val + self.product() * s
        return val

    def product(self):
        val = self.factor()
        while True:
            p = self.peek()
            if p == "*":
                self.take()
                val = val * self.factor()
            elif p in ("num", "q", "("):
                val = val * self.factor()
            else:
                return val

    def factor(self):
        p = self.peek()
        if p == "num":
            return Scalar(self.take()[1])
        if p == "q":
            self.take()
            if self.peek() == "^":
                self.take()
                sign = 1
                if self.peek() == "sign":
                    sign = self.take()[1]
                if self.peek() != "num":
                    self.fail("exponent expected after '^'")
                e = self.take()[1]
                if e.denominator != 1:
                    self.fail("exponent must be an integer")
                return Scalar.q(sign * e.numerator)
            return Scalar.q()
        if p == "(":
            self.take()
            val = self.expr()
            if self.peek() != ")":
                self.fail("unbalanced parenthesis")
            self.take()
            return val
        self.fail("operand expected")


def parse_scalar(text: str) -> Scalar:
    """Parse literals such as ``1``, ``-2/3``, ``q``, ``1-q^2``, ``q^-1``, ``3*q(1+q)``, ``1−q²``."""
    if not isinstance(text, str):
        raise ParseError(f"scalar literal must be a string, got {type(text).__name__}")
    # pretty output writes exponents as superscripts
    text = _SUPER_RUN.sub(lambda m: "^" + m.group().translate(_FROM_SUPERSCRIPT), text)
    return _Parser(text).parse()


q = Scalar.q()
ZERO = Scalar(0)
ONE = Scalar(1)
