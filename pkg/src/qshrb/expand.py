"""Deterministic expansion of products given as text, e.g. ``expand qsh "e2 , e1"``.

An expression is two operands separated by a top-level comma.  An operand is
a sum of terms ``[coeff *] word``; a word is letters separated by spaces or
``⊗`` (``1`` is the empty word).  Diamond operands are ``head | tail`` (or
``head ⊗̲ tail``) over the unitalized algebra, smash operands ``word # h``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .braided_algebra import unitalize
from .errors import DegreeOverflow, ParseError, UnknownLetter
from .fileformat import Definitions
from .kernel import c_iszero, lc_apply2, lc_axpy
from .qmb import QMBDef
from .rota_baxter import RBAlgebra, format_rb_key
from .scalar import Scalar, parse_scalar, to_raw
from .suite import Inapplicable, _algebra, _qsh
from .tensor import default_bound, format_terms, format_word
from .tridendriform import TriOps
from .yd import Bosonization, format_smash_key

PRODUCTS = ("qsh", "diamond", "star", "smash", "tri-left", "tri-right", "tri-dot")


def _split_top(text: str, seps: str) -> list[tuple[str, str]]:
    """Split at separators outside parentheses; returns (sign, chunk) pairs."""
    out, depth, cur, sign = [], 0, [], "+"
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parenthesis in {text!r}")
        if depth == 0 and ch in seps:
            out.append((sign, "".join(cur)))
            cur, sign = [], ch
            continue
        cur.append(ch)
    if depth:
        raise ParseError(f"unbalanced parenthesis in {text!r}")
    out.append((sign, "".join(cur)))
    return out


def _letters(text: str, names: list[str]) -> tuple:
    toks = [t for t in re.split(r"[\s⊗]+", text.strip()) if t]
    if toks == ["1"] and "1" not in names:
        return ()
    out = []
    for t in toks:
        if t not in names:
            raise UnknownLetter(f"unknown letter {t!r}; known: {' '.join(names)}")
        out.append(names.index(t))
    return tuple(out)


def parse_operand(text: str, parse_key) -> dict:
    """A linear combination; ``parse_key`` turns the word part into a basis key."""
    acc: dict = {}
    text = text.strip()
    if not text:
        raise ParseError("empty operand")
    chunks = _split_top(text, "+-−")
    if chunks and not chunks[0][1].strip() and len(chunks) > 1:
        chunks = chunks[1:]
    for sign, chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty term in {text!r}")
        if "*" in chunk:
            coeff_text, key_text = chunk.rsplit("*", 1)
            c = parse_scalar(coeff_text)
        else:
            c, key_text = Scalar(1), chunk
        if sign in "-−":
            c = -c
        if not c.is_zero():
            lc_axpy(acc, {parse_key(key_text): 1}, to_raw(c))
    return acc


def parse_expression(text: str, parse_key) -> tuple[dict, dict]:
    parts = _split_top(text, ",")
    if len(parts) != 2:
        raise ParseError(f"expected two operands separated by ',', got {len(parts)}")
    return parse_operand(parts[0][1], parse_key), parse_operand(parts[1][1], parse_key)


def at_q(raw: dict, v) -> dict:
    out = {}
    for k, c in raw.items():
        val = Scalar.from_raw(c).substitute(v)
        if val:
            out[k] = to_raw(val)
    return out


def parse_q_value(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"--at-q expects a rational number, got {text!r}") from None


def _qmb(defs: Definitions) -> QMBDef:
    if defs.qmb is not None:
        return defs.qmb
    if defs.algebra is not None and not defs.algebra.is_zero_product():
        return QMBDef.from_algebra(defs.algebra, defer_checks=True)
    if defs.space is None:
        raise Inapplicable("needs a braided space")
    return QMBDef.trivial(defs.space)


def _guard(x: dict, y: dict, deg, bound: int):
    dx = max((deg(k) for k in x), default=0)
    dy = max((deg(k) for k in y), default=0)
    if dx + dy > bound:
        raise DegreeOverflow(f"operands of degrees {dx} and {dy} exceed the bound {bound}", (dx, dy))


def expand(defs: Definitions, product: str, expression: str, q_value=None, weight=None) -> str:
    """The product of the two operands as a deterministic term list."""
    if product not in PRODUCTS:
        raise ParseError(f"unknown product {product!r}; choose from {', '.join(PRODUCTS)}")
    bound = default_bound()
    if product == "smash":
        if defs.yd is None:
            raise Inapplicable("smash needs [hopf] and [yd] sections")
        B = Bosonization(defs.yd, defs.qmb)
        hnames = defs.yd.H.names

        def key(t):
            if "#" in t:
                w, h = t.rsplit("#", 1)
            else:
                w, h = t, hnames[next(iter(defs.yd.H.unit()))]
            h = h.strip()
            if h not in hnames:
                raise UnknownLetter(f"unknown Hopf basis element {h!r}; known: {' '.join(hnames)}")
            return (_letters(w, defs.yd.names), hnames.index(h))

        x, y = parse_expression(expression, key)
        _guard(x, y, lambda k: len(k[0]), bound)
        res = lc_apply2(x, y, B.product)
        fmt = lambda k: format_smash_key(defs.yd, k)
    elif product == "diamond":
        alg = unitalize(_algebra(defs))
        R = RBAlgebra(alg, 1 if weight is None else weight)

        def key(t):
            parts = re.split(r"\||⊗̲", t, maxsplit=1)
            head = _letters(parts[0], alg.names)
            if len(head) != 1:
                raise ParseError(f"a diamond operand needs exactly one head letter, got {parts[0].strip()!r}")
            tail = _letters(parts[1], alg.names) if len(parts) > 1 else ()
            return (head[0], tail)

        x, y = parse_expression(expression, key)
        _guard(x, y, lambda k: len(k[1]), bound)
        res = lc_apply2(x, y, R.diamond)
        fmt = lambda k: format_rb_key(k, alg.names)
    else:
        if product == "star":
            qmb = _qmb(defs)
            names, op = qmb.space.names, qmb.star
        else:
            alg = _algebra(defs)
            names = alg.names
            if product == "qsh":
                op = _qsh(defs, alg, 1 if weight is None else weight).words
            else:
                t = TriOps(alg, drop_middle=defs.variant == "drop-middle")
                op = {"tri-left": t.left, "tri-right": t.right, "tri-dot": t.dot}[product]
        x, y = parse_expression(expression, lambda t: _letters(t, names))
        _guard(x, y, len, bound)
        res = lc_apply2(x, y, op)
        fmt = lambda k: format_word(k, names)
    if q_value is not None:
        res = at_q(res, q_value)
    res = {k: c for k, c in res.items() if not c_iszero(c)}
    return format_terms(res, fmt)
