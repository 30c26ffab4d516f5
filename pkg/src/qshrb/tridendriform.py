"""Tridendriform structure on T⁺(A) and the Rota-Baxter route to it."""

from __future__ import annotations

from typing import Callable, Sequence

from .braided_algebra import BraidedAlgebraDef
from .checks import bilinear, check_identity, check_rb_identity, check_tridendriform
from .errors import DegreeOverflow, WrongWeight, ZeroDegreeOperand
from .kernel import c_mul, lc_add, lc_axpy
from .quasi_shuffle import QuasiShuffle, _pairs, _splits3, get_engine
from .report import Report, combine
from .tensor import TensorElement, Word, default_bound, format_terms, format_word


def _prefixed(acc, letter, x, c):
    lc_axpy(acc, {(letter,) + w: v for w, v in x.items()}, c)


class TriOps:
    """≺, ≻ and · on basis words of T⁺(A) (memoised).

    For u = a⊗x and v = b⊗y:
      u≺v = a⊗(x⋈v)
      u≻v = Σ b′⊗(z⋈y)          with β_{|u|,1}(u⊗b) = Σ b′⊗z
      u·v = Σ m(a⊗b′)⊗(z⋈y)     with β_{|x|,1}(x⊗b) = Σ b′⊗z
    """

    def __init__(self, alg: BraidedAlgebraDef, drop_middle: bool = False):
        self.alg = alg
        self.sp = alg.space
        self.qsh = QuasiShuffle(alg, 1, drop_middle=True) if drop_middle else get_engine(alg, 1)
        self._c: dict = {}

    def _guard(self, u: Word, v: Word):
        if not u or not v:
            raise ZeroDegreeOperand("tridendriform operations are defined on T⁺ only")

    def left(self, u: Word, v: Word) -> dict:
        self._guard(u, v)
        key = ("<", u, v)
        r = self._c.get(key)
        if r is None:
            r = {}
            _prefixed(r, u[0], self.qsh.words(u[1:], v), 1)
            self._c[key] = r
        return r

    def right(self, u: Word, v: Word) -> dict:
        self._guard(u, v)
        key = (">", u, v)
        r = self._c.get(key)
        if r is None:
            r = {}
            for w, c in self.sp.beta_word(len(u), u + (v[0],)).items():
                _prefixed(r, w[0], self.qsh.words(w[1:], v[1:]), c)
            self._c[key] = r
        return r

    def dot(self, u: Word, v: Word) -> dict:
        self._guard(u, v)
        key = (".", u, v)
        r = self._c.get(key)
        if r is None:
            r = {}
            a, x = u[0], u[1:]
            for w, c in self.sp.beta_word(len(x), x + (v[0],)).items():
                tails = None
                for k, mc in self.alg.mul_raw(a, w[0]).items():
                    if tails is None:
                        tails = self.qsh.words(w[1:], v[1:])
                    _prefixed(r, k, tails, c_mul(mc, c))
            self._c[key] = r
        return r

    def ops(self):
        return self.left, self.right, self.dot


def tri_ops(alg: BraidedAlgebraDef, u: TensorElement, v: TensorElement) -> tuple[TensorElement, TensorElement, TensorElement]:
    """(u≺v, u≻v, u·v) for u, v supported in positive degrees."""
    if () in u.raw or () in v.raw:
        raise ZeroDegreeOperand("tridendriform operations are undefined on the empty word")
    bound = min(u.bound, v.bound)
    du, dv = u.top_degree(), v.top_degree()
    if u and v and du + dv > bound:
        raise DegreeOverflow(f"degrees {du} and {dv} exceed the bound {bound}", (du, dv))
    t = _tri_engine(alg)
    return tuple(TensorElement.from_raw(alg.dim, bilinear(op)(u.raw, v.raw), bound) for op in t.ops())


_TRI: dict = {}


def _tri_engine(alg) -> TriOps:
    t = _TRI.get(id(alg))
    if t is None or t.alg is not alg:
        t = TriOps(alg)
        _TRI[id(alg)] = t
    return t


def check_tridendriform_axioms(left: Callable, right: Callable, dot: Callable, samples: Sequence, fmt: Callable, caps=None, name="tridendriform") -> Report:
    """The seven relations on each sample triple; ``details['axiom']`` names the first failure."""
    return check_tridendriform(left, right, dot, samples, fmt, caps, name)


def _cap(cap):
    return min(4 if cap is None else cap, default_bound())


def check_tri_suite(alg: BraidedAlgebraDef, degree_cap: int | None = None, drop_middle: bool = False) -> Report:
    """Seven axioms on basis triples and the sum law ≺+≻+· = ⋈ on basis pairs."""
    cap = _cap(degree_cap)
    t = TriOps(alg, drop_middle=True) if drop_middle else _tri_engine(alg)
    fmtw = lambda w: format_word(w, alg.names)
    caps = {"degree": cap}
    triples = [s for n in range(3, cap + 1) for s in _splits3(alg.dim, n)]
    axioms = check_tridendriform(t.left, t.right, t.dot, triples, fmtw, caps, name="axioms")
    fv = lambda raw: format_terms(raw, fmtw)
    qsh = get_engine(alg, 1)  # the sum law is always against the genuine ⋈
    sum_law = check_identity(
        "sum-law", list(_pairs(alg.dim, cap)),
        lambda s: lc_add(lc_add(t.left(*s), t.right(*s)), t.dot(*s)),
        lambda s: qsh.words(*s), fmtw, fv, caps, "x≺y + x≻y + x·y = x⋈y",
    )
    return combine(f"tridendriform[{alg.label}]", [axioms, sum_law], caps)


def rb_to_tridendriform(mul: Callable, opdef, samples: Sequence, fmt: Callable = str):
    """a≺b = a·P(b), a≻b = P(a)·b, a·b unchanged, for an RB operator of weight 1.

    ``samples`` are the basis pairs on which the weight-1 identity is
    verified first; WrongWeight carries the failing report.
    """
    rep = check_rb_identity(mul, opdef, 1, samples, fmt, name="rota-baxter[λ=1]")
    if not rep.passed:
        raise WrongWeight("operator does not satisfy the weight-1 Rota-Baxter identity", rep)
    mm = bilinear(mul)
    cache: dict = {}

    def left(x, y):
        key = ("<", x, y)
        if key not in cache:
            cache[key] = mm({x: 1}, opdef(y))
        return cache[key]

    def right(x, y):
        key = (">", x, y)
        if key not in cache:
            cache[key] = mm(opdef(x), {y: 1})
        return cache[key]

    return left, right, mul


def check_rb_tri_consistency(R, degree_cap: int | None = None) -> Report:
    """On R_{σ̃,1}(Ã) the operations from (◊, P) agree with tri_ops under (a, x) ↔ a⊗x."""
    from .rota_baxter import operator_P

    cap = _cap(degree_cap)
    P = operator_P(R)
    pairs = [((u[0], u[1:]), (v[0], v[1:])) for u, v in _pairs(R.dim, cap)]
    try:
        left, right, dot = rb_to_tridendriform(R.diamond, P, pairs, R.fmt)
    except WrongWeight as exc:
        return combine(f"rb-vs-tri[{R.label}]", [exc.report], {"degree": cap})
    t = _tri_engine(R.alg)
    to_words = lambda raw: {(h,) + tl: c for (h, tl), c in raw.items()}
    fmtw = lambda w: format_word(w, R.names)
    fv = lambda raw: format_terms(raw, fmtw)
    caps = {"degree": cap}
    fmt_in = lambda k: fmtw((k[0],) + k[1])
    parts = []
    for label, ours, theirs in (("≺", left, t.left), ("≻", right, t.right), ("·", dot, t.dot)):
        parts.append(
            check_identity(
                f"agree{label}", pairs,
                lambda s, f=ours: to_words(f(*s)),
                lambda s, g=theirs: g((s[0][0],) + s[0][1], (s[1][0],) + s[1][1]),
                fmt_in, fv, caps, f"{label} from (◊, P) = {label} of tri_ops",
            )
        )
    return combine(f"rb-vs-tri[{R.label}]", parts, caps)
