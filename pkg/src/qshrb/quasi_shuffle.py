"""The quantum quasi-shuffle product ⋈_σ on T(A) and the classical Hoffman product."""

from __future__ import annotations

import itertools
from math import comb
from typing import Mapping

from .braided_algebra import BraidedAlgebraDef
from .checks import check_identity
from .errors import DegreeOverflow
from .kernel import c_iszero, c_mul, lc_apply2, lc_axpy, lc_filter
from .report import Report, combine
from .scalar import Scalar, to_raw
from .tensor import TensorElement, Word, default_bound, format_terms, format_word, words


def _prefix(acc: dict, letter: int, x: dict, c) -> None:
    """acc += c · (letter ⊗ x)."""
    lc_axpy(acc, {(letter,) + w: v for w, v in x.items()}, c)


class QuasiShuffle:
    """⋈_{σ,λ} for a braided algebra, memoised on pairs of basis words.

    On words a = a₁a′ and b = b₁b′ the product is

        a₁⊗(a′⋈b) + Σ y⊗(z⋈b′) + Σ λ m(a₁⊗y′)⊗(z′⋈b′)

    with β_{i,1}(a⊗b₁) = Σ y⊗z and β_{i-1,1}(a′⊗b₁) = Σ y′⊗z′.  Specialising
    i or j to 1 gives the single-letter clauses.
    """

    def __init__(self, alg: BraidedAlgebraDef, weight=1, drop_middle: bool = False):
        self.alg = alg
        self.sp = alg.space
        self.weight = Scalar(weight)
        self._lam = to_raw(weight)
        self._cache: dict = {}
        # negative-control switch: omit the β-term of the recursion
        self._drop_middle = drop_middle

    def words(self, x: Word, y: Word) -> dict:
        if not x:
            return {y: 1}
        if not y:
            return {x: 1}
        key = (x, y)
        r = self._cache.get(key)
        if r is not None:
            return r
        a1, ap = x[0], x[1:]
        b1, bp = y[0], y[1:]
        acc: dict = {}
        _prefix(acc, a1, self.words(ap, y), 1)
        if not self._drop_middle:
            for w, c in self.sp.beta_word(len(x), x + (b1,)).items():
                _prefix(acc, w[0], self.words(w[1:], bp), c)
        if not c_iszero(self._lam):
            for w, c in self.sp.beta_word(len(ap), ap + (b1,)).items():
                y1, z = w[0], w[1:]
                for k, mc in self.alg.mul_raw(a1, y1).items():
                    _prefix(acc, k, self.words(z, bp), c_mul(c_mul(mc, c), self._lam))
        self._cache[key] = acc
        return acc

    def raw(self, x: dict, y: dict) -> dict:
        return lc_apply2(x, y, self.words)

    def __call__(self, x: TensorElement, y: TensorElement) -> TensorElement:
        return qsh_product(self.alg, self.weight, x, y, engine=self)


_ENGINES: dict = {}


def get_engine(alg: BraidedAlgebraDef, weight=1) -> QuasiShuffle:
    key = (id(alg), Scalar(weight))
    e = _ENGINES.get(key)
    if e is None or e.alg is not alg:
        e = QuasiShuffle(alg, weight)
        _ENGINES[key] = e
    return e


def qsh_product(alg: BraidedAlgebraDef, weight, x: TensorElement, y: TensorElement, engine: QuasiShuffle | None = None) -> TensorElement:
    """x ⋈_{σ,λ} y; raises DegreeOverflow if the top degrees add up past the bound."""
    bound = min(x.bound, y.bound)
    dx = x.top_degree() if x else 0
    dy = y.top_degree() if y else 0
    if x and y and dx + dy > bound:
        raise DegreeOverflow(f"⋈ of degrees {dx} and {dy} exceeds the bound {bound}", (dx, dy))
    eng = engine if engine is not None else get_engine(alg, weight)
    return TensorElement.from_raw(alg.dim, eng.raw(x.raw, y.raw), bound)


def classical_qsh_oracle(m: Mapping, x: Word, y: Word, weight=1) -> dict:
    """Hoffman's quasi-shuffle for the flip, written from scratch.

    ``m[(a, b)]`` is a dict letter -> coefficient.  Coefficients here are plain
    Python numbers or Scalars; nothing from the braided machinery is used.
    """
    x, y = tuple(x), tuple(y)
    memo: dict = {}

    def add(acc, w, c):
        acc[w] = acc.get(w, 0) + c
        if acc[w] == 0:
            del acc[w]

    def rec(u, v):
        if not u:
            return {v: 1}
        if not v:
            return {u: 1}
        if (u, v) in memo:
            return memo[(u, v)]
        acc: dict = {}
        a, b = u[0], v[0]
        for w, c in rec(u[1:], v).items():
            add(acc, (a,) + w, c)
        for w, c in rec(u, v[1:]).items():
            add(acc, (b,) + w, c)
        for k, mc in m.get((a, b), {}).items():
            for w, c in rec(u[1:], v[1:]).items():
                add(acc, (k,) + w, weight * mc * c)
        memo[(u, v)] = acc
        return acc

    return rec(x, y)


# --- checks ----------------------------------------------------------------------


def _fmt(alg):
    return lambda w: format_word(w, alg.names)


def _cap(cap):
    return default_bound() if cap is None else cap


def check_qsh_associativity(alg: BraidedAlgebraDef, weight=1, degree_cap: int | None = None, product: QuasiShuffle | None = None) -> Report:
    """(x⋈y)⋈z = x⋈(y⋈z) on all basis words of total degree ≤ cap, plus unit laws."""
    cap = min(_cap(degree_cap), default_bound())
    eng = product or get_engine(alg, weight)
    fmtw = _fmt(alg)
    fv = lambda raw: format_terms(raw, fmtw)
    caps = {"degree": cap}
    ws = list(words(alg.dim, cap))
    unit = check_identity(
        "unit", [(w,) for w in ws],
        lambda s: eng.words((), s[0]), lambda s: {s[0]: 1}, fmtw, fv, caps, "1⋈x = x",
    )
    unit2 = check_identity(
        "unit", [(w,) for w in ws],
        lambda s: eng.words(s[0], ()), lambda s: {s[0]: 1}, fmtw, fv, caps, "x⋈1 = x",
    )
    triples = [
        (a, b, c)
        for n in range(3, cap + 1)
        for a, b, c in _splits3(alg.dim, n)
    ]
    assoc = check_identity(
        "associativity", triples,
        lambda t: lc_apply2(eng.words(t[0], t[1]), {t[2]: 1}, eng.words),
        lambda t: lc_apply2({t[0]: 1}, eng.words(t[1], t[2]), eng.words),
        fmtw, fv, caps, "(x⋈y)⋈z = x⋈(y⋈z)",
    )
    return combine(f"qsh-assoc[{alg.label}, λ={Scalar(weight)}]", [unit, unit2, assoc], caps)


def _splits3(dim: int, n: int):
    """Triples of nonempty words with total length n, degree-ordered."""
    for i in range(1, n - 1):
        for j in range(1, n - i):
            k = n - i - j
            for a in itertools.product(range(dim), repeat=i):
                for b in itertools.product(range(dim), repeat=j):
                    for c in itertools.product(range(dim), repeat=k):
                        yield (a, b, c)


def _pairs(dim: int, cap: int, min_each: int = 1):
    for n in range(2 * min_each, cap + 1):
        for i in range(min_each, n - min_each + 1):
            for a in itertools.product(range(dim), repeat=i):
                for b in itertools.product(range(dim), repeat=n - i):
                    yield (a, b)


def check_filtration(alg: BraidedAlgebraDef, weight=1, degree_cap: int | None = None, product: QuasiShuffle | None = None) -> Report:
    """x⋈y lies in degrees ≤ |x|+|y| and its top component is the quantum shuffle x⋈_{λ=0}y."""
    cap = min(_cap(degree_cap), default_bound())
    eng = product or get_engine(alg, weight)
    shuffle = get_engine(alg, 0)
    fmtw = _fmt(alg)
    fv = lambda raw: format_terms(raw, fmtw)
    caps = {"degree": cap}
    pairs = list(_pairs(alg.dim, cap))
    r1 = check_identity(
        "filtration", pairs,
        lambda s: lc_filter(eng.words(*s), lambda w: len(w) > len(s[0]) + len(s[1])),
        lambda s: {}, fmtw, fv, caps, "components above degree i+j vanish",
    )
    r2 = check_identity(
        "top-component", pairs,
        lambda s: lc_filter(eng.words(*s), lambda w: len(w) == len(s[0]) + len(s[1])),
        lambda s: shuffle.words(*s), fmtw, fv, caps, "top component = quantum shuffle",
    )
    return combine(f"filtration[{alg.label}, λ={Scalar(weight)}]", [r1, r2], caps)


def shuffle_count(i: int, j: int) -> int:
    return comb(i + j, i)
