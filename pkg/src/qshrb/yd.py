"""Finite-dimensional Hopf algebras, Yetter-Drinfeld modules and the bosonization T(V)#H.

Structure constants are 0-based.  On T(V) the action and coaction are the
diagonal ones:

    h·(v₁⊗…⊗vₙ) = h₍₁₎·v₁ ⊗ … ⊗ h₍ₙ₎·vₙ
    ρ(v₁⊗…⊗vₙ)  = v₁₍₋₁₎⋯vₙ₍₋₁₎ ⊗ v₁₍₀₎⊗…⊗vₙ₍₀₎
"""

from __future__ import annotations

import itertools
from typing import Callable, Mapping, Sequence

from .braided_space import BraidedSpace
from .checks import Carrier, check_identity, check_unit_laws, check_ybe
from .errors import DegreeOverflow, InternalInconsistency, ValidationError
from .kernel import c_iszero, c_mul, lc_apply, lc_apply2, lc_axpy, lc_filter, lc_sub
from .qmb import QMBDef
from .report import Report, combine
from .rota_baxter import RBOperatorDef, Split, check_braided_rb, split_projection_rb
from .scalar import Scalar, to_raw
from .tensor import LinComb, Word, default_bound, format_terms, format_word, words


def _table(src: Mapping, keys, check_key: Callable, what: str) -> dict:
    out = {}
    for k in keys:
        img = {}
        for t, c in dict(src.get(k, {})).items():
            check_key(t)
            r = to_raw(c)
            if not c_iszero(r):
                img[t] = r
        out[k] = img
    for k in src:
        if k not in out:
            raise ValidationError(f"{what} index {k} out of range")
    return out


class HopfAlgebraDef:
    """H given by multiplication, unit, comultiplication, counit and antipode constants.

    ``mult[(i, j)] = {k: c}``, ``unit = {k: c}``, ``comult[i] = {(j, k): c}``,
    ``counit[i] = c``, ``antipode[i] = {j: c}``.
    """

    def __init__(self, dim: int, mult: Mapping, unit: Mapping, comult: Mapping, counit: Mapping, antipode: Mapping,
                 names: Sequence[str] | None = None, label: str = "H", defer_checks: bool = False):
        if dim < 1:
            raise ValidationError("a Hopf algebra needs dim >= 1")
        self.dim = dim
        self.names = list(names) if names is not None else [f"h{i + 1}" for i in range(dim)]
        self.label = label
        rng = range(dim)

        def letter(k):
            if not 0 <= k < dim:
                raise ValidationError(f"index {k} out of range")

        def pair(k):
            if not (isinstance(k, tuple) and len(k) == 2):
                raise ValidationError(f"expected an index pair, got {k!r}")
            letter(k[0])
            letter(k[1])

        self._m = _table(mult, [(i, j) for i in rng for j in rng], letter, "product")
        self._unit = {k: to_raw(c) for k, c in dict(unit).items() if not c_iszero(to_raw(c))}
        for k in self._unit:
            letter(k)
        self._D = _table(comult, list(rng), pair, "coproduct")
        self._eps = {i: to_raw(counit.get(i, 0)) for i in rng}
        self._S = _table(antipode, list(rng), letter, "antipode")
        self._Dn: dict = {}
        if not defer_checks:
            rep = check_hopf_axioms(self)
            if not rep.passed:
                raise ValidationError(f"{label} fails the Hopf algebra axioms", rep)

    def mul(self, x: dict, y: dict) -> dict:
        return lc_apply2(x, y, lambda i, j: self._m[(i, j)])

    def mul_basis(self, i: int, j: int) -> dict:
        return self._m[(i, j)]

    def unit(self) -> dict:
        return self._unit

    def antipode(self, x: dict) -> dict:
        return lc_apply(x, lambda i: self._S[i])

    def counit(self, x: dict):
        acc: dict = {}
        for i, c in x.items():
            if not c_iszero(self._eps[i]):
                lc_axpy(acc, {(): self._eps[i]}, c)
        return acc.get((), 0)

    def coproduct(self, i: int) -> dict:
        return self._D[i]

    def delta_n(self, i: int, n: int) -> dict:
        """Δ^{(n-1)}(e_i) keyed by n-tuples; Δ^{(k+1)} = (Δ^{(k)}⊗id)∘Δ."""
        key = (i, n)
        r = self._Dn.get(key)
        if r is None:
            if n == 1:
                r = {(i,): 1}
            else:
                r = {}
                for (a, b), c in self._D[i].items():
                    for t, c2 in self.delta_n(a, n - 1).items():
                        lc_axpy(r, {t + (b,): c2}, c)
            self._Dn[key] = r
        return r

    def fmt(self, i: int) -> str:
        return self.names[i]


def check_hopf_axioms(H: HopfAlgebraDef) -> Report:
    d = H.dim
    fmt = H.fmt
    fv = lambda raw: format_terms(raw, lambda k: "⊗".join(H.names[i] for i in k) if isinstance(k, tuple) else H.names[k])
    e = lambda i: {i: 1}
    singles = [(i,) for i in range(d)]
    pairs = [(i, j) for i in range(d) for j in range(d)]
    triples = list(itertools.product(range(d), repeat=3))

    def D(x):
        return lc_apply(x, H.coproduct)

    def tensor_mul(X, Y):
        return lc_apply2(X, Y, lambda a, b: {(k, l): c_mul(c1, c2) for k, c1 in H.mul_basis(a[0], b[0]).items() for l, c2 in H.mul_basis(a[1], b[1]).items() if not c_iszero(c_mul(c1, c2))})

    def counit_left(i):
        acc: dict = {}
        for (a, b), c in H.coproduct(i).items():
            if not c_iszero(H._eps[a]):
                lc_axpy(acc, {b: H._eps[a]}, c)
        return acc

    def counit_right(i):
        acc: dict = {}
        for (a, b), c in H.coproduct(i).items():
            if not c_iszero(H._eps[b]):
                lc_axpy(acc, {a: H._eps[b]}, c)
        return acc

    def eta_eps(i):
        return {k: c_mul(v, H._eps[i]) for k, v in H.unit().items() if not c_iszero(H._eps[i])}

    def s_left(i):
        acc: dict = {}
        for (a, b), c in H.coproduct(i).items():
            lc_axpy(acc, H.mul(H.antipode({a: 1}), {b: 1}), c)
        return acc

    def s_right(i):
        acc: dict = {}
        for (a, b), c in H.coproduct(i).items():
            lc_axpy(acc, H.mul({a: 1}, H.antipode({b: 1})), c)
        return acc

    parts = [
        check_identity("associativity", triples, lambda t: H.mul(H.mul(e(t[0]), e(t[1])), e(t[2])), lambda t: H.mul(e(t[0]), H.mul(e(t[1]), e(t[2]))), fmt, fv, None, "(hk)l = h(kl)"),
        check_identity("unit", singles, lambda s: H.mul(H.unit(), e(s[0])), lambda s: e(s[0]), fmt, fv, None, "1h = h"),
        check_identity("unit", singles, lambda s: H.mul(e(s[0]), H.unit()), lambda s: e(s[0]), fmt, fv, None, "h1 = h"),
        check_identity("coassociativity", singles, lambda s: H.delta_n(s[0], 3), lambda s: _right_nested3(H, s[0]), fmt, fv, None, "(Δ⊗id)Δ = (id⊗Δ)Δ"),
        check_identity("counit", singles, lambda s: counit_left(s[0]), lambda s: e(s[0]), fmt, fv, None, "(ε⊗id)Δ = id"),
        check_identity("counit", singles, lambda s: counit_right(s[0]), lambda s: e(s[0]), fmt, fv, None, "(id⊗ε)Δ = id"),
        check_identity("bialgebra", pairs, lambda t: D(H.mul(e(t[0]), e(t[1]))), lambda t: tensor_mul(H.coproduct(t[0]), H.coproduct(t[1])), fmt, fv, None, "Δ(hk) = Δ(h)Δ(k)"),
        check_identity("bialgebra", pairs, lambda t: {(): H.counit(H.mul(e(t[0]), e(t[1])))} if not c_iszero(H.counit(H.mul(e(t[0]), e(t[1])))) else {}, lambda t: {(): c_mul(H._eps[t[0]], H._eps[t[1]])} if not c_iszero(c_mul(H._eps[t[0]], H._eps[t[1]])) else {}, fmt, fv, None, "ε(hk) = ε(h)ε(k)"),
        check_identity("bialgebra", [()], lambda s: D(H.unit()), lambda s: _unit_tensor(H), fmt, fv, None, "Δ(1) = 1⊗1"),
        check_identity("antipode", singles, lambda s: s_left(s[0]), lambda s: eta_eps(s[0]), fmt, fv, None, "m(S⊗id)Δ = ηε"),
        check_identity("antipode", singles, lambda s: s_right(s[0]), lambda s: eta_eps(s[0]), fmt, fv, None, "m(id⊗S)Δ = ηε"),
    ]
    return combine(f"hopf[{H.label}]", parts)


def _unit_tensor(H):
    acc: dict = {}
    for k, c in H.unit().items():
        for k2, c2 in H.unit().items():
            lc_axpy(acc, {(k, k2): c_mul(c, c2)}, 1)
    return acc


def _right_nested3(H, i):
    acc: dict = {}
    for (a, b), c in H.coproduct(i).items():
        for (b1, b2), c2 in H.coproduct(b).items():
            lc_axpy(acc, {(a, b1, b2): c2}, c)
    return acc


def trivial_hopf() -> HopfAlgebraDef:
    return HopfAlgebraDef(1, {(0, 0): {0: 1}}, {0: 1}, {0: {(0, 0): 1}}, {0: 1}, {0: {0: 1}}, names=["1"], label="K")


def group_algebra(n: int, label: str | None = None) -> HopfAlgebraDef:
    """𝕂[ℤ/n] with basis 1, g, …, g^{n-1} (group-like)."""
    names = ["1"] + (["g"] if n > 1 else []) + [f"g^{k}" for k in range(2, n)]
    mult = {(i, j): {(i + j) % n: 1} for i in range(n) for j in range(n)}
    comult = {i: {(i, i): 1} for i in range(n)}
    counit = {i: 1 for i in range(n)}
    antipode = {i: {(-i) % n: 1} for i in range(n)}
    return HopfAlgebraDef(n, mult, {0: 1}, comult, counit, antipode, names=names, label=label or f"K[Z/{n}]")


# --- Yetter-Drinfeld modules --------------------------------------------------------------


class YDModuleDef:
    """V with a left H-action ``action[(h, v)] = {w: c}`` and coaction ``coaction[v] = {(h, w): c}``."""

    def __init__(self, H: HopfAlgebraDef, dim: int, action: Mapping, coaction: Mapping,
                 names: Sequence[str] | None = None, label: str = "V", defer_checks: bool = False, bound: int | None = None):
        self.H = H
        self.dim = dim
        self.names = list(names) if names is not None else [f"v{i + 1}" for i in range(dim)]
        self.label = label
        self.bound = default_bound() if bound is None else bound

        def letter(k):
            if not 0 <= k < dim:
                raise ValidationError(f"V index {k} out of range")

        def hv(k):
            if not (isinstance(k, tuple) and len(k) == 2 and 0 <= k[0] < H.dim):
                raise ValidationError(f"coaction key {k!r} is not (h, v)")
            letter(k[1])

        self._act = _table(action, [(h, v) for h in range(H.dim) for v in range(dim)], letter, "action")
        self._coact = _table(coaction, list(range(dim)), hv, "coaction")
        self._aw: dict = {}
        self._cw: dict = {}
        self._sigma = None
        if not defer_checks:
            rep = check_yd_module(self)
            if not rep.passed:
                raise ValidationError(f"{label} is not a Yetter-Drinfeld module", rep)

    def act(self, h: int, v: int) -> dict:
        return self._act[(h, v)]

    def coact(self, v: int) -> dict:
        return self._coact[v]

    def act_word(self, h: int, word: Word) -> dict:
        """Diagonal action of a basis element of H on a basis word."""
        key = (h, word)
        r = self._aw.get(key)
        if r is None:
            if not word:
                e = self.H._eps[h]
                r = {} if c_iszero(e) else {(): e}
            else:
                r = {}
                for legs, c in self.H.delta_n(h, len(word)).items():
                    acc = {(): c}
                    for leg, v in zip(legs, word):
                        acc = lc_apply2(acc, self._act[(leg, v)], lambda a, b: {a + (b,): 1})
                        if not acc:
                            break
                    lc_axpy(r, acc, 1)
            self._aw[key] = r
        return r

    def act_raw(self, h: dict, x: dict) -> dict:
        return lc_apply2(h, x, self.act_word)

    def coact_word(self, word: Word) -> dict:
        """ρ(word) keyed by (h, word)."""
        r = self._cw.get(word)
        if r is None:
            unit = self.H.unit()
            cur = {(k, ()): c for k, c in unit.items()}
            for v in word:
                nxt: dict = {}
                for (h, w), c in cur.items():
                    for (g, v0), c2 in self._coact[v].items():
                        for k, c3 in self.H.mul_basis(h, g).items():
                            lc_axpy(nxt, {(k, w + (v0,)): c_mul(c2, c3)}, c)
                cur = nxt
            r = cur
            self._cw[word] = r
        return r

    def natural_braiding(self) -> BraidedSpace:
        return natural_braiding(self)

    def fmt_word(self, w: Word) -> str:
        return format_word(w, self.names)


def check_yd_module(yd: YDModuleDef) -> Report:
    H = yd.H
    dh, dv = H.dim, yd.dim
    fmtv = lambda k: yd.names[k] if isinstance(k, int) else str(k)

    def fkey(k):
        if isinstance(k, tuple) and len(k) == 2 and isinstance(k[0], int) and isinstance(k[1], int):
            return f"{H.names[k[0]]}⊗{yd.names[k[1]]}"
        if isinstance(k, tuple) and len(k) == 3:
            return f"{H.names[k[0]]}⊗{H.names[k[1]]}⊗{yd.names[k[2]]}"
        return fmtv(k)

    fv = lambda raw: format_terms(raw, fkey)
    fin = lambda x: H.names[x[1]] if isinstance(x, tuple) and x[0] == "h" else (yd.names[x[1]] if isinstance(x, tuple) else str(x))
    hs = [("h", h) for h in range(dh)]
    vs = [("v", v) for v in range(dv)]

    def act(hraw, vraw):
        return lc_apply2(hraw, vraw, yd.act)

    def rho(vraw):
        return lc_apply(vraw, yd.coact)

    def module_assoc(s):
        (_, h), (_, k), (_, v) = s
        return act(H.mul({h: 1}, {k: 1}), {v: 1})

    def module_assoc_r(s):
        (_, h), (_, k), (_, v) = s
        return act({h: 1}, yd.act(k, v))

    def coassoc_l(s):
        acc: dict = {}
        for (h, w), c in yd.coact(s[0][1]).items():
            for (a, b), c2 in H.coproduct(h).items():
                lc_axpy(acc, {(a, b, w): c2}, c)
        return acc

    def coassoc_r(s):
        acc: dict = {}
        for (h, w), c in yd.coact(s[0][1]).items():
            for (g, w2), c2 in yd.coact(w).items():
                lc_axpy(acc, {(h, g, w2): c2}, c)
        return acc

    def counit(s):
        acc: dict = {}
        for (h, w), c in yd.coact(s[0][1]).items():
            if not c_iszero(H._eps[h]):
                lc_axpy(acc, {w: H._eps[h]}, c)
        return acc

    def yd_l(s):
        (_, h), (_, v) = s
        acc: dict = {}
        for (h1, h2), c in H.coproduct(h).items():
            for (g, v0), c2 in yd.coact(v).items():
                left = H.mul({h1: 1}, {g: 1})
                right = yd.act(h2, v0)
                for a, ca in left.items():
                    for b, cb in right.items():
                        lc_axpy(acc, {(a, b): c_mul(ca, cb)}, c_mul(c, c2))
        return acc

    def yd_r(s):
        (_, h), (_, v) = s
        acc: dict = {}
        for (h1, h2), c in H.coproduct(h).items():
            for w, cw in yd.act(h1, v).items():
                for (g, w0), c2 in yd.coact(w).items():
                    for a, ca in H.mul({g: 1}, {h2: 1}).items():
                        lc_axpy(acc, {(a, w0): ca}, c_mul(c_mul(c, cw), c2))
        return acc

    parts = [
        check_identity("module", [(v,) for v in vs], lambda s: act(H.unit(), {s[0][1]: 1}), lambda s: {s[0][1]: 1}, fin, fv, None, "1·v = v"),
        check_identity("module", list(itertools.product(hs, hs, vs)), module_assoc, module_assoc_r, fin, fv, None, "(hk)·v = h·(k·v)"),
        check_identity("comodule", [(v,) for v in vs], coassoc_l, coassoc_r, fin, fv, None, "(Δ⊗id)ρ = (id⊗ρ)ρ"),
        check_identity("comodule", [(v,) for v in vs], counit, lambda s: {s[0][1]: 1}, fin, fv, None, "(ε⊗id)ρ = id"),
        check_identity("yd-compatibility", list(itertools.product(hs, vs)), yd_l, yd_r, fin, fv, None, "h₁v₋₁ ⊗ h₂·v₀ = (h₁·v)₋₁h₂ ⊗ (h₁·v)₀"),
    ]
    return combine(f"yd[{yd.label} over {H.label}]", parts)


def natural_braiding(yd: YDModuleDef, defer_checks: bool = False) -> BraidedSpace:
    """σ(v⊗w) = v₍₋₁₎·w ⊗ v₍₀₎."""
    if yd._sigma is not None:
        return yd._sigma
    sigma = {}
    for v in range(yd.dim):
        for w in range(yd.dim):
            acc: dict = {}
            for (h, v0), c in yd.coact(v).items():
                for u, c2 in yd.act(h, w).items():
                    lc_axpy(acc, {(u, v0): c2}, c)
            sigma[(v, w)] = {k: Scalar.from_raw(c) for k, c in acc.items()}
    try:
        sp = BraidedSpace(yd.dim, sigma, names=yd.names, label=f"σ[{yd.label}]", defer_checks=defer_checks)
    except ValidationError as exc:
        raise InternalInconsistency(f"natural braiding of {yd.label} is not a braiding: {exc}") from exc
    yd._sigma = sp
    return sp


def check_yd_morphism(yd: YDModuleDef, f: Callable[[Word], dict], samples: Sequence[Word], name: str = "yd-morphism") -> Report:
    """f(h·x) = h·f(x) and ρ(f(x)) = (id⊗f)ρ(x) for basis words x and basis h."""
    H = yd.H
    fmtw = yd.fmt_word
    fkey = lambda k: f"{H.names[k[0]]} ⊗ {fmtw(k[1])}" if isinstance(k, tuple) and len(k) == 2 and isinstance(k[0], int) and isinstance(k[1], tuple) else fmtw(k)
    fv = lambda raw: format_terms(raw, fkey)
    samples = list(samples)
    hs = list(range(H.dim))

    def fin(x):
        return H.names[x] if isinstance(x, int) else fmtw(x)

    lin = check_identity(
        name, [(h, x) for h in hs for x in samples],
        lambda s: lc_apply(yd.act_word(s[0], s[1]), f),
        lambda s: lc_apply(f(s[1]), lambda w: yd.act_word(s[0], w)),
        fin, fv, None, "f(h·x) = h·f(x)",
    )
    colin = check_identity(
        name, [(x,) for x in samples],
        lambda s: lc_apply(f(s[0]), yd.coact_word),
        lambda s: lc_apply(yd.coact_word(s[0]), lambda k: {(k[0], w): c for w, c in f(k[1]).items()}),
        fin, fv, None, "ρ∘f = (id⊗f)∘ρ",
    )
    return combine(name, [lin, colin])


def M_as_map(qmb: QMBDef, p: int, q: int) -> Callable[[Word], dict]:
    """M_pq viewed as a linear map on words of length p+q."""
    return lambda w: qmb.M(w[:p], w[p:])


def check_yd_algebra(yd: YDModuleDef, qmb: QMBDef, degree_cap: int = 4) -> Report:
    """All M_pq (p+q ≤ cap) are YD morphisms, and ∗ is H-linear and H-colinear."""
    H = yd.H
    cap = min(degree_cap, default_bound())
    parts = []
    for n in range(2, cap + 1):
        for p in range(1, n):
            ws = list(itertools.product(range(yd.dim), repeat=n))
            parts.append(check_yd_morphism(yd, M_as_map(qmb, p, n - p), ws, name=f"M{p}{n - p}-morphism"))
    pairs = [(u, v) for n in range(cap + 1) for i in range(n + 1) for u in itertools.product(range(yd.dim), repeat=i) for v in itertools.product(range(yd.dim), repeat=n - i)]
    fmtw = yd.fmt_word
    fkey = lambda k: f"{H.names[k[0]]} ⊗ {fmtw(k[1])}" if isinstance(k, tuple) and len(k) == 2 and isinstance(k[0], int) and isinstance(k[1], tuple) else fmtw(k)
    fv = lambda raw: format_terms(raw, fkey)

    def h_lhs(s):
        h, u, v = s
        return lc_apply(qmb.star(u, v), lambda w: yd.act_word(h, w))

    def h_rhs(s):
        h, u, v = s
        acc: dict = {}
        for (h1, h2), c in H.coproduct(h).items():
            lc_axpy(acc, lc_apply2(yd.act_word(h1, u), yd.act_word(h2, v), qmb.star), c)
        return acc

    def c_lhs(s):
        u, v = s
        return lc_apply(qmb.star(u, v), yd.coact_word)

    def c_rhs(s):
        u, v = s
        acc: dict = {}
        for (g, u0), c in yd.coact_word(u).items():
            for (g2, v0), c2 in yd.coact_word(v).items():
                gg = H.mul_basis(g, g2)
                prod = qmb.star(u0, v0)
                for k, ck in gg.items():
                    lc_axpy(acc, {(k, w): cw for w, cw in prod.items()}, c_mul(c_mul(c, c2), ck))
        return acc

    fin = lambda x: H.names[x] if isinstance(x, int) else fmtw(x)
    parts.append(check_identity("star-linear", [(h, u, v) for h in range(H.dim) for u, v in pairs], h_lhs, h_rhs, fin, fv, {"degree": cap}, "h·(x∗y) = (h₁·x)∗(h₂·y)"))
    parts.append(check_identity("star-colinear", pairs, c_lhs, c_rhs, fin, fv, {"degree": cap}, "ρ(x∗y) = x₋₁y₋₁ ⊗ x₀∗y₀"))
    return combine(f"yd-algebra[{qmb.label} over {H.label}]", parts, {"degree": cap})


# --- bosonization -------------------------------------------------------------------------


class SmashElement(LinComb):
    """Element of T(V)#H; keys are (word, h)."""

    __slots__ = ("yd",)

    def __init__(self, yd: YDModuleDef, terms: dict | None = None):
        super().__init__(terms)
        self.yd = yd
        for k in self._t:
            if not (isinstance(k, tuple) and len(k) == 2 and isinstance(k[0], tuple) and 0 <= k[1] < yd.H.dim):
                raise ValidationError(f"smash keys are (word, h), got {k!r}")
            if len(k[0]) > yd.bound:
                raise DegreeOverflow(f"word of length {len(k[0])} exceeds the bound {yd.bound}")

    @classmethod
    def from_raw(cls, yd: YDModuleDef, raw: dict) -> "SmashElement":
        out = object.__new__(cls)
        out._t = raw
        out.yd = yd
        return out

    def _new(self, raw):
        return SmashElement.from_raw(self.yd, raw)

    def _meta(self):
        return (id(self.yd),)

    def __add__(self, other):
        self._check(other)
        return self._new(lc_axpy(dict(self._t), other._t, 1))

    def __sub__(self, other):
        self._check(other)
        return self._new(lc_sub(self._t, other._t))

    def format(self, pretty: bool = True) -> str:
        return format_terms(self._t, lambda k: format_smash_key(self.yd, k), pretty)

    def __repr__(self):
        return f"SmashElement({self.format(pretty=False)})"


def format_smash_key(yd: YDModuleDef, key) -> str:
    return f"{format_word(key[0], yd.names)}#{yd.H.names[key[1]]}"


class Bosonization:
    """T(V)#H for a YD module V and a QMB structure on its natural braiding."""

    def __init__(self, yd: YDModuleDef, qmb: QMBDef | None = None):
        self.yd = yd
        self.H = yd.H
        self.sp = natural_braiding(yd)
        self.qmb = qmb if qmb is not None else QMBDef.trivial(self.sp)
        self.label = f"T({yd.label})#{yd.H.label}"
        self._p: dict = {}
        self._s: dict = {}
        self._rho3: dict = {}

    def product(self, u, v) -> dict:
        """(x#h)(y#h′) = Σ x∗(h₁·y) # h₂h′."""
        key = (u, v)
        r = self._p.get(key)
        if r is not None:
            return r
        (x, h), (y, h2) = u, v
        if len(x) + len(y) > self.yd.bound:
            raise DegreeOverflow(f"smash product of degrees {len(x)} and {len(y)} exceeds the bound", (len(x), len(y)))
        acc: dict = {}
        for (a, b), c in self.H.coproduct(h).items():
            hy = self.yd.act_word(a, y)
            if not hy:
                continue
            hh = self.H.mul_basis(b, h2)
            for w, cw in hy.items():
                prod = self.qmb.star(x, w)
                for t, ct in prod.items():
                    for k, ck in hh.items():
                        lc_axpy(acc, {(t, k): c_mul(ct, ck)}, c_mul(c, cw))
        self._p[key] = acc
        return acc

    def rho3(self, x: Word) -> dict:
        """(Δ^{(2)}⊗id)ρ(x) keyed by (x₋₃, x₋₂, x₋₁, x₀)."""
        r = self._rho3.get(x)
        if r is None:
            r = {}
            for (g, x0), c in self.yd.coact_word(x).items():
                for legs, c2 in self.H.delta_n(g, 3).items():
                    lc_axpy(r, {legs + (x0,): c2}, c)
            self._rho3[x] = r
        return r

    def sigma(self, u, v) -> dict:
        """Σ((x#h)⊗(y#h′)) = Σ ((x₋₃h₁)·y # x₋₂h₂h′S(x₋₁h₃)) ⊗ (x₀#h₄)."""
        key = (u, v)
        r = self._s.get(key)
        if r is not None:
            return r
        (x, h), (y, hp) = u, v
        H = self.H
        acc: dict = {}
        for (g3, g2, g1, x0), c in self.rho3(x).items():
            for (h1, h2, h3, h4), ch in H.delta_n(h, 4).items():
                a = H.mul_basis(g3, h1)
                b = H.mul(H.mul(H.mul_basis(g2, h2), {hp: 1}), H.antipode(H.mul_basis(g1, h3)))
                if not a or not b:
                    continue
                ay = self.yd.act_raw(a, {y: 1})
                for w, cw in ay.items():
                    for k, ck in b.items():
                        lc_axpy(acc, {((w, k), (x0, h4)): c_mul(cw, ck)}, c_mul(c, ch))
        self._s[key] = acc
        return acc

    def unit_key(self):
        units = self.H.unit()
        if len(units) != 1 or next(iter(units.values())) != 1:
            return None
        return ((), next(iter(units)))

    def fmt(self, key) -> str:
        return format_smash_key(self.yd, key)

    def carrier(self) -> Carrier:
        return Carrier(self.label, mul=self.product, braid=self.sigma, fmt=self.fmt, unit=self.unit_key())

    def basis(self, max_len: int) -> list:
        return [(w, h) for w in words(self.yd.dim, max_len) for h in range(self.H.dim)]

    def tuples(self, arity: int, cap: int) -> list:
        by_len: dict = {}
        for k in self.basis(cap):
            by_len.setdefault(len(k[0]), []).append(k)
        out = []
        for total in range(cap + 1):
            for combo in itertools.product(range(total + 1), repeat=arity):
                if sum(combo) == total:
                    out.extend(itertools.product(*(by_len[n] for n in combo)))
        return out

    def element(self, terms: dict) -> SmashElement:
        return SmashElement(self.yd, terms)

    def multiply(self, u: SmashElement, v: SmashElement) -> SmashElement:
        return SmashElement.from_raw(self.yd, lc_apply2(u.raw, v.raw, self.product))


def smash_product(yd: YDModuleDef, qmb: QMBDef | None, u: SmashElement, v: SmashElement) -> SmashElement:
    return Bosonization(yd, qmb).multiply(u, v)


def sigma_bosonization(B: Bosonization, u: SmashElement, v: SmashElement) -> dict:
    """Σ(u⊗v) as a raw combination over pairs of smash keys."""
    return lc_apply2(u.raw, v.raw, B.sigma)


def operator_P0(weight=-1) -> RBOperatorDef:
    """Projection of T(V)#H onto H = 𝕂#H (empty-word components)."""
    return RBOperatorDef("P0", weight, lambda k: {k: 1} if not k[0] else {}, label="P0", projection=True)


def projection_P0(u: SmashElement) -> SmashElement:
    return u._new(lc_filter(u.raw, lambda k: not k[0]))


def check_sigma_blocks(B: Bosonization, cap: int = 3) -> Report:
    """Σ maps (V^{⊗p}#H)⊗(V^{⊗q}#H) into (V^{⊗q}#H)⊗(V^{⊗p}#H)."""
    pairs = B.tuples(2, cap)
    fv = lambda raw: format_terms(raw, lambda k: f"{B.fmt(k[0])} ⊗ {B.fmt(k[1])}")
    return check_identity(
        "sigma-blocks", pairs,
        lambda s: {k: c for k, c in B.sigma(*s).items() if not (len(k[0][0]) == len(s[1][0]) and len(k[1][0]) == len(s[0][0]))},
        lambda s: {}, B.fmt, fv, {"degree": cap}, "Σ preserves the block degrees (swapped)",
    )


def check_bosonization_rb(B: Bosonization, cap: int = 3, weight=-1, mode: str = "strong") -> Report:
    """(T(V)#H, P₀, Σ): braided algebra, RB identity, weak and strong braided-RB, Σ-YBE."""
    car = B.carrier()
    caps = {"degree": cap}
    P0 = operator_P0(weight)
    pairs = B.tuples(2, cap)
    triples = B.tuples(3, cap)
    parts = [
        check_ybe(car, triples, caps, name="sigma-ybe"),
        check_sigma_blocks(B, cap),
        check_braided_rb(car, P0, pairs, triples, mode, caps=caps, label="braided-rb"),
    ]
    if car.unit is not None:
        parts.insert(0, check_unit_laws(car, car.unit, B.basis(cap), caps, name="unit-laws"))
    try:
        split_projection_rb(
            B.product, Split(lambda k: not k[0], lambda k: bool(k[0]), label="H ⊕ T⁺(V)#H"),
            [k for k in B.basis(cap) if not k[0]], [k for k in B.basis(cap - 1) if k[0]], B.fmt,
        )
        parts.append(Report("split", "pass", checked=1, caps=caps, notes=["H and T⁺(V)#H are closed under the product"]))
    except Exception as exc:  # NotASubalgebra
        w = getattr(exc, "witness", None)
        parts.append(Report("split", "fail" if w is not None else "error", witness=w, caps=caps, notes=[str(exc)]))
    return combine(f"bosonization[{B.label}, P0, λ={Scalar(weight)}]", parts, caps)
