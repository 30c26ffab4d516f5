"""Quantum multi-brace algebras (V, M, σ), the coproduct Δ_β and the global product ∗."""

from __future__ import annotations

import itertools
from typing import Mapping

from .braided_algebra import BraidedAlgebraDef
from .braided_space import BraidedSpace
from .checks import Carrier, check_associativity, check_compatibility, check_identity
from .errors import DegreeOverflow, ValidationError
from .kernel import c_iszero, c_mul, lc_apply, lc_apply2, lc_axpy
from .quasi_shuffle import get_engine
from .report import Report, combine
from .scalar import Scalar, to_raw
from .tensor import PairElement, TensorElement, Word, default_bound, format_terms, format_word, words


class QMBDef:
    """A braided space with operations M_pq: V^{⊗p} ⊗ V^{⊗q} → V.

    ``M[(p, q)][(u, v)] = {k: c}`` for words u, v of lengths p, q (0-based
    letters).  M₁₀ = M₀₁ = id and the other M_{n0}, M_{0n} vanish; those are
    built in and may not be supplied.
    """

    def __init__(self, space: BraidedSpace, M: Mapping | None = None, label: str = "", defer_checks: bool = False, check_cap: int = 3):
        self.space = space
        self.dim = space.dim
        self.names = space.names
        self.label = label or f"QMB+{space.label}"
        d = self.dim
        self._M: dict = {}
        for (p, q), table in dict(M or {}).items():
            if p == 0 or q == 0:
                raise ValidationError(f"M_{p}{q} is fixed by the axioms and cannot be given")
            for (u, v), img in dict(table).items():
                u, v = tuple(u), tuple(v)
                if len(u) != p or len(v) != q:
                    raise ValidationError(f"M_{p}{q} entry on words of lengths {len(u)}, {len(v)}")
                if any(not 0 <= x < d for x in u + v):
                    raise ValidationError(f"letter out of range in M_{p}{q}")
                out = {}
                for k, c in dict(img).items():
                    if not 0 <= k < d:
                        raise ValidationError(f"M_{p}{q} output index {k} out of range")
                    r = to_raw(c)
                    if not c_iszero(r):
                        out[(k,)] = r
                if out:
                    self._M[(u, v)] = out
        self.max_order = max((len(u) + len(v) for u, v in self._M), default=1)
        self.deferred = defer_checks
        self._G: dict = {}
        if not defer_checks:
            rep = check_qmb_axioms(self, check_cap)
            if not rep.passed:
                raise ValidationError(f"{self.label} is not a quantum multi-brace algebra", rep)

    @classmethod
    def from_algebra(cls, alg: BraidedAlgebraDef, label: str = "", defer_checks: bool = False) -> "QMBDef":
        """M₁₁ = m, every other M_pq with p, q ≥ 1 zero."""
        table = {((i,), (j,)): {k: Scalar.from_raw(c) for k, c in alg.mul_raw(i, j).items()} for i in range(alg.dim) for j in range(alg.dim)}
        return cls(alg.space, {(1, 1): table}, label or f"M11[{alg.label}]", defer_checks)

    @classmethod
    def trivial(cls, space: BraidedSpace) -> "QMBDef":
        return cls(space, {}, f"trivial-QMB+{space.label}", defer_checks=True)

    def M(self, u: Word, v: Word) -> dict:
        """M_{|u||v|}(u ⊗ v) as a combination of one-letter words."""
        if not u:
            return {v: 1} if len(v) == 1 else {}
        if not v:
            return {u: 1} if len(u) == 1 else {}
        return self._M.get((u, v), {})

    def table(self) -> dict:
        out: dict = {}
        for (u, v), img in self._M.items():
            out.setdefault((len(u), len(v)), {})[(u, v)] = {k[0]: Scalar.from_raw(c) for k, c in img.items()}
        return out

    # -- Δ_β and ∗ --------------------------------------------------------------------

    def delta(self, x: Word, y: Word) -> dict:
        return delta_beta_words(self.space, x, y)

    def G(self, x: Word, y: Word) -> dict:
        """Σ_{n≥1} M^{⊗n} Δ_β^{(n-1)}(x ⊗ y), with left-nested iterated coproducts."""
        key = (x, y)
        r = self._G.get(key)
        if r is not None:
            return r
        acc = dict(self.M(x, y))
        for (u, v, u2, v2), c in self.delta(x, y).items():
            if not (u2 or v2) or not (u or v):
                continue
            last = self.M(u2, v2)
            if not last:
                continue
            head = self.G(u, v)
            if not head:
                continue
            for w, cw in head.items():
                for (k,), ck in last.items():
                    lc_axpy(acc, {w + (k,): c_mul(cw, ck)}, c)
        self._G[key] = acc
        return acc

    def star(self, x: Word, y: Word) -> dict:
        if not x and not y:
            return {(): 1}
        return self.G(x, y)

    def carrier(self) -> Carrier:
        return Carrier(f"T({self.label})", mul=self.star, braid=self.space.beta_pair, fmt=lambda w: format_word(w, self.names))


def delta_beta_words(sp: BraidedSpace, x: Word, y: Word) -> dict:
    """Δ_β(x ⊗̲ y) = Σ x′ ⊗̲ β(x″ ⊗̲ y′) ⊗̲ y″, keyed by 4-tuples of words."""
    acc: dict = {}
    for i in range(len(x) + 1):
        x1, x2 = x[:i], x[i:]
        for j in range(len(y) + 1):
            y1, y2 = y[:j], y[j:]
            for (b1, b2), c in sp.beta_pair(x2, y1).items():
                lc_axpy(acc, {(x1, b1, b2, y2): c}, 1)
    return acc


def delta_beta(sp: BraidedSpace, u: PairElement) -> dict:
    """Δ_β extended linearly over a PairElement; keys are (x′, b₁, b₂, y″)."""
    return lc_apply(u.raw, lambda k: delta_beta_words(sp, k[0], k[1]))


def delta_beta_iterated(sp: BraidedSpace, x: Word, y: Word, n: int, side: str = "left") -> dict:
    """Δ_β^{(n)}; keys are 2(n+1)-tuples of words.  ``side`` picks the nesting."""
    cur = {(x, y): 1}
    for _ in range(n):
        pos = 0 if side == "left" else None
        acc: dict = {}
        for key, c in cur.items():
            p = pos if pos is not None else len(key) - 2
            for k4, c4 in delta_beta_words(sp, key[p], key[p + 1]).items():
                lc_axpy(acc, {key[:p] + k4 + key[p + 2:]: c4}, c)
        cur = acc
    return cur


def qmb_global_product(qmb: QMBDef, x: TensorElement, y: TensorElement) -> TensorElement:
    bound = min(x.bound, y.bound)
    dx, dy = x.top_degree(), y.top_degree()
    if x and y and dx + dy > bound:
        raise DegreeOverflow(f"∗ of degrees {dx} and {dy} exceeds the bound {bound}", (dx, dy))
    return TensorElement.from_raw(qmb.dim, lc_apply2(x.raw, y.raw, qmb.star), bound)


# --- axioms ----------------------------------------------------------------------------


def _cap(cap):
    return min(4 if cap is None else cap, default_bound())


def _positive_splits(dim: int, cap: int, parts: int):
    """Tuples of ``parts`` nonempty words with total length ≤ cap, by total length."""
    for n in range(parts, cap + 1):
        for sizes in itertools.product(range(1, n + 1), repeat=parts):
            if sum(sizes) != n:
                continue
            for ws in itertools.product(*(list(itertools.product(range(dim), repeat=s)) for s in sizes)):
                yield ws


def check_qmb_axioms(qmb: QMBDef, degree_cap: int | None = None) -> Report:
    """(i) structurally; (ii) both β-compatibilities and (iii) the brace relation for i+j+k ≤ cap."""
    cap = _cap(degree_cap)
    sp = qmb.space
    fmtw = lambda w: format_word(w, qmb.names)
    fv = lambda raw: format_terms(raw, fmtw)
    caps = {"degree": cap}
    triples = list(_positive_splits(qmb.dim, cap, 3))

    ax1 = Report("axiom-i", "pass", checked=1, caps=caps, notes=["M00=0, M10=M01=id, Mn0=M0n=0 (n≥2) hold by construction"])

    def Mw(u, v):
        return qmb.M(u, v)

    # β_{1k}(M_ij ⊗ id) = (id ⊗ M_ij)β_{i+j,k} on x⊗y⊗z
    def l1(t):
        x, y, z = t
        acc: dict = {}
        for (k,), c in Mw(x, y).items():
            lc_axpy(acc, sp.beta_word(1, (k,) + z), c)
        return acc

    def r1(t):
        x, y, z = t
        acc: dict = {}
        n = len(x) + len(y)
        for w, c in sp.beta_word(n, x + y + z).items():
            kk = len(z)
            for (k,), cm in Mw(w[kk:kk + len(x)], w[kk + len(x):]).items():
                lc_axpy(acc, {w[:kk] + (k,): cm}, c)
        return acc

    # β_{i1}(id ⊗ M_jk) = (M_jk ⊗ id)β_{i,j+k} on x⊗y⊗z
    def l2(t):
        x, y, z = t
        acc: dict = {}
        for (k,), c in Mw(y, z).items():
            lc_axpy(acc, sp.beta_word(len(x), x + (k,)), c)
        return acc

    def r2(t):
        x, y, z = t
        acc: dict = {}
        for w, c in sp.beta_word(len(x), x + y + z).items():
            m = len(y) + len(z)
            for (k,), cm in Mw(w[:len(y)], w[len(y):m]).items():
                lc_axpy(acc, {(k,) + w[m:]: cm}, c)
        return acc

    fin = lambda t: fmtw(t) if isinstance(t, tuple) else str(t)
    ax2a = check_identity("axiom-ii", triples, l1, r1, fin, fv, caps, "β_{1k}(M_ij⊗id) = (id⊗M_ij)β_{i+j,k}")
    ax2b = check_identity("axiom-ii", triples, l2, r2, fin, fv, caps, "β_{i1}(id⊗M_jk) = (M_jk⊗id)β_{i,j+k}")

    # (iii): Σ_r M_rk((x∗y)_r ⊗ z) = Σ_l M_il(x ⊗ (y∗z)_l)
    def l3(t):
        x, y, z = t
        acc: dict = {}
        for w, c in qmb.G(x, y).items():
            lc_axpy(acc, qmb.M(w, z), c)
        return acc

    def r3(t):
        x, y, z = t
        acc: dict = {}
        for w, c in qmb.G(y, z).items():
            lc_axpy(acc, qmb.M(x, w), c)
        return acc

    ax3 = check_identity("axiom-iii", triples, l3, r3, fin, fv, caps, "Σ_r M_rk(M^{⊗r}Δ^{(r-1)}⊗id) = Σ_l M_il(id⊗M^{⊗l}Δ^{(l-1)})")
    if ax3.witness is not None:
        ax3.details["triple"] = [len(w) for w in _first_fail(triples, l3, r3)]
    rep = combine(f"qmb[{qmb.label}]", [ax1, ax2a, ax2b, ax3], caps, notes=[f"axioms verified to degree cap {cap}"])
    if ax3.witness is not None and rep.witness is ax3.witness:
        rep.details["triple"] = ax3.details["triple"]
    return rep


def _first_fail(samples, lhs, rhs):
    for s in samples:
        if lhs(s) != rhs(s):
            return s
    return ()


def check_star_braided_algebra(qmb: QMBDef, degree_cap: int | None = None) -> Report:
    """(T(V), ∗, β) is associative and braided-compatible on basis words, total degree ≤ cap."""
    cap = _cap(degree_cap)
    car = qmb.carrier()
    triples = [t for n in range(cap + 1) for t in _word_triples(qmb.dim, n)]
    caps = {"degree": cap}
    parts = [
        check_associativity(car, triples, caps, name="associativity"),
        check_compatibility(car, triples, caps, name="braided-compatibility"),
    ]
    return combine(f"braided-algebra[(T(V), ∗, β) for {qmb.label}]", parts, caps)


def _word_triples(dim, n):
    for sizes in itertools.product(range(n + 1), repeat=3):
        if sum(sizes) != n:
            continue
        for ws in itertools.product(*(list(itertools.product(range(dim), repeat=s)) for s in sizes)):
            yield ws


def check_star_vs_qsh(qmb: QMBDef, alg: BraidedAlgebraDef, degree_cap: int | None = None) -> Report:
    """∗ for M₁₁ = m agrees with ⋈_σ on basis word pairs of total degree ≤ cap."""
    cap = _cap(degree_cap)
    qsh = get_engine(alg, 1)
    pairs = [(u, v) for n in range(cap + 1) for i in range(n + 1) for u in itertools.product(range(qmb.dim), repeat=i) for v in itertools.product(range(qmb.dim), repeat=n - i)]
    fmtw = lambda w: format_word(w, qmb.names)
    return check_identity(
        f"star-vs-qsh[{qmb.label}]", pairs, lambda s: qmb.star(*s), lambda s: qsh.words(*s) if (s[0] or s[1]) else {(): 1},
        fmtw, lambda raw: format_terms(raw, fmtw), {"degree": cap}, "x∗y = x⋈y",
    )


def check_top_component(qmb: QMBDef, degree_cap: int | None = None) -> Report:
    """The degree-(i+j) part of x∗y is the quantum shuffle, whatever the M_pq."""
    cap = _cap(degree_cap)
    shuffle = QMBDef.trivial(qmb.space)
    pairs = [(u, v) for n in range(1, cap + 1) for i in range(n + 1) for u in itertools.product(range(qmb.dim), repeat=i) for v in itertools.product(range(qmb.dim), repeat=n - i)]
    fmtw = lambda w: format_word(w, qmb.names)
    return check_identity(
        f"top-component[{qmb.label}]", pairs,
        lambda s: {w: c for w, c in qmb.star(*s).items() if len(w) == len(s[0]) + len(s[1])},
        lambda s: shuffle.star(*s), fmtw, lambda raw: format_terms(raw, fmtw), {"degree": cap}, "(x∗y)_{i+j} = quantum shuffle",
    )
