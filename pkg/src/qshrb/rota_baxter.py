"""Rota-Baxter operators: the algebra R_{σ,λ}(A) with P, the projections P₁ and P₂,
split projections, the ⋆_P product and braided Rota-Baxter checks.

R_{σ,λ}(A) = A ⊗̲ T(A) has basis keys ``(head, tail)``: a letter of A and a
word.  Reading ``head`` followed by ``tail`` as one word identifies R with
T⁺(A), which is how the braiding β is carried over.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .braided_algebra import BraidedAlgebraDef
from .checks import (
    Carrier,
    bilinear,
    check_associativity,
    check_compatibility,
    check_identity,
    check_idempotent,
    check_rb_identity,
    check_strong_intertwining,
    check_weak_commutation,
    star_basis,
)
from .errors import DegreeOverflow, DimensionMismatch, NoUnitDesignated, NotASubalgebra
from .kernel import c_mul, lc_add, lc_apply, lc_axpy, lc_filter, lc_sub
from .linalg import laurent_to_ratfunc, rank
from .quasi_shuffle import QuasiShuffle, get_engine
from .report import Report, combine
from .scalar import Scalar, to_raw
from .tensor import LinComb, default_bound, format_terms, format_word, words

Key = tuple  # (head letter, tail word)


class RBElement(LinComb):
    """Element of A ⊗̲ T(A); keys are (head, tail)."""

    __slots__ = ("dim",)

    def __init__(self, dim: int, terms: dict | None = None):
        super().__init__(terms)
        self.dim = dim
        for k in self._t:
            if not (isinstance(k, tuple) and len(k) == 2 and isinstance(k[1], tuple)):
                raise TypeError(f"RB keys are (head, tail) pairs, got {k!r}")
            if not 0 <= k[0] < dim or any(not 0 <= c < dim for c in k[1]):
                raise DimensionMismatch(f"letter out of range in {k!r}")

    @classmethod
    def from_raw(cls, dim: int, raw: dict) -> "RBElement":
        out = object.__new__(cls)
        out._t = raw
        out.dim = dim
        return out

    @classmethod
    def basis(cls, dim: int, head: int, tail=()) -> "RBElement":
        return cls(dim, {(head, tuple(tail)): 1})

    def _new(self, raw):
        return RBElement.from_raw(self.dim, raw)

    def _meta(self):
        return (self.dim,)

    def _check(self, other):
        super()._check(other)
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        return self._new(lc_add(self._t, other._t))

    def __sub__(self, other):
        self._check(other)
        return self._new(lc_sub(self._t, other._t))

    def format(self, names: Sequence[str] | None = None, pretty: bool = True) -> str:
        return format_terms(self._t, lambda k: format_rb_key(k, names), pretty)

    def __repr__(self):
        return f"RBElement({self.format(pretty=False)})"


def format_rb_key(key: Key, names: Sequence[str] | None = None) -> str:
    head = names[key[0]] if names is not None else f"e{key[0] + 1}"
    return f"{head} ⊗̲ {format_word(key[1], names)}"


class RBAlgebra:
    """R_{σ,λ}(A) with product ◊_{σ,λ} and the carried-over braiding β.

    (a⊗̲x) ◊ (b⊗̲y) = Σ m(a⊗b′) ⊗̲ (x′ ⋈_{σ,λ} y) where β_{|x|,1}(x⊗b) = Σ b′⊗x′.
    The head product is m itself; only the tail quasi-shuffle is weighted.
    """

    def __init__(self, alg: BraidedAlgebraDef, weight=1, bound: int | None = None, drop_middle: bool = False):
        self.alg = alg
        self.sp = alg.space
        self.dim = alg.dim
        self.weight = Scalar(weight)
        self.bound = default_bound() if bound is None else bound
        self.unit = alg.unit
        self.names = alg.names
        # drop_middle: negative control with a corrupted ⋈ on the tails
        self._qsh = QuasiShuffle(alg, weight, drop_middle=True) if drop_middle else get_engine(alg, weight)
        self._prod: dict = {}
        self._braid: dict = {}
        self.label = f"R[{alg.label}, λ={self.weight}]"

    # -- basis-level maps ---------------------------------------------------------

    def diamond(self, u: Key, v: Key) -> dict:
        key = (u, v)
        r = self._prod.get(key)
        if r is not None:
            return r
        (a, x), (b, y) = u, v
        if len(x) + len(y) > self.bound:
            raise DegreeOverflow(f"◊ of tails of length {len(x)} and {len(y)} exceeds the bound {self.bound}", (len(x), len(y)))
        acc: dict = {}
        for w, c in self.sp.beta_word(len(x), x + (b,)).items():
            b2, x2 = w[0], w[1:]
            heads = self.alg.mul_raw(a, b2)
            if not heads:
                continue
            tails = self._qsh.words(x2, y)
            for k, mc in heads.items():
                cm = c_mul(mc, c)
                lc_axpy(acc, {(k, t): v for t, v in tails.items()}, cm)
        self._prod[key] = acc
        return acc

    def braid(self, u: Key, v: Key) -> dict:
        """β_{|u|,|v|} on the words head·tail, split back into (head, tail) pairs."""
        key = (u, v)
        r = self._braid.get(key)
        if r is not None:
            return r
        wu = (u[0],) + u[1]
        wv = (v[0],) + v[1]
        j = len(wv)
        r = {((w[0], w[1:j]), (w[j], w[j + 1:])): c for w, c in self.sp.beta_word(len(wu), wu + wv).items()}
        self._braid[key] = r
        return r

    def fmt(self, key: Key) -> str:
        return format_rb_key(key, self.names)

    def carrier(self) -> Carrier:
        unit = (self.unit, ()) if self.unit is not None else None
        return Carrier(self.label, mul=self.diamond, braid=self.braid, fmt=self.fmt, unit=unit)

    def basis(self, max_tail: int, min_tail: int = 0) -> list[Key]:
        return [(h, t) for t in words(self.dim, max_tail, min_tail) for h in range(self.dim)]

    @staticmethod
    def tail_degree(key: Key) -> int:
        return len(key[1])

    def tuples(self, arity: int, tail_cap: int) -> list[tuple]:
        """Basis tuples whose tail lengths add up to at most ``tail_cap``, by total."""
        basis = self.basis(tail_cap)
        by_len: dict = {}
        for k in basis:
            by_len.setdefault(len(k[1]), []).append(k)
        out = []
        for total in range(tail_cap + 1):
            for combo in itertools.product(range(total + 1), repeat=arity):
                if sum(combo) != total:
                    continue
                out.extend(itertools.product(*(by_len[n] for n in combo)))
        return out

    # -- element-level API ---------------------------------------------------------

    def element(self, terms: dict) -> RBElement:
        return RBElement(self.dim, terms)

    def product(self, u: RBElement, v: RBElement) -> RBElement:
        return RBElement.from_raw(self.dim, bilinear(self.diamond)(u.raw, v.raw))

    def unit_element(self) -> RBElement:
        if self.unit is None:
            raise NoUnitDesignated(f"{self.alg.label} has no unit")
        return RBElement.basis(self.dim, self.unit)


def diamond_product(alg: BraidedAlgebraDef, weight, u: RBElement, v: RBElement) -> RBElement:
    return RBAlgebra(alg, weight).product(u, v)


# --- operators ------------------------------------------------------------------------

OPERATOR_TAGS = ("P", "P1", "P2", "P0", "split", "custom")


@dataclass
class RBOperatorDef:
    """A linear operator given on basis keys, with its intended weight."""

    tag: str
    weight: Scalar
    basis_map: Callable[[object], dict]
    label: str = ""
    projection: bool = False

    def __post_init__(self):
        if self.tag not in OPERATOR_TAGS:
            raise ValueError(f"unknown operator tag {self.tag!r}")
        self.weight = Scalar(self.weight)
        self.label = self.label or self.tag
        self._cache: dict = {}

    def __call__(self, key) -> dict:
        r = self._cache.get(key)
        if r is None:
            r = self.basis_map(key)
            self._cache[key] = r
        return r

    def apply_raw(self, x: dict) -> dict:
        return lc_apply(x, self)


def operator_P(R: RBAlgebra) -> RBOperatorDef:
    """P(a⊗̲u) = 1_A⊗̲(a⊗u); on a scalar tail ν this is 1_A⊗̲ν·a."""
    if R.unit is None:
        raise NoUnitDesignated(f"P needs a unital algebra; unitalize {R.alg.label} first")
    unit, bound = R.unit, R.bound

    def P(key):
        a, w = key
        if len(w) + 1 > bound:
            raise DegreeOverflow(f"P raises tail length {len(w)} past the bound {bound}", (len(w), 1))
        return {(unit, (a,) + w): 1}

    return RBOperatorDef("P", R.weight, P, label="P")


def operator_P1(R: RBAlgebra | None = None) -> RBOperatorDef:
    """Projection onto A ⊗̲ 𝕂."""
    return RBOperatorDef("P1", -1, lambda k: {k: 1} if not k[1] else {}, label="P1", projection=True)


def operator_P2(R: RBAlgebra | None = None) -> RBOperatorDef:
    """Projection onto ⊕_{i≥1} A ⊗̲ A^{⊗i}."""
    return RBOperatorDef("P2", -1, lambda k: {k: 1} if k[1] else {}, label="P2", projection=True)


def identity_operator(weight=-1) -> RBOperatorDef:
    return RBOperatorDef("custom", weight, lambda k: {k: 1}, label="id")


def zero_operator(weight=0) -> RBOperatorDef:
    return RBOperatorDef("custom", weight, lambda k: {}, label="0")


def rb_operator_apply(opdef: RBOperatorDef, u: RBElement) -> RBElement:
    return u._new(opdef.apply_raw(u.raw))


# --- split projections ----------------------------------------------------------------


def _in_span(vectors: list[dict], target: dict) -> bool:
    keys = sorted({k for v in vectors for k in v} | set(target), key=repr)
    cols = [[laurent_to_ratfunc(Scalar.from_raw(v.get(k, 0))) for k in keys] for v in vectors]
    tgt = [laurent_to_ratfunc(Scalar.from_raw(target.get(k, 0))) for k in keys]
    if not any(tgt):
        return True
    n = len(keys)
    return rank(cols, n) == rank(cols + [tgt], n)


def _coordinates(vectors: list[dict], target: dict):
    """Coefficients c with Σ c_i v_i = target, or None."""
    from .linalg import RatFunc, row_echelon

    keys = sorted({k for v in vectors for k in v} | set(target), key=repr)
    m = len(vectors)
    rows = [[laurent_to_ratfunc(Scalar.from_raw(v.get(k, 0))) for v in vectors] + [laurent_to_ratfunc(Scalar.from_raw(target.get(k, 0)))] for k in keys]
    ech, piv, _ = row_echelon(rows, m + 1)
    if m in piv:
        return None
    zero = RatFunc([])
    x = [zero] * m
    for r in range(len(ech) - 1, -1, -1):
        c = piv[r]
        acc = ech[r][m]
        for j in range(c + 1, m):
            if ech[r][j] and x[j]:
                acc = acc - ech[r][j] * x[j]
        x[c] = acc / ech[r][c]
    return [xi.to_scalar() for xi in x]


@dataclass
class Split:
    """A decomposition R = R₁ ⊕ R₂ given by basis predicates or by spanning vectors."""

    part1: Callable | list
    part2: Callable | list
    label: str = "split"

    def _member(self, part, x: dict) -> bool:
        if callable(part):
            return all(part(k) for k in x)
        return _in_span(part, x)


def split_projection_rb(mul: Callable, split: Split, samples1: Sequence, samples2: Sequence, fmt: Callable, caps=None) -> RBOperatorDef:
    """Projection onto ``split.part1`` along ``part2``, after checking both are closed.

    ``samples1``/``samples2`` are raw elements of each part (basis keys are
    accepted too) whose pairwise products are scanned for closure.
    """
    for part, samples, which in ((split.part1, samples1, "first"), (split.part2, samples2, "second")):
        elems = [s if isinstance(s, dict) else {s: 1} for s in samples]
        mm = bilinear(mul)
        for x, y in itertools.product(elems, repeat=2):
            prod = mm(x, y)
            if not split._member(part, prod):
                from .report import Witness

                fv = lambda raw: format_terms(raw, fmt)
                w = Witness([fv(x), fv(y)], fv(prod), f"an element of the {which} part", fv(prod), "closure under the product")
                raise NotASubalgebra(f"the {which} part of {split.label} is not closed under the product", w)
    if callable(split.part1) and callable(split.part2):
        p1 = split.part1
        return RBOperatorDef("split", -1, lambda k: {k: 1} if p1(k) else {}, label=f"proj[{split.label}]", projection=True)
    vecs1 = [dict(v) for v in split.part1] if not callable(split.part1) else None
    vecs2 = [dict(v) for v in split.part2] if not callable(split.part2) else None
    if vecs1 is None or vecs2 is None:
        raise ValueError("mixed predicate/span splits are not supported")
    allv = vecs1 + vecs2

    def proj(k):
        coords = _coordinates(allv, {k: 1})
        if coords is None:
            raise ValueError(f"basis element {k!r} is outside the given decomposition")
        acc: dict = {}
        for c, v in zip(coords[: len(vecs1)], vecs1):
            if c:
                lc_axpy(acc, v, c.raw)
        return acc

    return RBOperatorDef("split", -1, proj, label=f"proj[{split.label}]", projection=True)


def star_product(mul: Callable, opdef: RBOperatorDef, x: dict, y: dict) -> dict:
    """x ⋆_P y = xP(y) + P(x)y + λxy on raw elements."""
    return bilinear(star_basis(mul, opdef, opdef.weight))(x, y)


# --- checks --------------------------------------------------------------------------


def check_rota_baxter(R: RBAlgebra, opdef: RBOperatorDef, tail_cap: int = 3, weight=None) -> Report:
    """Weight-λ RB identity for ``opdef`` on R, basis pairs with |x|+|y| ≤ tail_cap."""
    w = opdef.weight if weight is None else Scalar(weight)
    pairs = R.tuples(2, tail_cap)
    return check_rb_identity(
        R.diamond, opdef, w, pairs, R.fmt, {"tail": tail_cap}, name=f"rota-baxter[{opdef.label}, λ={w}] on {R.label}"
    )


def check_projection_pair(R: RBAlgebra, p1: RBOperatorDef, p2: RBOperatorDef, tail_cap: int = 3) -> Report:
    """P₁, P₂ idempotent and complementary, then both RB of weight −1."""
    singles = R.basis(tail_cap)
    caps = {"tail": tail_cap}
    fv = lambda raw: format_terms(raw, R.fmt)
    parts = [
        check_idempotent(p1, singles, R.fmt, caps, name=f"idempotent[{p1.label}]"),
        check_idempotent(p2, singles, R.fmt, caps, name=f"idempotent[{p2.label}]"),
        check_identity(
            "complementary", [(k,) for k in singles],
            lambda s: lc_add(p1(s[0]), p2(s[0])), lambda s: {s[0]: 1}, R.fmt, fv, caps, "P1 + P2 = id",
        ),
        check_rota_baxter(R, p1, tail_cap, -1),
        check_rota_baxter(R, p2, tail_cap, -1),
    ]
    return combine(f"projections[{p1.label}, {p2.label}] on {R.label}", parts, caps)


def check_braided_rb(
    carrier: Carrier,
    opdef: RBOperatorDef,
    pairs: Sequence,
    triples: Sequence,
    mode: str = "weak",
    weight=None,
    caps=None,
    label: str = "",
) -> Report:
    """Braided Rota-Baxter conditions on a carrier (product + braiding).

    weak: RB identity, σ(P⊗P) = (P⊗P)σ and the braided-algebra laws of the
    product.  strong: in addition both intertwining laws, and the braided
    laws for ⋆_P with the same braiding.
    """
    if mode not in ("weak", "strong"):
        raise ValueError(f"mode must be weak or strong, not {mode!r}")
    w = opdef.weight if weight is None else Scalar(weight)
    caps = dict(caps or {})
    name = label or f"braided-rb[{mode}, {opdef.label}] on {carrier.name}"
    parts = [
        check_associativity(carrier, triples, caps, name="associativity"),
        check_compatibility(carrier, triples, caps, name="braided-compatibility"),
        check_rb_identity(carrier.mul, opdef, w, pairs, carrier.fmt, caps, name=f"rota-baxter[λ={w}]"),
    ]
    notes = []
    if mode == "strong":
        strong = check_strong_intertwining(carrier, opdef, pairs, caps, name="strong-intertwining")
        parts.append(strong)
        weak = check_weak_commutation(carrier, opdef, pairs, caps, name="weak-commutation")
        parts.append(weak)
        if strong.passed and not weak.passed:
            notes.append("strong intertwining holds but weak commutation fails")
        star = Carrier(f"⋆_P on {carrier.name}", mul=star_basis(carrier.mul, opdef, w), braid=carrier.braid, fmt=carrier.fmt)
        parts.append(check_compatibility(star, triples, caps, name="star-compatibility"))
        parts.append(check_rb_identity(star.mul, opdef, w, pairs, carrier.fmt, caps, name="star-rota-baxter"))
    else:
        parts.append(check_weak_commutation(carrier, opdef, pairs, caps, name="weak-commutation"))
    return combine(name, parts, caps, notes)


def check_R_braided_rb(R: RBAlgebra, opdef: RBOperatorDef, mode: str = "weak", tail_cap: int = 2) -> Report:
    """check_braided_rb on R with its carried-over β (pairs and triples with tail sum ≤ cap)."""
    return check_braided_rb(
        R.carrier(), opdef, R.tuples(2, tail_cap), R.tuples(3, tail_cap), mode,
        caps={"tail": tail_cap}, label=f"braided-rb[{mode}, {opdef.label}] on {R.label}",
    )
