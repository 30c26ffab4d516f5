"""Exhaustive identity checking on finite samples of basis elements.

A *carrier* is described by basis-level callables returning raw
combinations: ``mul(a, b)`` over keys, ``braid(a, b)`` over key pairs.
Elements of carrier^(⊗n) are raw dicts keyed by n-tuples of keys.  Every
checker walks its samples in the given (deterministic) order and stops at
the first counterexample, so witnesses are minimal for degree-ordered
samples.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .kernel import lc_add, lc_apply, lc_axpy, lc_scale, lc_splice, lc_sub
from .report import Report, Witness
from .scalar import to_raw
from .tensor import format_terms


@dataclass
class Carrier:
    """An algebra-with-braiding given on basis keys."""

    name: str
    mul: Callable | None = None
    braid: Callable | None = None
    fmt: Callable[[object], str] = str
    unit: object = None
    sep: str = " ⊗̲ "
    _mul1: dict = field(default_factory=dict, repr=False)

    def mul_tuple(self, t):
        """``mul`` on a 2-tuple slice, result keyed by 1-tuples (for splicing)."""
        r = self._mul1.get(t)
        if r is None:
            r = {(k,): v for k, v in self.mul(t[0], t[1]).items()}
            self._mul1[t] = r
        return r

    def braid_tuple(self, t):
        return self.braid(t[0], t[1])

    def fmt_tuple(self, key) -> str:
        parts = [self.fmt(k) for k in key]
        return self.sep.join(f"({p})" if ("⊗" in p and self.sep != "⊗") else p for p in parts)


def lift_unary(op: Callable) -> Callable:
    """Turn a basis map key -> raw over keys into one on 1-tuples."""
    cache: dict = {}

    def f(t):
        r = cache.get(t)
        if r is None:
            r = {(k,): v for k, v in op(t[0]).items()}
            cache[t] = r
        return r

    return f


def at(terms: dict, pos: int, arity: int, f: Callable) -> dict:
    return lc_splice(terms, pos, arity, f)


def ordered_tuples(basis: Sequence, degree: Callable[[object], int], arity: int, cap: int, min_each: int = 0):
    """All ``arity``-tuples of basis keys with total degree <= cap, by total degree."""
    by_deg: dict[int, list] = {}
    for b in basis:
        d = degree(b)
        if d >= min_each:
            by_deg.setdefault(d, []).append(b)
    degs = sorted(by_deg)
    out = []
    for combo in itertools.product(degs, repeat=arity):
        total = sum(combo)
        if total > cap:
            continue
        for t in itertools.product(*(by_deg[d] for d in combo)):
            out.append((total, t))
    out.sort(key=lambda p: p[0])
    return [t for _, t in out]


def _witness(identity, inputs, lhs, rhs, fmt_value) -> Witness:
    return Witness(
        inputs=list(inputs),
        lhs=fmt_value(lhs),
        rhs=fmt_value(rhs),
        difference=fmt_value(lc_sub(lhs, rhs)),
        identity=identity,
    )


def check_identity(
    name: str,
    samples: Iterable,
    lhs: Callable,
    rhs: Callable,
    fmt_input: Callable[[object], str],
    fmt_value: Callable[[dict], str],
    caps: dict | None = None,
    identity: str = "",
) -> Report:
    """Compare ``lhs(s)`` and ``rhs(s)`` (raw dicts) for every sample ``s``."""
    t0 = time.perf_counter()
    n = 0
    for s in samples:
        n += 1
        a = lhs(s)
        b = rhs(s)
        if a != b:
            w = _witness(identity or name, [fmt_input(x) for x in s], a, b, fmt_value)
            return Report(name, "fail", witness=w, checked=n, caps=dict(caps or {}), timing=time.perf_counter() - t0)
    return Report(name, "pass", checked=n, caps=dict(caps or {}), timing=time.perf_counter() - t0)


def _fmt_value(carrier: Carrier):
    return lambda raw: format_terms(raw, carrier.fmt_tuple)


def check_associativity(carrier: Carrier, triples, caps=None, name="associativity") -> Report:
    m = carrier.mul_tuple

    def lhs(t):
        return at(at({t: 1}, 0, 2, m), 0, 2, m)

    def rhs(t):
        return at(at({t: 1}, 1, 2, m), 0, 2, m)

    return check_identity(name, triples, lhs, rhs, carrier.fmt, _fmt_value(carrier), caps, "(xy)z = x(yz)")


def check_compatibility(carrier: Carrier, triples, caps=None, name="braided-compatibility") -> Report:
    """Both braided-algebra laws: (id⊗m)σ1σ2 = σ(m⊗id) and (m⊗id)σ2σ1 = σ(id⊗m)."""
    m, b = carrier.mul_tuple, carrier.braid_tuple
    triples = list(triples)

    def l1(t):
        x = at({t: 1}, 1, 2, b)
        x = at(x, 0, 2, b)
        return at(x, 1, 2, m)

    def r1(t):
        return at(at({t: 1}, 0, 2, m), 0, 2, b)

    def l2(t):
        x = at({t: 1}, 0, 2, b)
        x = at(x, 1, 2, b)
        return at(x, 0, 2, m)

    def r2(t):
        return at(at({t: 1}, 1, 2, m), 0, 2, b)

    fv = _fmt_value(carrier)
    r = check_identity(name, triples, l1, r1, carrier.fmt, fv, caps, "(id⊗m)σ1σ2 = σ(m⊗id)")
    if not r.passed:
        return r
    r2_ = check_identity(name, triples, l2, r2, carrier.fmt, fv, caps, "(m⊗id)σ2σ1 = σ(id⊗m)")
    r2_.checked += r.checked
    r2_.timing += r.timing
    return r2_


def check_ybe(carrier: Carrier, triples, caps=None, name="yang-baxter") -> Report:
    b = carrier.braid_tuple

    def lhs(t):
        return at(at(at({t: 1}, 0, 2, b), 1, 2, b), 0, 2, b)

    def rhs(t):
        return at(at(at({t: 1}, 1, 2, b), 0, 2, b), 1, 2, b)

    return check_identity(name, triples, lhs, rhs, carrier.fmt, _fmt_value(carrier), caps, "σ1σ2σ1 = σ2σ1σ2")


def check_unit_laws(carrier: Carrier, unit, singles, caps=None, name="unit-laws") -> Report:
    m = carrier.mul
    singles = list(singles)
    fv = lambda raw: format_terms(raw, carrier.fmt)
    r = check_identity(name, [(a,) for a in singles], lambda s: m(unit, s[0]), lambda s: {s[0]: 1}, carrier.fmt, fv, caps, "1·a = a")
    if not r.passed:
        return r
    r2 = check_identity(name, [(a,) for a in singles], lambda s: m(s[0], unit), lambda s: {s[0]: 1}, carrier.fmt, fv, caps, "a·1 = a")
    r2.checked += r.checked
    return r2


def check_unit_braiding(carrier: Carrier, unit, singles, caps=None, name="unit-braiding") -> Report:
    b = carrier.braid
    singles = list(singles)
    fv = _fmt_value(carrier)
    r = check_identity(name, [(a,) for a in singles], lambda s: b(s[0], unit), lambda s: {(unit, s[0]): 1}, carrier.fmt, fv, caps, "σ(a⊗1) = 1⊗a")
    if not r.passed:
        return r
    r2 = check_identity(name, [(a,) for a in singles], lambda s: b(unit, s[0]), lambda s: {(s[0], unit): 1}, carrier.fmt, fv, caps, "σ(1⊗a) = a⊗1")
    r2.checked += r.checked
    return r2


# --- Rota-Baxter operators ----------------------------------------------------


def bilinear(mul: Callable) -> Callable[[dict, dict], dict]:
    from .kernel import lc_apply2

    return lambda x, y: lc_apply2(x, y, mul)


def rb_sides(mul: Callable, op: Callable, weight) -> tuple[Callable, Callable]:
    """Both sides of P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy) on basis pairs."""
    lam = to_raw(weight)
    mm = bilinear(mul)

    def P(x):
        return lc_apply(x, op)

    def lhs(s):
        x, y = s
        return mm(op(x), op(y))

    def rhs(s):
        x, y = s
        ex, ey = {x: 1}, {y: 1}
        acc = P(mm(ex, op(y)))
        lc_axpy(acc, P(mm(op(x), ey)), 1)
        lc_axpy(acc, P(mul(x, y)), lam)
        return acc

    return lhs, rhs


def check_rb_identity(mul, op, weight, pairs, fmt, caps=None, name="rota-baxter") -> Report:
    lhs, rhs = rb_sides(mul, op, weight)
    fv = lambda raw: format_terms(raw, fmt)
    return check_identity(name, pairs, lhs, rhs, fmt, fv, caps, "P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)")


def check_idempotent(op, singles, fmt, caps=None, name="idempotent") -> Report:
    fv = lambda raw: format_terms(raw, fmt)
    return check_identity(name, [(a,) for a in singles], lambda s: lc_apply(op(s[0]), op), lambda s: op(s[0]), fmt, fv, caps, "P∘P = P")


def check_weak_commutation(carrier: Carrier, op, pairs, caps=None, name="braided-rb-weak") -> Report:
    """σ(P⊗P) = (P⊗P)σ on basis pairs."""
    b = carrier.braid_tuple
    p = lift_unary(op)

    def lhs(s):
        return at(at(at({s: 1}, 0, 1, p), 1, 1, p), 0, 2, b)

    def rhs(s):
        return at(at(at({s: 1}, 0, 2, b), 0, 1, p), 1, 1, p)

    return check_identity(name, pairs, lhs, rhs, carrier.fmt, _fmt_value(carrier), caps, "σ(P⊗P) = (P⊗P)σ")


def check_strong_intertwining(carrier: Carrier, op, pairs, caps=None, name="braided-rb-strong") -> Report:
    """σ(P⊗id) = (id⊗P)σ and σ(id⊗P) = (P⊗id)σ on basis pairs."""
    b = carrier.braid_tuple
    p = lift_unary(op)
    pairs = list(pairs)
    fv = _fmt_value(carrier)
    r = check_identity(
        name, pairs,
        lambda s: at(at({s: 1}, 0, 1, p), 0, 2, b),
        lambda s: at(at({s: 1}, 0, 2, b), 1, 1, p),
        carrier.fmt, fv, caps, "σ(P⊗id) = (id⊗P)σ",
    )
    if not r.passed:
        return r
    r2 = check_identity(
        name, pairs,
        lambda s: at(at({s: 1}, 1, 1, p), 0, 2, b),
        lambda s: at(at({s: 1}, 0, 2, b), 0, 1, p),
        carrier.fmt, fv, caps, "σ(id⊗P) = (P⊗id)σ",
    )
    r2.checked += r.checked
    return r2


def star_basis(mul: Callable, op: Callable, weight) -> Callable:
    """Basis map of x ⋆_P y = xP(y) + P(x)y + λxy."""
    lam = to_raw(weight)
    mm = bilinear(mul)
    cache: dict = {}

    def star(x, y):
        key = (x, y)
        r = cache.get(key)
        if r is None:
            ex, ey = {x: 1}, {y: 1}
            r = mm(ex, op(y))
            lc_axpy(r, mm(op(x), ey), 1)
            lc_axpy(r, mul(x, y), lam)
            cache[key] = r
        return r

    return star


# --- tridendriform -----------------------------------------------------------

TRIDENDRIFORM_AXIOMS = (
    "(x≺y)≺z = x≺(y∗z)",
    "(x≻y)≺z = x≻(y≺z)",
    "(x∗y)≻z = x≻(y≻z)",
    "(x≻y)·z = x≻(y·z)",
    "(x≺y)·z = x·(y≻z)",
    "(x·y)≺z = x·(y≺z)",
    "(x·y)·z = x·(y·z)",
)


def check_tridendriform(left, right, dot, triples, fmt, caps=None, name="tridendriform") -> Report:
    """The seven tridendriform relations; basis ops return raw combinations."""
    L, R, D = bilinear(left), bilinear(right), bilinear(dot)

    def star(x, y):
        return lc_add(lc_add(L(x, y), R(x, y)), D(x, y))

    sides = (
        (lambda x, y, z: L(L(x, y), z), lambda x, y, z: L(x, star(y, z))),
        (lambda x, y, z: L(R(x, y), z), lambda x, y, z: R(x, L(y, z))),
        (lambda x, y, z: R(star(x, y), z), lambda x, y, z: R(x, R(y, z))),
        (lambda x, y, z: D(R(x, y), z), lambda x, y, z: R(x, D(y, z))),
        (lambda x, y, z: D(L(x, y), z), lambda x, y, z: D(x, R(y, z))),
        (lambda x, y, z: L(D(x, y), z), lambda x, y, z: D(x, L(y, z))),
        (lambda x, y, z: D(D(x, y), z), lambda x, y, z: D(x, D(y, z))),
    )
    triples = list(triples)
    fv = lambda raw: format_terms(raw, fmt)
    total = 0
    t0 = time.perf_counter()
    for t in triples:
        x, y, z = ({t[0]: 1}, {t[1]: 1}, {t[2]: 1})
        for i, (l, r) in enumerate(sides):
            total += 1
            a, b = l(x, y, z), r(x, y, z)
            if a != b:
                w = _witness(f"axiom {i + 1}: {TRIDENDRIFORM_AXIOMS[i]}", [fmt(k) for k in t], a, b, fv)
                rep = Report(name, "fail", witness=w, checked=total, caps=dict(caps or {}), timing=time.perf_counter() - t0)
                rep.details["axiom"] = i + 1
                return rep
    return Report(name, "pass", checked=total, caps=dict(caps or {}), timing=time.perf_counter() - t0)


def scale_raw(x: dict, c) -> dict:
    return lc_scale(x, to_raw(c))
