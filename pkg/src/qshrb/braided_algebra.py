"""Braided algebras (A, m, σ): axioms, unitalization and the compatible-product solver."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .braided_space import BraidedSpace
from .checks import (
    Carrier,
    check_associativity,
    check_compatibility,
    check_unit_braiding,
    check_unit_laws,
)
from .errors import GenericRankAmbiguity, NoUnitDesignated, ValidationError
from .kernel import c_iszero
from .linalg import (
    RatFunc,
    factor_over_q,
    laurent_to_ratfunc,
    nullspace,
    p_format,
    p_gcd,
    p_divmod,
    p_from_scalar,
    p_mul,
    p_to_scalar,
    rank,
    rational_root,
    row_echelon,
    specialize_rows,
)
from .report import Report, combine
from .scalar import Scalar, to_raw
from .tensor import words


class BraidedAlgebraDef:
    """A braided space with multiplication constants ``product[(i, j)] = {k: c}``.

    ``unit`` is a basis index or None.  Associativity and both compatibility
    laws are checked on construction unless ``defer_checks`` is set.
    """

    def __init__(
        self,
        space: BraidedSpace,
        product: Mapping | None = None,
        unit: int | None = None,
        label: str = "",
        defer_checks: bool = False,
    ):
        self.space = space
        self.dim = space.dim
        self.names = space.names
        self.label = label or space.label
        self._m: dict = {}
        d = self.dim
        product = product or {}
        for key in product:
            if not (isinstance(key, tuple) and len(key) == 2 and all(0 <= x < d for x in key)):
                raise ValidationError(f"product index {key} out of range")
        for i in range(d):
            for j in range(d):
                img = {}
                for k, c in dict(product.get((i, j), {})).items():
                    if not 0 <= k < d:
                        raise ValidationError(f"product output index {k} out of range")
                    r = to_raw(c)
                    if not c_iszero(r):
                        img[k] = r
                self._m[(i, j)] = img
        if unit is not None and not 0 <= unit < d:
            raise ValidationError(f"unit index {unit} out of range")
        self.unit = unit
        self.deferred = defer_checks
        if not defer_checks:
            rep = check_braided_algebra(self)
            if not rep.passed:
                raise ValidationError(f"{self.label} is not a braided algebra", rep)
            if unit is not None:
                rep = check_unital(self)
                if not rep.passed:
                    raise ValidationError(f"{self.label}: designated unit fails the unit laws", rep)

    def mul_raw(self, i: int, j: int) -> dict:
        return self._m[(i, j)]

    def product_table(self) -> dict:
        return {k: {o: Scalar.from_raw(v) for o, v in img.items()} for k, img in self._m.items() if img}

    def is_zero_product(self) -> bool:
        return not any(self._m.values())

    def is_commutative(self) -> bool:
        return all(self._m[(i, j)] == self._m[(j, i)] for i in range(self.dim) for j in range(self.dim))

    def scaled(self, weight) -> "BraidedAlgebraDef":
        """(A, λ·m, σ); a braided algebra again, so no re-validation."""
        lam = Scalar(weight)
        prod = {k: {o: Scalar.from_raw(v) * lam for o, v in img.items()} for k, img in self._m.items()}
        return BraidedAlgebraDef(self.space, prod, None, f"{self.label}·{lam}", defer_checks=True)

    def carrier(self) -> Carrier:
        sp = self.space
        return Carrier(self.label, mul=self.mul_raw, braid=sp.sigma_raw, fmt=lambda k: self.names[k], unit=self.unit, sep="⊗")

    def __repr__(self):
        return f"BraidedAlgebraDef({self.label!r}, dim={self.dim}, unit={self.unit})"


def _triples(d):
    return [tuple(w) for w in words(d, 3, 3)]


def check_braided_algebra(alg: BraidedAlgebraDef) -> Report:
    """Associativity of m and both compatibility laws on all d³ basis triples."""
    car = alg.carrier()
    triples = _triples(alg.dim)
    parts = [
        check_associativity(car, triples, {"degree": 3}, name="associativity"),
        check_compatibility(car, triples, {"degree": 3}, name="compatibility"),
    ]
    return combine(f"braided-algebra[{alg.label}]", parts, {"degree": 3})


def check_unital(alg: BraidedAlgebraDef) -> Report:
    if alg.unit is None:
        raise NoUnitDesignated(f"{alg.label} has no designated unit")
    car = alg.carrier()
    basis = list(range(alg.dim))
    parts = [
        check_unit_laws(car, alg.unit, basis, name="unit-laws"),
        check_unit_braiding(car, alg.unit, basis, name="unit-braiding"),
    ]
    return combine(f"unital[{alg.label}]", parts)


UNIT_NAME = "1A"


def unitalize(alg: BraidedAlgebraDef) -> BraidedAlgebraDef:
    """Ã = K ⊕ A with index 0 the new unit; σ̃ acts as the flip on the unit block."""
    d = alg.dim
    sp = alg.space
    sigma = {(0, 0): {(0, 0): 1}}
    prod = {(0, 0): {0: 1}}
    for a in range(d):
        sigma[(0, a + 1)] = {(a + 1, 0): 1}
        sigma[(a + 1, 0)] = {(0, a + 1): 1}
        prod[(0, a + 1)] = {a + 1: 1}
        prod[(a + 1, 0)] = {a + 1: 1}
        for b in range(d):
            sigma[(a + 1, b + 1)] = {(k + 1, l + 1): Scalar.from_raw(c) for (k, l), c in sp.sigma_raw(a, b).items()}
            prod[(a + 1, b + 1)] = {k + 1: Scalar.from_raw(c) for k, c in alg.mul_raw(a, b).items()}
    names = [UNIT_NAME] + list(alg.names)
    inv = {(0, 0): {(0, 0): 1}}
    for a in range(d):
        inv[(0, a + 1)] = {(a + 1, 0): 1}
        inv[(a + 1, 0)] = {(0, a + 1): 1}
        for b in range(d):
            inv[(a + 1, b + 1)] = {(k + 1, l + 1): Scalar.from_raw(c) for (k, l), c in sp.inverse_raw(a, b).items()}
    label = f"~{alg.label}"
    tsp = BraidedSpace(d + 1, sigma, names, label=label, defer_checks=True, inverse_sigma=inv)
    tsp.deferred = sp.deferred
    return BraidedAlgebraDef(tsp, prod, unit=0, label=label, defer_checks=True)


# --- the compatible-product solver --------------------------------------------


@dataclass
class ExceptionalCondition:
    factor: str
    root: Fraction | None
    rank: int
    dimension: int

    def describe(self) -> str:
        where = f"q = {self.root}" if self.root is not None else f"{self.factor} = 0"
        return f"{where}: rank {self.rank}, solution dimension {self.dimension}"


@dataclass
class ProductSolution:
    """Solution space of the linear system 'm is compatible with σ'."""

    label: str
    unknowns: int
    generic_rank: int
    dimension: int
    basis: list[dict]
    conditions: list[ExceptionalCondition]
    checked_factors: list[str]
    associative: list[bool] = field(default_factory=list)
    domain: str = "q ≠ 0"
    probes: list[tuple[Fraction, int]] = field(default_factory=list)

    def excluded_values(self) -> list[Fraction]:
        return sorted(c.root for c in self.conditions if c.root is not None)

    def summary(self) -> str:
        lines = [
            f"compatible products for {self.label}: {self.unknowns} unknowns, generic rank {self.generic_rank}, "
            f"solution dimension {self.dimension} (generic q, {self.domain})"
        ]
        for c in self.conditions:
            lines.append(f"  exceptional: {c.describe()}")
        if not self.conditions:
            lines.append("  no exceptional parameter values")
        for v, rk in self.probes:
            lines.append(f"  probe q = {v}: rank {rk}, solution dimension {self.unknowns - rk}")
        for n, (b, assoc) in enumerate(zip(self.basis, self.associative)):
            terms = ", ".join(
                f"m({i + 1},{j + 1})[{k + 1}]={Scalar(c).to_ascii()}" for (i, j), img in sorted(b.items()) for k, c in sorted(img.items())
            )
            lines.append(f"  basis {n + 1}: {terms}  ({'associative' if assoc else 'not associative'})")
        return "\n".join(lines)


def compatibility_system(sp: BraidedSpace) -> list[list[Scalar]]:
    """Rows of the linear system on the d³ constants m^k_{ij}; column (i*d + j)*d + k."""
    d = sp.dim
    n = d**3

    def u(i, j, k):
        return (i * d + j) * d + k

    rows = []
    for a, b, c in words(d, 3, 3):
        eq1: dict = {}
        eq2: dict = {}

        def add(eq, out, col, coeff):
            row = eq.setdefault(out, {})
            row[col] = row.get(col, Scalar(0)) + coeff

        # (id⊗m)σ1σ2(abc) - σ(m⊗id)(abc)
        for (x, y, z), cf in sp.lift_raw((1, 2), {(a, b, c): 1}).items():
            for k in range(d):
                add(eq1, (x, k), u(y, z, k), Scalar.from_raw(cf))
        for k in range(d):
            for (x, y), cf in sp.sigma_raw(k, c).items():
                add(eq1, (x, y), u(a, b, k), -Scalar.from_raw(cf))
        # (m⊗id)σ2σ1(abc) - σ(id⊗m)(abc)
        for (x, y, z), cf in sp.lift_raw((2, 1), {(a, b, c): 1}).items():
            for k in range(d):
                add(eq2, (k, z), u(x, y, k), Scalar.from_raw(cf))
        for k in range(d):
            for (x, y), cf in sp.sigma_raw(a, k).items():
                add(eq2, (x, y), u(b, c, k), -Scalar.from_raw(cf))
        for eq in (eq1, eq2):
            for out in sorted(eq):
                row = [Scalar(0)] * n
                for col, v in eq[out].items():
                    row[col] = v
                if any(row):
                    rows.append(row)
    return rows


def _clear_denominators(vec: list[RatFunc]) -> list[Scalar]:
    den = [Fraction(1)]
    for x in vec:
        g = p_gcd(den, x.den)
        den = p_divmod(p_mul(den, x.den), g)[0]
    polys = [p_divmod(p_mul(x.num, den), x.den)[0] for x in vec]
    g = []
    for p in polys:
        if p:
            g = p if not g else p_gcd(g, p)
    if len(g) > 1:
        polys = [p_divmod(p, g)[0] for p in polys]
    lead = next(p[-1] for p in polys if p)
    return [p_to_scalar([c / lead for c in p]) for p in polys]


def solve_compatible_products(sp: BraidedSpace, strict: bool = False, probe=(1, -1)) -> ProductSolution:
    """Solve for all m making (V, m, σ) satisfy both compatibility laws.

    The rank is computed over Q(q).  Every irreducible factor of a pivot
    numerator is then re-tested by exact elimination over Q[q]/(f); the
    factors where the rank really drops are reported as exceptional
    conditions.  With ``strict`` such a drop raises GenericRankAmbiguity.
    """
    d = sp.dim
    n = d**3
    rows = compatibility_system(sp)
    rrows = [[laurent_to_ratfunc(x) for x in row] for row in rows]
    _, pivots, pivot_vals = row_echelon(rrows, n)
    r = len(pivots)
    zero, one = RatFunc([]), RatFunc.const(1)
    null = nullspace(rrows, n, one, zero) if r < n else []

    candidates: list[list] = []
    for pv in pivot_vals:
        for poly in (pv.num, pv.den):
            for f in factor_over_q(poly):
                if f != [0, 1] and f not in candidates:
                    candidates.append(f)
    conditions = []
    for f in candidates:
        spec = specialize_rows(rows, f)
        rk = rank(spec, n)
        if rk < r:
            conditions.append(ExceptionalCondition(p_format(f), rational_root(f), rk, n - rk))
    conditions.sort(key=lambda c: (c.root is None, c.root if c.root is not None else 0, c.factor))
    uses_q = any(not Scalar(x).is_constant() for row in rows for x in row)
    probes = []
    if uses_q:
        # values singled out by hand are re-checked even when no pivot vanishes there
        for v in probe:
            v = Fraction(v)
            probes.append((v, rank(specialize_rows(rows, [-v, Fraction(1)]), n)))

    basis = []
    for vec in null:
        coeffs = _clear_denominators(vec)
        table: dict = {}
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    c = coeffs[(i * d + j) * d + k]
                    if c:
                        table.setdefault((i, j), {})[k] = c
        basis.append(table)
    assoc = []
    for table in basis:
        alg = BraidedAlgebraDef(sp, table, defer_checks=True)
        assoc.append(check_associativity(alg.carrier(), _triples(d)).passed)
    result = ProductSolution(
        sp.label, n, r, n - r, basis, conditions, [p_format(f) for f in candidates], assoc,
        domain="q ≠ 0" if uses_q else "rational constants", probes=probes,
    )
    if strict and conditions:
        raise GenericRankAmbiguity(
            f"rank of the compatibility system for {sp.label} drops at: "
            + "; ".join(c.describe() for c in conditions),
            result,
        )
    return result
