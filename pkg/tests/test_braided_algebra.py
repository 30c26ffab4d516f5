from fractions import Fraction

import pytest
import sympy as sp

import oracles
from qshrb import BraidedAlgebraDef, check_braided_algebra, solve_compatible_products, unitalize
from qshrb.braided_algebra import check_unital
from qshrb.errors import GenericRankAmbiguity, ValidationError
from qshrb.fixtures import DUAL_NUMBERS, FLIP2, HECKE2, IDEM2, NONASSOC2, NULL2, QFLIP2, SIGNFLIP

SPACES = {"FLIP2": FLIP2, "HECKE2": HECKE2, "QFLIP2": QFLIP2, "SIGNFLIP": SIGNFLIP}


def oracle_dimension(name, at=None):
    M = oracles.compatibility_matrix(oracles.braiding(name))
    if at is not None:
        M = M.subs(oracles.q, at)
    return M.shape[1] - M.rank(simplify=True)


@pytest.mark.parametrize("name", sorted(SPACES))
def test_solver_matches_oracle_generic(name):
    sol = solve_compatible_products(SPACES[name]())
    assert sol.unknowns == 8
    assert sol.dimension == oracle_dimension(name)
    # a transcendental-looking rational stands in for generic q
    assert sol.dimension == oracle_dimension(name, sp.Rational(7, 3))
    assert len(sol.basis) == sol.dimension


@pytest.mark.parametrize("name", ["HECKE2", "QFLIP2"])
def test_solver_exceptional_values(name):
    sol = solve_compatible_products(SPACES[name]())
    assert sol.dimension == 0
    excluded = sol.excluded_values()
    assert set(excluded) <= {0, 1, -1}
    for v in (1, -1):
        assert dict(sol.probes)[Fraction(v)] == 8 - oracle_dimension(name, v)
    for c in sol.conditions:
        assert c.dimension == oracle_dimension(name, c.root)


def test_strict_solver_raises_on_rank_drop():
    with pytest.raises(GenericRankAmbiguity):
        solve_compatible_products(HECKE2(), strict=True)
    assert solve_compatible_products(SIGNFLIP(), strict=True).dimension == 0


def test_flip_solutions_are_all_products():
    sol = solve_compatible_products(FLIP2())
    assert sol.dimension == 8
    assert sol.associative.count(True) == 4
    for table in sol.basis:
        alg = BraidedAlgebraDef(FLIP2(), table, defer_checks=True)
        rep = check_braided_algebra(alg)
        assert rep.passed == (sol.associative[sol.basis.index(table)])


@pytest.mark.parametrize("make", [NULL2, IDEM2, DUAL_NUMBERS, lambda: NULL2(QFLIP2())])
def test_fixtures_are_braided_algebras(make):
    assert check_braided_algebra(make()).passed


def test_nonassociative_product_fails():
    rep = check_braided_algebra(NONASSOC2())
    assert rep.status == "fail" and rep.witness is not None
    with pytest.raises(ValidationError):
        BraidedAlgebraDef(FLIP2(), {(0, 0): {1: 1}, (0, 1): {0: 1}, (1, 0): {0: 1}})


def test_incompatible_product_rejected():
    # IDEM2's product does not intertwine HECKE2 at generic q
    with pytest.raises(ValidationError) as exc:
        IDEM2(HECKE2())
    assert exc.value.args


def test_unitalize():
    alg = unitalize(IDEM2())
    assert alg.names[0] == "1A" and alg.unit == 0 and alg.dim == 3
    assert check_unital(alg).passed
    assert check_braided_algebra(alg).passed
    assert alg.mul_raw(0, 2) == {2: 1}
    assert alg.mul_raw(1, 1) == {1: 1}
    assert alg.space.sigma_raw(0, 1) == {(1, 0): 1}
    u = unitalize(NULL2())
    assert check_braided_algebra(u).passed


def test_dual_numbers_unit():
    assert check_unital(DUAL_NUMBERS()).passed
    with pytest.raises(ValidationError):
        BraidedAlgebraDef(FLIP2(), {(0, 0): {0: 1}}, unit=1)
