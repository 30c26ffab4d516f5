import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helpers import to_sym
from qshrb import RBAlgebra, check_rota_baxter, diamond_product, operator_P, operator_P1, operator_P2, unitalize
from qshrb.errors import DegreeOverflow, NoUnitDesignated
from qshrb.fixtures import HECKE2, IDEM2, NULL2
from qshrb.rota_baxter import (
    RBElement,
    check_projection_pair,
    check_R_braided_rb,
    identity_operator,
    rb_operator_apply,
    star_product,
    zero_operator,
)
from qshrb.scalar import q

# unitalized IDEM2 on the flip, letters 0 = 1A, 1 = e1, 2 = e2
UNITAL_IDEM = {(0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (1, 0): {1: 1}, (2, 0): {2: 1}, (1, 1): {1: 1}}


@pytest.fixture(scope="module")
def R_flip():
    return RBAlgebra(unitalize(IDEM2()), 1)


def test_diamond_matches_flip_oracle(R_flip):
    for u, v in R_flip.tuples(2, 3):
        assert to_sym(R_flip.diamond(u, v)) == _with_unital_tails(u, v, 1)


def _with_unital_tails(u, v, lam):
    """For the flip, (a⊗̲x)◊(b⊗̲y) = ab ⊗̲ (x ⋈ y) with Hoffman's product on the tails."""
    (a, x), (b, y) = u, v
    acc = {}
    for k, c in UNITAL_IDEM.get((a, b), {}).items():
        for w, d in oracles.hoffman(UNITAL_IDEM, x, y, lam).items():
            oracles.add(acc, {(k, w): c * d})
    return oracles.clean(acc)


@pytest.mark.parametrize("lam", [0, 1, -1])
def test_rb_identity_via_oracle(lam):
    mul = oracle_mul_unital(lam)
    P = lambda x: oracles.clean({(0, (a,) + w): c for (a, w), c in x.items()})
    keys = [(h, t) for h in range(3) for t in [(), (1,), (2,), (0,)]]
    for u in keys:
        for v in keys:
            x, y = {u: 1}, {v: 1}
            lhs = mul(P(x), P(y))
            rhs = P(oracles.add(oracles.add(mul(x, P(y)), mul(P(x), y)), mul(x, y), lam))
            assert oracles.clean(lhs) == oracles.clean(rhs)


def oracle_mul_unital(lam):
    def mul(x, y):
        acc = {}
        for u, c in x.items():
            for v, d in y.items():
                oracles.add(acc, _with_unital_tails(u, v, lam), c * d)
        return oracles.clean(acc)

    return mul


@pytest.mark.parametrize("lam", [0, 1, -1, q], ids=["0", "1", "-1", "q"])
@pytest.mark.parametrize("make", [NULL2, IDEM2], ids=["NULL2+HECKE2", "IDEM2+FLIP2"])
def test_P_is_rota_baxter(make, lam):
    R = RBAlgebra(unitalize(make()), lam)
    rep = check_rota_baxter(R, operator_P(R), 2)
    assert rep.passed, rep.text()


def test_P_fails_with_the_wrong_weight():
    R = RBAlgebra(unitalize(IDEM2()), 1)
    rep = check_rota_baxter(R, operator_P(R), 2, weight=-1)
    assert rep.status == "fail" and rep.witness is not None


def test_P_needs_a_unit():
    with pytest.raises(NoUnitDesignated):
        operator_P(RBAlgebra(IDEM2(), 1))


@pytest.mark.parametrize("make", [NULL2, IDEM2])
def test_projection_pair(make):
    R = RBAlgebra(make(), 1)
    assert check_projection_pair(R, operator_P1(R), operator_P2(R), 2).passed


def test_trivial_operators():
    R = RBAlgebra(IDEM2(), 1)
    assert check_rota_baxter(R, identity_operator(-1), 2).passed
    assert check_rota_baxter(R, zero_operator(0), 2).passed
    assert not check_rota_baxter(R, identity_operator(1), 2).passed


def test_braided_rb_on_hecke():
    R = RBAlgebra(unitalize(NULL2()), 1)
    assert check_R_braided_rb(R, operator_P(R), "strong", 1).passed


def test_drop_middle_control():
    R = RBAlgebra(unitalize(IDEM2()), 1, drop_middle=True)
    assert not check_rota_baxter(R, operator_P(R), 2).passed


def test_element_api_and_bound():
    alg = unitalize(IDEM2())
    x = RBElement.basis(3, 1, (1,))
    y = RBElement.basis(3, 1, (2,))
    prod = diamond_product(alg, 1, x, y)
    assert to_sym(prod.raw) == _with_unital_tails((1, (1,)), (1, (2,)), 1)
    R = RBAlgebra(alg, 1, bound=2)
    with pytest.raises(DegreeOverflow):
        R.diamond((1, (1, 1)), (1, (1,)))
    P = operator_P(R)
    assert rb_operator_apply(P, RBElement.basis(3, 2)).raw == {(0, (2,)): 1}


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=1), st.lists(st.integers(0, 2), max_size=1), st.integers(0, 2), st.integers(0, 2))
def test_star_product_is_associative(x, y, a, b):
    # ⋆_P of an RB operator is associative
    R = RBAlgebra(unitalize(NULL2()), 1)
    P = operator_P(R)
    u, v, w = {(a, tuple(x)): 1}, {(b, tuple(y)): 1}, {(1, ()): 1}
    left = star_product(R.diamond, P, star_product(R.diamond, P, u, v), w)
    right = star_product(R.diamond, P, u, star_product(R.diamond, P, v, w))
    assert left == right
