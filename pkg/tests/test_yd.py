import pytest

import oracles
from helpers import to_sym
from qshrb import Bosonization, HopfAlgebraDef, YDModuleDef, check_bosonization_rb, check_yd_module, natural_braiding
from qshrb.braided_space import check_ybe
from qshrb.errors import DegreeOverflow, ValidationError
from qshrb.fixtures import TRIVIAL_YD, Z2, Z2_YD, Z2_YD_BROKEN
from qshrb.kernel import lc_axpy
from qshrb.qmb import QMBDef
from qshrb.tensor import words
from qshrb.yd import (
    SmashElement,
    check_hopf_axioms,
    check_yd_algebra,
    format_smash_key,
    group_algebra,
    operator_P0,
    projection_P0,
    sigma_bosonization,
    smash_product,
)


def sweedler():
    """H4 = <g, x | g² = 1, x² = 0, xg = −gx>, basis 1, g, x, gx."""
    mult = {}
    for i in range(4):
        a, b = i % 2, i // 2
        for j in range(4):
            c, d = j % 2, j // 2
            if b + d < 2:
                mult[(i, j)] = {(a + c) % 2 + 2 * (b + d): (-1) ** (b * c)}
    comult = {0: {(0, 0): 1}, 1: {(1, 1): 1}, 2: {(2, 0): 1, (1, 2): 1}, 3: {(3, 1): 1, (0, 3): 1}}
    antipode = {0: {0: 1}, 1: {1: 1}, 2: {3: -1}, 3: {2: 1}}
    return mult, comult, antipode


def H4(antipode=None):
    mult, comult, S = sweedler()
    return HopfAlgebraDef(4, mult, {0: 1}, comult, {0: 1, 1: 1}, antipode or S, names=["1", "g", "x", "gx"], label="H4",
                          defer_checks=antipode is not None)


# --- Hopf algebras ---------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_group_algebras(n):
    H = group_algebra(n)
    assert check_hopf_axioms(H).passed
    assert H.names[0] == "1"


def test_sweedler_algebra():
    H = H4()
    assert check_hopf_axioms(H).passed
    # S has order 4
    s2 = H.antipode(H.antipode({2: 1}))
    assert s2 == {2: -1}


def test_bad_antipode_fails():
    H = H4(antipode={0: {0: 1}, 1: {1: 1}, 2: {2: -1}, 3: {3: -1}})
    rep = check_hopf_axioms(H)
    assert rep.status == "fail" and rep.witness is not None
    with pytest.raises(ValidationError):
        HopfAlgebraDef(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {1: 1}}, {0: 1},
                       {0: {(0, 0): 1}, 1: {(1, 1): 1}}, {0: 1, 1: 1}, {0: {0: 1}, 1: {1: 1}})


def test_iterated_coproduct_is_coassociative():
    H = H4()
    for i in range(4):
        d3 = H.delta_n(i, 3)
        left, right = {}, {}
        for (a, b), c in H.coproduct(i).items():
            for (a1, a2), c1 in H.coproduct(a).items():
                left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * c1
            for (b1, b2), c2 in H.coproduct(b).items():
                right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * c2
        clean = lambda d: {k: v for k, v in d.items() if v}
        assert clean(left) == clean(right) == clean(d3)


# --- YD modules ------------------------------------------------------------------


def test_fixture_modules():
    for yd in (Z2_YD(), Z2_YD(mixed=True), TRIVIAL_YD(2)):
        assert check_yd_module(yd).passed
        assert check_ybe(natural_braiding(yd)).passed


def test_broken_module_fails_compatibility():
    rep = check_yd_module(Z2_YD_BROKEN())
    assert rep.status == "fail"
    assert "yd" in rep.text()
    with pytest.raises(ValidationError):
        YDModuleDef(Z2(), 2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}},
                    {0: {(1, 0): 1}, 1: {(0, 1): 1}})


def test_natural_braidings():
    sp_ = natural_braiding(Z2_YD())
    for i in range(2):
        for j in range(2):
            assert sp_.sigma_raw(i, j) == {(j, i): -1}
    mixed = natural_braiding(Z2_YD(mixed=True))
    assert mixed.sigma_raw(0, 0) == {(0, 0): -1}
    assert mixed.sigma_raw(0, 1) == {(1, 0): 1}
    assert mixed.sigma_raw(1, 0) == {(0, 1): 1}
    assert natural_braiding(TRIVIAL_YD(2)).sigma_raw(0, 1) == {(1, 0): 1}


def test_yd_algebra():
    yd = Z2_YD()
    assert check_yd_algebra(yd, QMBDef.trivial(natural_braiding(yd)), 3).passed


# --- bosonization against the group-algebra oracles ----------------------------------


def z2_setup(mixed):
    mult = lambda a, b: (a + b) % 2
    inv = lambda a: a
    if mixed:
        sigma = {(i, j): {(j, i): -1 if i == j == 0 else 1} for i in range(2) for j in range(2)}
        deg = lambda x: sum(1 for v in x if v == 0) % 2
        act = lambda g, y: {y: (-1) ** (g * sum(1 for v in y if v == 0))}
    else:
        sigma = oracles.braiding("SIGNFLIP")
        deg = lambda x: len(x) % 2
        act = lambda g, y: {y: (-1) ** (g * len(y))}
    star = lambda x, y: oracles.quantum_shuffle(sigma, x, y) if x and y else {x + y: 1}
    return mult, inv, act, deg, star


def smash_keys(cap):
    return [(w, h) for w in words(2, cap) for h in range(2)]


@pytest.mark.parametrize("mixed", [False, True], ids=["signflip", "mixed"])
def test_product_and_sigma_match_group_oracles(mixed):
    B = Bosonization(Z2_YD(mixed))
    mult, inv, act, deg, star = z2_setup(mixed)
    keys = smash_keys(2)
    for u in keys:
        for v in keys:
            assert to_sym(B.product(u, v)) == oracles.group_smash(mult, act, deg, star, u, v)
            assert to_sym(B.sigma(u, v)) == oracles.group_sigma(mult, inv, act, deg, u, v)


def test_worked_examples():
    yd = Z2_YD()
    B = Bosonization(yd)
    v1, v2 = ((0,), 0), ((1,), 0)
    assert B.sigma(v1, v2) == {(v2, v1): -1}
    assert B.product(((), 1), v1) == {((0,), 1): -1}
    assert format_smash_key(yd, ((0,), 1)) == "v1#g"


@pytest.mark.parametrize("make", [lambda: Z2_YD(), lambda: Z2_YD(mixed=True), lambda: TRIVIAL_YD(2)])
def test_bosonization_rb(make):
    rep = check_bosonization_rb(Bosonization(make()), 2)
    assert rep.passed, rep.text()


def test_bosonization_over_sweedler():
    V = YDModuleDef(H4(), 1, {(0, 0): {0: 1}, (1, 0): {0: -1}}, {0: {(1, 0): 1}}, names=["v"], label="V[H4]")
    assert check_yd_module(V).passed
    assert check_bosonization_rb(Bosonization(V), 2).passed


def test_P0_has_weight_minus_one():
    rep = check_bosonization_rb(Bosonization(Z2_YD()), 2, weight=1)
    assert rep.status == "fail"


def test_element_api():
    yd = Z2_YD()
    u = SmashElement(yd, {((), 1): 1, ((0,), 0): 2})
    v = SmashElement(yd, {((1,), 0): 1})
    B = Bosonization(yd)
    want = lc_axpy(dict(B.product(((), 1), ((1,), 0))), B.product(((0,), 0), ((1,), 0)), 2)
    assert smash_product(yd, None, u, v).raw == want
    assert projection_P0(u).raw == {((), 1): 1}
    assert operator_P0()(((0,), 1)) == {}
    assert sigma_bosonization(Bosonization(yd), u, v)
    with pytest.raises(DegreeOverflow):
        Bosonization(yd).product(((0,) * 3, 0), ((0,) * 3, 0))
