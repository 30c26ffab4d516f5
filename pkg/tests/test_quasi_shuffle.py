import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helpers import to_sym
from qshrb import TensorElement, check_filtration, check_qsh_associativity, classical_qsh_oracle, qsh_product
from qshrb.braided_algebra import BraidedAlgebraDef
from qshrb.errors import DegreeOverflow
from qshrb.fixtures import FLIP2, HECKE2, IDEM2, NULL2, QFLIP2
from qshrb.kernel import lc_apply2
from qshrb.quasi_shuffle import QuasiShuffle, get_engine, shuffle_count
from qshrb.tensor import words

word = st.lists(st.integers(0, 1), max_size=3).map(tuple)


def pairs(cap):
    for n in range(cap + 1):
        for i in range(n + 1):
            for x in words(2, i, i):
                for y in words(2, n - i, n - i):
                    yield x, y


@pytest.mark.parametrize("table", [{}, {(0, 0): {0: 1}}], ids=["m=0", "IDEM2"])
@pytest.mark.parametrize("lam", [1, -1, 3])
def test_flip_is_hoffman(table, lam):
    eng = QuasiShuffle(BraidedAlgebraDef(FLIP2(), table), lam)
    for x, y in pairs(5):
        got = to_sym(eng.words(x, y))
        assert got == oracles.hoffman(table, x, y, lam)
        assert got == to_sym(classical_qsh_oracle(table, x, y, lam))


def test_shuffle_coefficients_count_shuffles():
    eng = get_engine(NULL2(FLIP2()), 1)
    for x, y in pairs(5):
        assert sum(eng.words(x, y).values()) == shuffle_count(len(x), len(y))


def test_hecke_example():
    eng = get_engine(NULL2(), 1)
    assert to_sym(eng.words((1,), (0,))) == {(0, 1): oracles.q, (1, 0): 2 - oracles.q**2}
    assert to_sym(eng.words((0,), (1,))) == {(0, 1): 1, (1, 0): oracles.q}


@pytest.mark.parametrize("alg", [NULL2(), NULL2(QFLIP2()), IDEM2()], ids=lambda a: a.label)
def test_associativity_and_filtration(alg):
    assert check_qsh_associativity(alg, 1, 4).passed
    assert check_filtration(alg, 1, 4).passed


def test_drop_middle_control_fails():
    alg = IDEM2()
    eng = QuasiShuffle(alg, 1, drop_middle=True)
    rep = check_qsh_associativity(alg, 1, 3, product=eng)
    assert rep.status == "fail"
    assert not check_filtration(alg, 1, 3, product=eng).passed


@settings(max_examples=60, deadline=None)
@given(word, word, word, st.sampled_from([1, -1, 2]))
def test_associative_property(x, y, z, lam):
    eng = get_engine(IDEM2(), lam)
    left = lc_apply2(eng.words(x, y), {z: 1}, eng.words)
    right = lc_apply2({x: 1}, eng.words(y, z), eng.words)
    assert left == right


@settings(max_examples=60, deadline=None)
@given(word, word)
def test_flip_with_commutative_product_is_commutative(x, y):
    eng = get_engine(IDEM2(), 1)
    assert eng.words(x, y) == eng.words(y, x)


@given(word, word)
def test_weight_zero_is_top_component(x, y):
    eng1, eng0 = get_engine(IDEM2(), 1), get_engine(IDEM2(), 0)
    top = {w: c for w, c in eng1.words(x, y).items() if len(w) == len(x) + len(y)}
    assert top == eng0.words(x, y)


def test_tensor_api_and_bound():
    alg = NULL2()
    x = TensorElement.word(2, (0, 1), bound=3)
    y = TensorElement.word(2, (1,), bound=3)
    assert qsh_product(alg, 1, x, y).degrees() == [3]
    with pytest.raises(DegreeOverflow):
        qsh_product(alg, 1, x, TensorElement.word(2, (1, 1), bound=3))
    one = TensorElement.scalar(2, 1, bound=3)
    assert qsh_product(alg, 1, one, x) == x
