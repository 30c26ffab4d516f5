import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from helpers import to_sym
from qshrb import QMBDef, TensorElement, check_qmb_axioms, qmb_global_product
from qshrb.errors import DegreeOverflow, ValidationError
from qshrb.fixtures import FLIP2, HECKE2, IDEM2, NONASSOC2, NULL2, QFLIP2
from qshrb.qmb import check_star_braided_algebra, check_star_vs_qsh, check_top_component, delta_beta_iterated, delta_beta_words
from qshrb.tensor import words

word = st.lists(st.integers(0, 1), max_size=2).map(tuple)


def pairs(cap):
    for n in range(cap + 1):
        for i in range(n + 1):
            for x in words(2, i, i):
                for y in words(2, n - i, n - i):
                    yield x, y


@pytest.mark.parametrize("name, make", [("HECKE2", HECKE2), ("QFLIP2", QFLIP2)])
def test_trivial_star_is_quantum_shuffle(name, make):
    qmb = QMBDef.trivial(make())
    for x, y in pairs(4):
        if x and y:
            assert to_sym(qmb.star(x, y)) == oracles.quantum_shuffle(oracles.braiding(name), x, y)


def test_m11_star_is_hoffman_on_flip():
    qmb = QMBDef.from_algebra(IDEM2())
    for x, y in pairs(4):
        if x or y:
            assert to_sym(qmb.star(x, y)) == oracles.hoffman({(0, 0): {0: 1}}, x, y)
    assert qmb.star((), ()) == {(): 1}


@pytest.mark.parametrize("qmb", [QMBDef.trivial(HECKE2()), QMBDef.from_algebra(IDEM2()), QMBDef.trivial(FLIP2())], ids=lambda m: m.label)
def test_axioms_and_star_algebra(qmb):
    assert check_qmb_axioms(qmb, 4).passed
    assert check_star_braided_algebra(qmb, 4).passed
    assert check_top_component(qmb, 4).passed


@pytest.mark.parametrize("alg", [IDEM2(), NULL2()], ids=lambda a: a.label)
def test_star_agrees_with_qsh(alg):
    assert check_star_vs_qsh(QMBDef.from_algebra(alg, defer_checks=True), alg, 4).passed


def test_nonassociative_m11_fails_axiom_iii():
    with pytest.raises(ValidationError):
        QMBDef.from_algebra(NONASSOC2())
    qmb = QMBDef.from_algebra(NONASSOC2(), defer_checks=True)
    rep = check_qmb_axioms(qmb, 3)
    assert rep.status == "fail"
    assert "axiom-iii:fail" in rep.details["parts"]
    assert rep.details["triple"] == [1, 1, 1]
    assert rep.witness.inputs == ["e1", "e1", "e2"]
    assert not check_star_braided_algebra(qmb, 3).passed


def test_fixed_components_cannot_be_given():
    with pytest.raises(ValidationError):
        QMBDef(FLIP2(), {(1, 0): {((0,), ()): {0: 1}}})
    with pytest.raises(ValidationError):
        QMBDef(FLIP2(), {(1, 1): {((0, 1), (0,)): {0: 1}}})


def test_builtin_components():
    qmb = QMBDef.trivial(FLIP2())
    assert qmb.M((1,), ()) == {(1,): 1}
    assert qmb.M((), (0,)) == {(0,): 1}
    assert qmb.M((0, 1), ()) == {}


def test_delta_beta_on_flip_counts_splittings():
    sp_ = FLIP2()
    for x, y in pairs(4):
        d = delta_beta_words(sp_, x, y)
        assert len(d) == (len(x) + 1) * (len(y) + 1)
        assert all(c == 1 for c in d.values())


@given(word, word)
def test_delta_beta_coassociative(x, y):
    sp_ = HECKE2()
    assert delta_beta_iterated(sp_, x, y, 2, "left") == delta_beta_iterated(sp_, x, y, 2, "right")


def test_global_product_bound():
    qmb = QMBDef.trivial(HECKE2())
    x = TensorElement.word(2, (0, 1), bound=3)
    assert qmb_global_product(qmb, x, TensorElement.word(2, (1,), bound=3)).degrees() == [3]
    with pytest.raises(DegreeOverflow):
        qmb_global_product(qmb, x, x)
