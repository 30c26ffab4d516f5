import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from helpers import to_sym
from qshrb import BraidedSpace, TensorElement, apply_beta, braid_lift, check_braid_lifts, check_ybe
from qshrb.braided_space import all_reduced_words, chi_perm, compose, from_generators, inversions, reduced_word
from qshrb.errors import DegreeMismatch, ValidationError
from qshrb.kernel import lc_apply
from qshrb.fixtures import FLIP2, HECKE2, QFLIP2, SIGNFLIP
from qshrb.quasi_shuffle import get_engine
from qshrb.braided_algebra import BraidedAlgebraDef
from qshrb.tensor import words

SPACES = {"FLIP2": FLIP2, "HECKE2": HECKE2, "QFLIP2": QFLIP2, "SIGNFLIP": SIGNFLIP}

perms4 = st.permutations([1, 2, 3, 4]).map(tuple)


@pytest.mark.parametrize("name", sorted(SPACES))
def test_ybe_fixtures(name):
    rep = check_ybe(SPACES[name]())
    assert rep.passed and rep.checked == 8


def test_corrupt_braiding_fails_ybe_with_witness():
    rep = check_ybe(HECKE2(corrupt=True))
    assert rep.status == "fail"
    assert rep.witness.lhs != rep.witness.rhs
    assert len(rep.witness.inputs) == 1


def test_constructor_validates():
    with pytest.raises(ValidationError):
        BraidedSpace(2, {(0, 0): {(0, 0): 1}, (0, 1): {(0, 1): 1}, (1, 0): {(0, 1): 1}, (1, 1): {(1, 1): 1}})
    with pytest.raises(ValidationError):
        BraidedSpace(2, {(0, 2): {(0, 0): 1}})
    sp = HECKE2(corrupt=True)
    assert sp.deferred


@given(perms4)
def test_reduced_word_is_reduced(w):
    r = reduced_word(w)
    assert len(r) == inversions(w)
    assert from_generators(r, 4) == w
    for other in all_reduced_words(w):
        assert from_generators(other, 4) == w and len(other) == len(r)


@given(perms4, perms4)
def test_compose_is_a_group_law(u, v):
    assert inversions(compose(u, v)) <= inversions(u) + inversions(v)
    assert compose(u, (1, 2, 3, 4)) == u


def test_reduced_words_of_longest_element_in_s3():
    assert set(all_reduced_words((3, 2, 1))) == {(1, 2, 1), (2, 1, 2)}
    assert len(all_reduced_words((4, 3, 2, 1))) == 16


@pytest.mark.parametrize("name", ["HECKE2", "QFLIP2", "FLIP2"])
def test_braid_lifts_well_defined(name):
    rep = check_braid_lifts(SPACES[name]())
    assert rep.passed
    assert rep.checked == 680


def test_braid_lifts_detect_corruption():
    rep = check_braid_lifts(HECKE2(corrupt=True))
    assert not rep.passed
    assert "T via" in rep.witness.identity


@pytest.mark.parametrize("name", ["HECKE2", "SIGNFLIP"])
def test_braid_lift_matches_oracle(name):
    sp_ = SPACES[name]()
    sig = oracles.braiding(name)
    for perm in itertools.permutations((1, 2, 3)):
        for w in words(2, 3, 3):
            got = braid_lift(sp_, perm, TensorElement.word(2, w))
            want = oracles.apply_word(sig, oracles.reduced_word(perm), {tuple(w): 1})
            assert to_sym(got.raw) == want


def test_flip_lift_is_place_permutation():
    sp_ = FLIP2()
    x = TensorElement.word(2, (0, 1, 1))
    # the factor in position k moves to position w(k)
    assert braid_lift(sp_, (3, 1, 2), x) == TensorElement.word(2, (1, 1, 0))


def test_beta_is_chi_lift():
    sp_ = HECKE2()
    for i, j in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        for w in words(2, i + j, i + j):
            x = TensorElement.word(2, w)
            assert apply_beta(sp_, i, j, x) == braid_lift(sp_, chi_perm(i, j), x)
    with pytest.raises(DegreeMismatch):
        apply_beta(sp_, 1, 1, TensorElement.word(2, (0, 1, 1)))


@pytest.mark.parametrize("name", ["HECKE2", "QFLIP2", "SIGNFLIP"])
def test_quantum_shuffle_oracle(name):
    # with m = 0 the quasi-shuffle is the sum of T_w over shuffles
    sp_ = SPACES[name]()
    eng = get_engine(BraidedAlgebraDef(sp_, {}), 1)
    sig = oracles.braiding(name)
    for n in range(2, 5):
        for i in range(1, n):
            for x in words(2, i, i):
                for y in words(2, n - i, n - i):
                    assert to_sym(eng.words(x, y)) == oracles.quantum_shuffle(sig, x, y)


def test_inverse_braiding():
    sp_ = HECKE2()
    for w in words(2, 2, 2):
        back = lc_apply(sp_.word_sigma(w, 1), lambda v: sp_.word_sigma_inverse(v, 1))
        assert back == {w: 1}
