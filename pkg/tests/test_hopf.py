import itertools
from fractions import Fraction as F

import pytest

from oracles import brute_compositions
from polyzeta.hopf import (CheckReport, TensorPolynomial, antipode,
                           antipode_recursive, check_antipode,
                           check_bialgebra, compositions, coproduct, counit,
                           default_alphabet)
from polyzeta.products import (DUFFLE, PRODUCTS, SHUFFLE, STUFFLE, Bracket,
                               star)
from polyzeta.words import (EMPTY_WORD, Polynomial, Word, word, x, y)


def test_coproduct_splittings():
    assert coproduct(EMPTY_WORD) == TensorPolynomial({(EMPTY_WORD, EMPTY_WORD): 1})
    w = word(x(0), x(1))
    assert coproduct(w) == TensorPolynomial({
        (w, EMPTY_WORD): 1,
        (word(x(0)), word(x(1))): 1,
        (EMPTY_WORD, w): 1,
    })
    assert len(coproduct(word(x(0), x(0), x(1))).terms) == 4


def test_coproduct_lemma_identity():
    # coproduct(aw) = (a (x) 1) coproduct(w) + 1 (x) aw
    for letters in itertools.product((x(0), x(1)), repeat=3):
        w = Word(letters[1:])
        a = letters[0]
        lhs = coproduct(w.prepended(a))
        rhs = (coproduct(w).left_prepended(a)
               + TensorPolynomial({(EMPTY_WORD, w.prepended(a)): 1}))
        assert lhs == rhs


def test_counit():
    assert counit(EMPTY_WORD) == 1
    assert counit(word(x(0), x(1))) == 0
    p = Polynomial([(EMPTY_WORD, 3), (word(x(0)), 2)])
    assert counit(p) == 3


def test_counit_laws():
    for n in range(5):
        for letters in itertools.product((y(1), y(2)), repeat=n):
            w = Word(letters)
            left = Polynomial()
            right = Polynomial()
            for (u, v), c in coproduct(w).terms.items():
                left += (c * counit(u)) * Polynomial.monomial(v)
                right += (c * counit(v)) * Polynomial.monomial(u)
            assert left == Polynomial.monomial(w)
            assert right == Polynomial.monomial(w)


def test_coassociativity():
    for n in range(6):
        for letters in itertools.product((y(1), y(2)), repeat=n):
            w = Word(letters)
            left = {}
            right = {}
            for (u, v), c in coproduct(w).terms.items():
                for (a, b), d in coproduct(u).terms.items():
                    key = (a, b, v)
                    left[key] = left.get(key, 0) + c * d
                for (b, cc), d in coproduct(v).terms.items():
                    key = (u, b, cc)
                    right[key] = right.get(key, 0) + c * d
            assert left == right


def test_compositions_small():
    assert compositions(0) == [()]
    assert compositions(1) == [(1,)]
    assert set(compositions(3)) == {(3,), (1, 2), (2, 1), (1, 1, 1)}
    with pytest.raises(ValueError):
        compositions(-1)


def test_compositions_against_bruteforce():
    for n in range(8):
        got = compositions(n)
        assert len(got) == len(set(got))
        assert set(got) == brute_compositions(n)
    assert len(compositions(10)) == 512


def test_antipode_single_letter():
    for br, letter in ((SHUFFLE, x(0)), (STUFFLE, y(2)), (DUFFLE, None)):
        if letter is None:
            continue
        w = word(letter)
        assert antipode(br, w) == Polynomial.monomial(w, -1)
    assert antipode(SHUFFLE, EMPTY_WORD) == Polynomial.one()


def test_antipode_shuffle_is_signed_reversal():
    for n in range(5):
        for letters in itertools.product((x(0), x(1)), repeat=n):
            w = Word(letters)
            expected = Polynomial.monomial(Word(reversed(letters)), (-1) ** n)
            assert antipode(SHUFFLE, w) == expected


def test_antipode_stuffle_y1y1():
    # composition sum: -(y1 y1) + y1 * y1 = y1 y1 + y2
    got = antipode(STUFFLE, word(y(1), y(1)))
    assert got == Polynomial([(word(y(1), y(1)), 1), (word(y(2)), 1)])
    assert got == antipode_recursive(STUFFLE, word(y(1), y(1)))


@pytest.mark.parametrize("name", sorted(PRODUCTS))
def test_antipode_closed_equals_recursive(name):
    br = PRODUCTS[name]
    alphabet = default_alphabet(br)[:2]
    for n in range(5):
        for letters in itertools.product(alphabet, repeat=n):
            w = Word(letters)
            assert antipode(br, w) == antipode_recursive(br, w)


def test_antipode_axiom_hand_example():
    # a(x0 x1) sh 1 + a(x0) sh x1 + 1 sh x0 x1 = 0
    w = word(x(0), x(1))
    total = Polynomial()
    for i in range(3):
        total += star(SHUFFLE, antipode(SHUFFLE, w[:i]), Polynomial.monomial(w[i:]))
    assert total == Polynomial()


def test_check_antipode_empty_word_case():
    rep = check_antipode(STUFFLE, 0)
    assert rep.ok and rep.checked == 1


@pytest.mark.parametrize("name", sorted(PRODUCTS))
def test_check_bialgebra_and_antipode(name):
    br = PRODUCTS[name]
    rep1 = check_bialgebra(br, 4)
    assert rep1.ok, rep1.counterexample
    rep2 = check_antipode(br, 3)
    assert rep2.ok, rep2.counterexample


def test_non_symmetric_bracket_is_caught():
    # violating S2 breaks the compatibility; used as a negative control
    def bad(a, b):
        return (1, y(a.index + 2 * b.index))

    bad_bracket = Bracket("bad", bad, kinds=("indexed",))
    rep = check_bialgebra(bad_bracket, 3, alphabet=(y(1), y(2)))
    assert not rep.ok
    assert rep.status == "counterexample"
    assert set(rep.counterexample) == {"left", "right"}


def test_tensor_star_componentwise():
    t1 = TensorPolynomial({(word(y(1)), EMPTY_WORD): 1})
    t2 = TensorPolynomial({(word(y(1)), word(y(2))): F(1, 2)})
    got = t1.star(STUFFLE, t2)
    left = star(STUFFLE, word(y(1)), word(y(1)))
    expected = TensorPolynomial(
        {(w, word(y(2))): F(1, 2) * c for w, c in left.terms.items()})
    assert got == expected


def test_report_shape():
    rep = check_bialgebra(SHUFFLE, 2)
    assert isinstance(rep, CheckReport)
    assert rep.status == "ok"
    assert rep.counterexample is None
    assert rep.checked > 0
