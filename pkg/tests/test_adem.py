"""Rewriting engine: admissibility, Adem expansion, normalization, basis."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steenrod.adem import (
    AdemElement,
    Sq,
    StepBudgetExceeded,
    adem_rewrite,
    admissible_basis,
    degree,
    excess,
    is_admissible,
    normalize,
    product,
)

words = st.lists(st.integers(1, 9), max_size=5).map(tuple)
elements = st.frozensets(words, max_size=4).map(AdemElement)


def all_compositions(d: int):
    """Every word of degree d (oracle: binary cut positions)."""
    if d == 0:
        yield ()
        return
    for cuts in itertools.product([0, 1], repeat=d - 1):
        word = []
        part = 1
        for cut in cuts:
            if cut:
                word.append(part)
                part = 1
            else:
                part += 1
        word.append(part)
        yield tuple(word)


def test_degree_and_excess_examples():
    assert degree(()) == 0
    assert degree((3,)) == 3
    assert degree((3, 1)) == 4
    assert excess(()) == 0
    assert excess((7,)) == 7
    assert excess((2, 1)) == 1
    assert excess((3, 1)) == 2
    assert excess((1, 3)) == 0  # floored at zero


def test_is_admissible_examples():
    assert is_admissible((2, 1))
    assert not is_admissible((3, 2))
    assert is_admissible(())
    assert is_admissible((4, 2, 1))
    assert not is_admissible((4, 2, 2))


def test_adem_rewrite_examples():
    assert adem_rewrite(1, 1) == frozenset()
    assert adem_rewrite(1, 2) == frozenset({(3,)})
    assert adem_rewrite(2, 2) == frozenset({(3, 1)})
    assert adem_rewrite(3, 2) == frozenset()


def test_adem_rewrite_words_are_homogeneous():
    for a in range(1, 10):
        for b in range(max(1, a // 2 + 1), 10):
            if a >= 2 * b:
                continue
            for word in adem_rewrite(a, b):
                assert degree(word) == a + b
                assert all(i >= 1 for i in word)
                assert len(word) in (1, 2)


def test_adem_rewrite_rejects_admissible_pairs():
    with pytest.raises(ValueError):
        adem_rewrite(2, 1)
    with pytest.raises(ValueError):
        adem_rewrite(0, 3)


def test_normalize_examples():
    assert normalize(Sq(1, 1)).is_zero()
    assert normalize(Sq(2, 2)) == Sq(3, 1)
    assert normalize(Sq(2, 1)) == Sq(2, 1)
    assert normalize(Sq(1, 1, 1)).is_zero()


def test_normalize_result_is_admissible():
    for word in all_compositions(9):
        assert normalize(AdemElement(frozenset({word}))).is_admissible()


@settings(max_examples=300)
@given(elements)
def test_normalize_idempotent(e):
    once = normalize(e)
    assert normalize(once) == once


@given(words)
def test_normalize_preserves_degree(word):
    for out in normalize(AdemElement(frozenset({word}))).words:
        assert degree(out) == degree(word)


def test_normalize_step_budget():
    with pytest.raises(StepBudgetExceeded):
        normalize(Sq(5, 9, 13, 7), step_budget=1)
    # the failed call must not poison later ones
    assert normalize(Sq(5, 9, 13, 7)).is_admissible()


def test_product_examples():
    assert product(Sq(1), Sq(1)).is_zero()
    assert product(Sq(1), Sq(2)) == Sq(3)
    e = AdemElement(frozenset({(2, 1), (3,)}))
    assert product(AdemElement.one(), e) == normalize(e)
    assert Sq(1) * Sq(2) == Sq(3)


def test_product_distributes_and_cancels():
    e = Sq(1) + Sq(1)
    assert e.is_zero()
    assert product(Sq(2) + Sq(2), Sq(1)).is_zero()


def test_admissible_basis_small():
    assert admissible_basis(0) == [()]
    assert admissible_basis(1) == [(1,)]
    assert admissible_basis(3) == [(3,), (2, 1)]
    assert admissible_basis(5) == [(5,), (4, 1)]


def test_admissible_basis_against_enumeration_oracle():
    for d in range(11):
        expected = sorted(
            (w for w in all_compositions(d) if is_admissible(w)),
            key=lambda w: (len(w), w),
        )
        assert admissible_basis(d) == expected


def test_element_string_forms():
    assert str(AdemElement.zero()) == "0"
    assert str(AdemElement.one()) == "1"
    assert str(Sq(3) + Sq(2, 1)) == "Sq3 + Sq2 Sq1"
    assert str(AdemElement.one() + Sq(1)) == "1 + Sq1"


def test_sq_factory_rejects_zero():
    with pytest.raises(ValueError):
        Sq(0)
    with pytest.raises(ValueError):
        Sq(2, 0, 1)
