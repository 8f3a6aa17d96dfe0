import pytest
from hypothesis import given

from dscsib.cardinal import ALEPH_0, aleph, finite
from dscsib.errors import SingleSibling, Unsupported
from dscsib.finite_oracle import FinitePoset, brute_embeds
from dscsib.ordertype import (Declared, EtaTail, Fin, Ord, Rev, Sib, chain_embeds, chain_sib,
                              omega, ord_le, ordinal_from_cnf, sibling_variants, size)
from strategies import ordinals, order_types


def test_size():
    assert size(Fin(4)) == finite(4)
    assert size(omega()) == ALEPH_0
    assert size(EtaTail(0)) == ALEPH_0
    assert size(Declared("big", aleph(1), Sib.ONE)) == aleph(1)


@pytest.mark.parametrize("s,t,expected", [
    (Fin(3), omega(), True),
    (omega(1), omega(), False),
    (omega(), EtaTail(0), True),
    (Fin(5), Fin(4), False),
    (omega(), Rev(omega()), False),
    (Rev(omega()), EtaTail(2), True),
    (Fin(3), Rev(omega()), True),
    (EtaTail(2), EtaTail(0), True),
])
def test_chain_embeds(s, t, expected):
    assert chain_embeds(s, t) is expected


def test_cnf_ordering_against_truncation_oracle():
    # an ordinal below w^w embeds in w+k iff it is finite or w+j with j <= k;
    # check the finite part by mapping w+j onto the chain j+1 of its top elements.
    for j in range(4):
        for k in range(4):
            assert chain_embeds(omega(j), omega(k)) == (j <= k)
            p, q = FinitePoset((j + 1,)), FinitePoset((k + 1,))
            assert brute_embeds(p, q)[0] == (j <= k)


def test_ordinal_addition_normalizes():
    w = ((1, 1),)
    # 1 + w = w, w + w = w*2, w*2 + w^2 = w^2
    assert ordinal_from_cnf([(0, 1), (1, 1)]) == Ord(w, 0)
    assert ordinal_from_cnf([(1, 1), (1, 1)]) == Ord(((1, 2),), 0)
    assert ordinal_from_cnf([(1, 2), (2, 1)]) == Ord(((2, 1),), 0)
    assert ordinal_from_cnf([(0, 3)]) == Fin(3)


def test_chain_sib_examples():
    assert chain_sib(Fin(5)) == Sib.ONE
    assert chain_sib(EtaTail(0)) == Sib.CONTINUUM
    assert chain_sib(Ord(((2, 1), (1, 2)), 0)) == Sib.ONE


def test_sibling_variants():
    assert sibling_variants(EtaTail(0), 3) == [EtaTail(0), EtaTail(1), EtaTail(2)]
    assert sibling_variants(EtaTail(1), 1) == [EtaTail(0)]
    with pytest.raises(SingleSibling):
        sibling_variants(Fin(2), 1)
    with pytest.raises(Unsupported):
        sibling_variants(Declared("a0", ALEPH_0, Sib.ALEPH0), 2)


@given(order_types())
def test_embeds_reflexive(t):
    assert chain_embeds(t, t)


@given(order_types(), order_types(), order_types())
def test_embeds_transitive(a, b, c):
    if chain_embeds(a, b) and chain_embeds(b, c):
        assert chain_embeds(a, c)


@given(ordinals, ordinals)
def test_ordinal_antisymmetry(a, b):
    if chain_embeds(a, b) and chain_embeds(b, a):
        assert a == b
    assert ord_le(a, b) or ord_le(b, a)


@given(order_types(), order_types())
def test_embedding_respects_size(a, b):
    if chain_embeds(a, b):
        assert size(a) <= size(b)
