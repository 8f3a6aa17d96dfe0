import pytest
from hypothesis import given

from dscsib.classify import (BOUNDS_ONLY, COUNTABLE_BOUNDED, GENERAL_NO_INCREASING,
                             GENERAL_PAIRWISE_1, GENERAL_PAIRWISE_2, INFINITE_SIBLING_COMPONENT,
                             PAIRWISE_DISJOINT_INCREASING, RULE_STATEMENTS, RULES,
                             SIB_INCREASING_UNBOUNDED, STRICTLY_INC, classify,
                             classify_countable, classify_general, consistent,
                             replay_certificate)
from dscsib.errors import NotCountable
from dscsib.generate import SAMPLE_DECLS
from dscsib.ordertype import Sib, SibRange
from dscsib.syntax import parse
from strategies import descriptions


def P(text):
    return parse(text, SAMPLE_DECLS)


@pytest.mark.parametrize("text,count,rule", [
    ("aleph0*w", Sib.CONTINUUM, SIB_INCREASING_UNBOUNDED),
    ("Did", Sib.CONTINUUM, STRICTLY_INC),
    ("aleph0*C^2 + C^7", Sib.ALEPH0, COUNTABLE_BOUNDED),
    ("w + aleph0*C^2", SibRange(Sib.ALEPH0, Sib.CONTINUUM), BOUNDS_ONLY),
    ("eta + C^2", Sib.CONTINUUM, INFINITE_SIBLING_COMPONENT),
])
def test_countable_examples(text, count, rule):
    r = classify_countable(P(text))
    assert (r.count, r.rule) == (count, rule)
    assert replay_certificate(P(text), r)


def test_bounded_certificate_names_the_bound():
    r = classify_countable(P("aleph0*C^2 + C^7"))
    assert r.certificate.witness["bound"] == 8


@pytest.mark.parametrize("text,count,rule", [
    ("aleph1*C^1 + aleph0*C^3", Sib.INFINITE, GENERAL_PAIRWISE_1),
    ("aleph3*C^1 + aleph2*C^2 + aleph1*C^3 + aleph1*w", Sib.INFINITE, GENERAL_PAIRWISE_2),
    ("aleph1*C^1 + aleph0*C^2 + X(r1) + X(r2)", Sib.ONE, GENERAL_NO_INCREASING),
    ("aleph1*w + aleph0*(w+1) + aleph1*C^1", Sib.INFINITE, PAIRWISE_DISJOINT_INCREASING),
])
def test_general_examples(text, count, rule):
    r = classify_general(P(text))
    assert (r.count, r.rule) == (count, rule)
    assert replay_certificate(P(text), r)


def test_general_pairwise_witness_pair():
    w = classify_general(P("aleph1*C^1 + aleph0*C^3")).certificate.witness
    assert (w["i"], w["j"]) == (2, 3)


def test_capacity_witness():
    w = classify_general(P("aleph1*w + aleph0*(w+1) + aleph1*C^1")).certificate.witness
    assert w["capacity"] == "aleph1"


def test_countable_mode_rejects_uncountable():
    with pytest.raises(NotCountable):
        classify(P("aleph1*C^1"), "countable")


def test_every_rule_has_a_statement():
    assert set(RULES) <= set(RULE_STATEMENTS)


def test_tampered_certificate_fails_replay():
    d = P("aleph1*C^1 + aleph0*C^3")
    r = classify_general(d)
    r.certificate.witness["i"], r.certificate.witness["j"] = 3, 2
    assert not replay_certificate(d, r)


@given(descriptions())
def test_general_totality_and_replay(d):
    r = classify_general(d)
    assert r.count in (Sib.ONE, Sib.INFINITE) or isinstance(r.count, SibRange)
    if r.is_exact:
        assert replay_certificate(d, r)


@given(descriptions(countable=True))
def test_countable_consistency(d):
    c, g = classify_countable(d), classify_general(d)
    assert c.count in (Sib.ONE, Sib.ALEPH0, Sib.CONTINUUM) or (
        isinstance(c.count, SibRange) and c.count.lo >= Sib.ALEPH0 and c.count.hi <= Sib.CONTINUUM)
    assert consistent(c, g)
    if c.is_exact:
        assert replay_certificate(d, c)
