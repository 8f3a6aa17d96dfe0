import pytest
from hypothesis import given

from dscsib.dsc import isomorphic, lambda_profile
from dscsib.embed import equimorphic
from dscsib.errors import AbsentTarget, ConditionFails, FiniteJ, NoStrictFamily, NotBounded
from dscsib.ordertype import EtaTail
from dscsib.syntax import parse
from dscsib.witness import (PeriodicSet, bounded_family, component_swap_family, evens, naturals,
                            odds, padding_family, qj_family, verify_family)
from strategies import descriptions


def test_padding():
    out = padding_family(parse("aleph0*w"), 3)
    assert out == [parse(f"aleph0*w + {m}*C^1") for m in (1, 2, 3)]
    ex1 = parse("aleph1*w + aleph0*(w+1) + aleph1*C^1")
    assert padding_family(ex1, 2) == [parse("aleph1*w + aleph0*(w+1) + C^1"),
                                      parse("aleph1*w + aleph0*(w+1) + 2*C^1")]
    with pytest.raises(ConditionFails):
        padding_family(parse("2*C^3"), 1)


def test_bounded():
    assert bounded_family(parse("aleph0*C^2"), [3]) == parse("3*C^1 + aleph0*C^2")
    d = parse("aleph0*C^2 + C^7")
    assert bounded_family(d, [0]) == d
    with pytest.raises(NotBounded):
        bounded_family(parse("aleph0*w"), [1])


def test_qj():
    ev = qj_family(parse("Did"), evens(2))
    od = qj_family(parse("Did"), odds())
    assert ev == parse("Fam(2,2)") and od == parse("Fam(2,1)")
    assert not isomorphic(ev, od)
    assert lambda_profile(ev).lam(2) != lambda_profile(od).lam(2)
    with pytest.raises(NoStrictFamily):
        qj_family(parse("aleph0*C^2"), naturals())
    with pytest.raises(FiniteJ):
        qj_family(parse("Did"), PeriodicSet(frozenset({1, 2}), 3, 1, frozenset()))


def test_qj_keeps_infinite_part():
    d = parse("Did + aleph0*w")
    out = qj_family(d, evens(4))
    assert equimorphic(out, d) and any(c.type == parse("w").classes[0].type for c in out.classes)


def test_periodic_sets():
    s = PeriodicSet(frozenset({1}), 4, 3, frozenset({0, 2}))
    # residues are taken of n itself, not of n - start
    assert s.members(12) == [1, 5, 6, 8, 9, 11, 12]
    assert evens(2).first_difference(odds()) == 1


def test_component_swap():
    assert component_swap_family(parse("eta + C^2"), EtaTail(0), 2) == \
        [parse("eta + C^2"), parse("(eta+1) + C^2")]
    assert component_swap_family(parse("2*eta"), EtaTail(0), 3) == \
        [parse("2*eta"), parse("2*(eta+1)"), parse("2*(eta+2)")]
    with pytest.raises(AbsentTarget):
        component_swap_family(parse("C^2"), EtaTail(0), 1)


def test_verify_family_rejects_non_siblings():
    d = parse("aleph0*w")
    assert verify_family(d, padding_family(d, 2))
    assert not verify_family(d, [parse("w")])
    assert not verify_family(d, [d, d])


@given(descriptions())
def test_padding_output_is_sound_whenever_defined(d):
    try:
        out = padding_family(d, 3)
    except ConditionFails:
        return
    for x in out:
        assert equimorphic(x, d)
