from hypothesis import given

from dscsib.cardinal import ALEPH_0, ALEPH_OMEGA, ZERO, aleph, finite
from dscsib.dsc import (DID, ComponentClass, DscDescription, Family, disjoint_increasing_capacity,
                        increasing_analysis, isomorphic, lambda_profile, normalize)
from dscsib.ordertype import Fin, omega
from dscsib.syntax import parse
from strategies import descriptions


def test_normalize_examples():
    assert parse("C^2 + C^2") == normalize(DscDescription([ComponentClass(Fin(2), finite(2))]))
    assert parse("aleph0*C^1 + 3*C^1").classes == (ComponentClass(Fin(1), ALEPH_0),)
    dd = parse("Did + Did")
    assert dd.families == (DID, DID) and dd.classes == ()


def test_lambda_profile_examples():
    p = lambda_profile(parse("aleph3*C^1 + aleph2*C^2 + aleph1*C^3 + aleph1*w"))
    assert (p.lam(1), p.lam(2), p.lam(3), p.lam(4)) == (aleph(3), aleph(2), aleph(1), ZERO)
    assert p.infinite_classes == ((omega(), aleph(1)),)
    did = lambda_profile(parse("Did"))
    assert all(did.lam(n) == finite(1) for n in range(1, 40))
    five = lambda_profile(parse("5*C^1"))
    assert five.lam(1) == finite(5) and all(five.lam(n) == ZERO for n in range(2, 20))


def test_increasing_analysis_examples():
    a = increasing_analysis(parse("aleph0*w"))
    assert a.has_increasing and a.has_increasing_unbounded
    # every pair of copies of w embeds both ways, so no sequence is strict
    assert not a.has_strictly_increasing
    a = increasing_analysis(parse("aleph0*C^2"))
    assert a.has_increasing and not a.has_strictly_increasing and not a.has_increasing_unbounded
    a = increasing_analysis(parse("Did"))
    assert a.has_increasing and a.has_strictly_increasing and a.has_increasing_unbounded


def test_capacity_examples():
    assert disjoint_increasing_capacity(parse("aleph1*w + aleph0*(w+1)")) == aleph(1)
    assert disjoint_increasing_capacity(parse("3*C^2 + C^5")) == ZERO
    # sum over n of aleph_n copies of C^n, written with the ladder family
    assert disjoint_increasing_capacity(parse("Ladder(1,2)")) == ALEPH_OMEGA


def test_family_members():
    f = Family(2, 1)
    assert f.sizes(9) == [1, 3, 5, 7, 9] and f.contains(7) and not f.contains(4)
    assert f.without_trivial() == Family(2, 3)


@given(descriptions())
def test_increasing_implications(d):
    a = increasing_analysis(d)
    assert not a.has_increasing_unbounded or a.has_increasing
    assert not a.has_strictly_increasing or a.has_increasing


@given(descriptions(finite_only=True))
def test_profile_matches_explicit_count(d):
    p = lambda_profile(d)
    for c in d.classes:
        assert p.lam(c.type.n) == c.mult


@given(descriptions())
def test_isomorphic_reflexive_and_split(d):
    assert isomorphic(d, d)
    n = d.nontrivial()
    assert n.trivial_count().is_zero
    if not d.families:
        trivial = DscDescription([c for c in d.classes if c.is_trivial])
        assert normalize(n + trivial) == d
