"""Hypothesis strategies for order types, cardinals and DSC descriptions."""
from hypothesis import strategies as st

from dscsib.cardinal import ALEPH_0, ALEPH_OMEGA, aleph, finite
from dscsib.dsc import ComponentClass, DscDescription, Family, normalize
from dscsib.generate import SAMPLE_DECLS
from dscsib.ordertype import EtaTail, Fin, Ord, Rev

fin_types = st.builds(Fin, st.integers(1, 6))

ordinals = st.builds(
    lambda exps, coeffs, tail: Ord(tuple(zip(sorted(exps, reverse=True), coeffs)), tail),
    st.sets(st.integers(1, 3), min_size=1, max_size=2),
    st.lists(st.integers(1, 2), min_size=2, max_size=2),
    st.integers(0, 2),
)


def order_types(countable=False):
    names = [n for n in SAMPLE_DECLS if not countable or SAMPLE_DECLS[n].size == ALEPH_0]
    return st.one_of(
        fin_types, fin_types, ordinals,
        st.builds(lambda t: Rev(Ord(((1, 1),), t)), st.integers(0, 1)),
        st.builds(EtaTail, st.integers(0, 2)),
        st.sampled_from([SAMPLE_DECLS[n] for n in names]),
    )


def multiplicities(countable=False):
    small = st.builds(finite, st.integers(1, 3))
    if countable:
        return st.one_of(small, st.just(ALEPH_0))
    return st.one_of(small, st.just(ALEPH_0), st.builds(aleph, st.integers(1, 3)),
                     st.just(ALEPH_OMEGA))


@st.composite
def descriptions(draw, countable=False, finite_only=False, max_classes=4, families=True):
    types = fin_types if finite_only else order_types(countable)
    mults = st.builds(finite, st.integers(1, 3)) if finite_only else multiplicities(countable)
    classes = draw(st.lists(st.builds(ComponentClass, types, mults), max_size=max_classes))
    fams = []
    if families and not finite_only and draw(st.integers(0, 5)) == 0:
        ladder = not countable and draw(st.booleans())
        fams.append(Family(draw(st.integers(1, 3)), draw(st.integers(1, 4)), ladder))
    return normalize(DscDescription(classes, fams))


finite_multisets = st.lists(st.integers(1, 4), min_size=0, max_size=3).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


@st.composite
def without_increasing(draw, max_classes=4):
    """Descriptions with a non-empty trivial part and no infinite increasing sequence:
    non-trivial classes all have finite multiplicity and there are no families."""
    nontrivial = order_types().filter(lambda t: t != Fin(1))
    classes = draw(st.lists(st.builds(ComponentClass, nontrivial,
                                      st.builds(finite, st.integers(1, 3))),
                            max_size=max_classes))
    classes.append(ComponentClass(Fin(1), draw(multiplicities())))
    return normalize(DscDescription(classes))
