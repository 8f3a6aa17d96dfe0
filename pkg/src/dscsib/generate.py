"""Random DSC descriptions for corpus runs and the ``verify`` suites."""
from __future__ import annotations

import random
from typing import Optional

from .cardinal import ALEPH_0, ALEPH_OMEGA, aleph, finite
from .declarations import Declarations
from .dsc import ComponentClass, DscDescription, Family, normalize
from .ordertype import Declared, EtaTail, Fin, Ord, Rev, Sib

SAMPLE_DECLS = Declarations([
    Declared("r1", ALEPH_0, Sib.ONE),
    Declared("r2", ALEPH_0, Sib.ONE),
    Declared("lo", ALEPH_0, Sib.ONE, embeds_into=frozenset({"hi"})),
    Declared("hi", ALEPH_0, Sib.ONE),
    Declared("a0", ALEPH_0, Sib.ALEPH0),
    Declared("big", aleph(1), Sib.ONE),
])


def random_type(rng: random.Random, finite_only=False, countable=False, decls=SAMPLE_DECLS):
    roll = rng.random()
    if finite_only or roll < 0.55:
        return Fin(rng.randint(1, 6))
    if roll < 0.75:
        terms = []
        for e in sorted(rng.sample(range(1, 4), rng.randint(1, 2)), reverse=True):
            terms.append((e, rng.randint(1, 2)))
        return Ord(tuple(terms), rng.randint(0, 2))
    if roll < 0.82:
        return Rev(Ord(((1, 1),), rng.randint(0, 1)))
    if roll < 0.88:
        return EtaTail(rng.randint(0, 2))
    names = [n for n in decls if not countable or decls[n].size == ALEPH_0]
    return decls[rng.choice(names)]


def random_mult(rng: random.Random, countable=False, finite_only=False):
    roll = rng.random()
    if finite_only or roll < 0.55:
        return finite(rng.randint(1, 3))
    if countable or roll < 0.8:
        return ALEPH_0
    if roll < 0.95:
        return aleph(rng.randint(1, 3))
    return ALEPH_OMEGA


def random_description(rng: random.Random, *, countable=False, finite_only=False,
                       max_classes=4, family_rate=0.15,
                       decls: Optional[Declarations] = None) -> DscDescription:
    decls = decls if decls is not None else SAMPLE_DECLS
    classes = [ComponentClass(random_type(rng, finite_only, countable, decls),
                              random_mult(rng, countable, finite_only))
               for _ in range(rng.randint(0, max_classes))]
    families = []
    if not finite_only and rng.random() < family_rate:
        ladder = not countable and rng.random() < 0.2
        families.append(Family(rng.randint(1, 3), rng.randint(1, 4), ladder))
    return normalize(DscDescription(classes, families))


def corpus(n: int, seed: int = 0, **kw):
    rng = random.Random(seed)
    return [random_description(rng, **kw) for _ in range(n)]
