"""Property suites runnable from the CLI (``dscsib verify <suite>``)."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .cardinal import ONE
from .classify import classify_countable, classify_general, consistent, replay_certificate
from .dsc import (DID, ComponentClass, DscDescription, disjoint_increasing_capacity,
                  from_chain_sizes, increasing_analysis)
from .embed import dsc_embeds, embeds, equimorphic, validate_assignment
from .errors import DscError
from .finite_oracle import (FinitePoset, all_chain_multisets, brute_embeds,
                            check_mutual_embed_implies_iso)
from .generate import random_description
from .ordertype import Fin


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, what) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(str(what))


_C1 = DscDescription((ComponentClass(Fin(1), ONE),))
_DID = DscDescription(families=(DID,))


def oracle_equivalence(cap: int = 7, **_) -> SuiteReport:
    rep = SuiteReport("oracle-equivalence")
    shapes = all_chain_multisets(cap)
    posets = {s: FinitePoset(s, cap=cap) for s in shapes}
    descs = {s: from_chain_sizes(s) for s in shapes}
    for s in shapes:
        for t in shapes:
            rep.check(embeds(descs[s], descs[t]) == brute_embeds(posets[s], posets[t])[0],
                      f"{s} -> {t}")
    return rep


def finite_uniqueness(cap: int = 7, **_) -> SuiteReport:
    r = check_mutual_embed_implies_iso(cap)
    rep = SuiteReport("finite-uniqueness", r.pairs)
    rep.failures = [f"{p} ~ {q}" for p, q in r.counterexamples]
    return rep


def lemma_biconditionals(samples: int = 250, seed: int = 0, **_) -> SuiteReport:
    rep = SuiteReport("lemma-biconditionals")
    rng = random.Random(seed)
    for _ in range(samples):
        d = random_description(rng)
        lam1 = d.trivial_count()
        n = d.nontrivial()
        ana = increasing_analysis(d)
        if lam1.is_finite:
            rep.check(embeds(d + _C1, d) == ana.has_increasing, f"Infsibfinitetrivial: {d}")
        if not lam1.is_zero:
            rep.check(embeds(d, n) == (disjoint_increasing_capacity(n) >= lam1),
                      f"Pairwisedisincreasing: {d}")
            if not increasing_analysis(n).has_increasing:
                rep.check(not embeds(d, n), f"Noembeddingtrivial: {d}")
        c = random_description(rng, countable=True)
        rep.check(equimorphic(c + _DID, c) == increasing_analysis(c).has_increasing_unbounded,
                  f"Increasingunbounded: {c}")
    return rep


def quasi_order(samples: int = 200, seed: int = 0, **_) -> SuiteReport:
    rep = SuiteReport("quasi-order")
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c = (random_description(rng, max_classes=3) for _ in range(3))
        ra = dsc_embeds(a, a)
        rep.check(ra.embeds and validate_assignment(a, a, ra.assignment), f"reflexive: {a}")
        if embeds(a, b) and embeds(b, c):
            rep.check(embeds(a, c), f"transitive: {a} / {b} / {c}")
        r = dsc_embeds(a, b)
        if r.embeds:
            rep.check(validate_assignment(a, b, r.assignment), f"assignment: {a} -> {b}")
    return rep


def classifier(samples: int = 500, seed: int = 0, **_) -> SuiteReport:
    rep = SuiteReport("classifier")
    rng = random.Random(seed)
    for _ in range(samples):
        d = random_description(rng)
        g = classify_general(d)
        rep.check(g.is_exact is False or replay_certificate(d, g), f"general replay: {d}")
        if d.is_countable:
            c = classify_countable(d)
            rep.check(not c.is_exact or replay_certificate(d, c), f"countable replay: {d}")
            rep.check(consistent(c, g), f"consistency: {d}")
    return rep


SUITES: Dict[str, Callable[..., SuiteReport]] = {
    "oracle-equivalence": oracle_equivalence,
    "finite-uniqueness": finite_uniqueness,
    "lemma-biconditionals": lemma_biconditionals,
    "quasi-order": quasi_order,
    "classifier": classifier,
}


def run_suite(name: str, **kw) -> List[SuiteReport]:
    if name == "all":
        return [fn(**kw) for fn in SUITES.values()]
    if name not in SUITES:
        raise DscError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return [SUITES[name](**kw)]
