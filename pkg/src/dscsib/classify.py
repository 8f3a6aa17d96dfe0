"""Sibling-number classification with certificates.

Two first-match decision trees: one for countable descriptions (exact value
1, aleph_0 or 2^aleph_0) and one for arbitrary descriptions (1 or infinite).
Every verdict names the rule it rests on and carries the data that makes the
rule's hypotheses true, so it can be re-checked by :func:`replay_certificate`.
Where the countable case analysis has no applicable exact rule the result is
a proven range, never a guess.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cardinal import ALEPH_0, ONE as CARD_ONE
from .dsc import (DID, ComponentClass, DscDescription, Family, disjoint_increasing_capacity,
                  increasing_analysis, lambda_profile, normalize)
from .embed import dsc_embeds, equimorphic
from .errors import NotCountable
from .ordertype import Fin, Sib, SibCount, SibRange, chain_sib, is_finite_type

FINITE_NONTRIVIAL = "FinitenontrivialD"
INFINITE_SIBLING_COMPONENT = "Infinitesiblingcomponent"
INCREASING_SEQUENCE = "Increasingsequence"
COUNTABLE_TRIVIAL = "Countabletrivial"
FINITE_ALEPH0 = "Finitealeph0"
COUNTABLE_BOUNDED = "Countablebounded"
STRICTLY_INC = "Strictlyinc"
SIB_INCREASING_UNBOUNDED = "Sibincreasingunbounded"
PAIRWISE_DISJOINT_INCREASING = "Pairwisedisincreasing"
GENERAL_PAIRWISE_1 = "Generalpairwisedisincreasing-1"
GENERAL_PAIRWISE_2 = "Generalpairwisedisincreasing-2"
INF_SIB_FINITE_TRIVIAL = "Infsibfinitetrivial"
NO_INCREASING = "Noincreasing"
GENERAL_NO_INCREASING = "Generalnoincreasing"
BOUNDS_ONLY = "BoundsOnly"

RULES = (FINITE_NONTRIVIAL, INFINITE_SIBLING_COMPONENT, INCREASING_SEQUENCE, COUNTABLE_TRIVIAL,
         FINITE_ALEPH0, COUNTABLE_BOUNDED, STRICTLY_INC, SIB_INCREASING_UNBOUNDED,
         PAIRWISE_DISJOINT_INCREASING, GENERAL_PAIRWISE_1, GENERAL_PAIRWISE_2,
         INF_SIB_FINITE_TRIVIAL, NO_INCREASING, GENERAL_NO_INCREASING, BOUNDS_ONLY)

# Formal statement of each rule, shown in reports next to the rule name.
RULE_STATEMENTS = {
    FINITE_NONTRIVIAL: "finitely many non-trivial components, each with Sib = 1 => Sib(D) = 1",
    INFINITE_SIBLING_COMPONENT: "Sib(D) >= max_i Sib(C_i)",
    INCREASING_SEQUENCE: "|T| <= aleph0 and an infinite increasing sequence of non-trivial "
                         "components => Sib(D) = inf",
    COUNTABLE_TRIVIAL: "infinitely many non-trivial countable components and |T| <= aleph0 "
                       "=> Sib(D) = inf",
    FINITE_ALEPH0: "D countable, k > 0 components with Sib = aleph0, finitely many other "
                   "non-trivial components with Sib = 1 => Sib(D) = aleph0",
    COUNTABLE_BOUNDED: "D countable, bounded, infinitely many non-trivial components "
                       "=> Sib(D) = aleph0",
    STRICTLY_INC: "D countable, a sibling of D has a strictly increasing sequence of "
                  "components => Sib(D) = 2^aleph0",
    SIB_INCREASING_UNBOUNDED: "D countable with an increasing unbounded sequence of components "
                              "=> D + D_id ~ D and Sib(D) = 2^aleph0",
    PAIRWISE_DISJOINT_INCREASING: "|T| = lambda > 0 and lambda pairwise disjoint increasing "
                                  "sequences of non-trivial components <=> D embeds in N; "
                                  "then Sib(D) = inf",
    GENERAL_PAIRWISE_1: "1 <= i < j <= m, lambda_i <= lambda_j, lambda_j infinite "
                        "=> Sib(D) = inf",
    GENERAL_PAIRWISE_2: "lambda_1 > ... > lambda_m >= aleph0, lambda_n finite for n > m, "
                        "Q has an increasing sequence => Sib(D) = inf",
    INF_SIB_FINITE_TRIVIAL: "finitely many trivial components: D + C^1 embeds in D <=> "
                            "increasing sequence of non-trivial components; then Sib(D) = inf",
    NO_INCREASING: "no increasing sequence of non-trivial components, each component "
                   "Sib = 1 => Sib(D) = 1",
    GENERAL_NO_INCREASING: "lambda_1 > ... > lambda_m >= aleph0, lambda_n finite for n > m, "
                           "Q without increasing sequence, each component Sib = 1 "
                           "=> Sib(D) = 1",
    BOUNDS_ONLY: "no proven exact rule applies; only the stated bounds are established",
}


@dataclass(frozen=True)
class Certificate:
    rule: str
    witness: dict = field(default_factory=dict, hash=False)
    note: Optional[str] = None

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")

    @property
    def statement(self) -> str:
        return RULE_STATEMENTS[self.rule]


@dataclass(frozen=True)
class SibResult:
    count: SibCount
    certificate: Certificate

    def __post_init__(self):
        if (self.certificate.rule == BOUNDS_ONLY) != isinstance(self.count, SibRange):
            raise ValueError("BoundsOnly certificates go with ranges, and only with ranges")

    @property
    def rule(self) -> str:
        return self.certificate.rule

    @property
    def is_exact(self) -> bool:
        return not isinstance(self.count, SibRange)


def _sib_of(c) -> Sib:
    return chain_sib(c.type) if isinstance(c, ComponentClass) else Sib.ONE


def _nontrivial_terms(d: DscDescription):
    return [c for c in d.classes if not c.is_trivial] + list(d.families)


def _increasing_source(d: DscDescription) -> str:
    for f in d.families:
        return str(f)
    for c in d.classes:
        if not c.is_trivial and c.mult.is_infinite:
            return str(c)
    return ""


def _result(count, rule, note=None, **witness) -> SibResult:
    return SibResult(count, Certificate(rule, witness, note))


def classify_countable(d: DscDescription) -> SibResult:
    """Exact sibling number of a countable DSC, or a proven range."""
    d = normalize(d)
    if not d.is_countable:
        raise NotCountable(f"{d} is not countable")
    terms = d.terms
    for c in d.classes:
        if chain_sib(c.type) == Sib.CONTINUUM:
            return _result(Sib.CONTINUUM, INFINITE_SIBLING_COMPONENT, component=str(c.type),
                           component_sib=str(Sib.CONTINUUM))
    nontrivial = d.nontrivial_mult()
    if nontrivial.is_finite:
        top = max((_sib_of(t) for t in terms), default=Sib.ONE)
        if top == Sib.ONE:
            return _result(Sib.ONE, FINITE_NONTRIVIAL, nontrivial_count=nontrivial.index)
        if top == Sib.ALEPH0:
            comps = [str(c.type) for c in d.classes if chain_sib(c.type) == Sib.ALEPH0]
            return _result(Sib.ALEPH0, FINITE_ALEPH0, aleph0_components=comps,
                           nontrivial_count=nontrivial.index)
    ana = increasing_analysis(d)
    if not d.families and all(is_finite_type(c.type) for c in d.classes):
        sizes = [c.type.n for c in d.classes]
        n = max(c.type.n for c in d.classes if c.mult.is_infinite and not c.is_trivial)
        return _result(Sib.ALEPH0, COUNTABLE_BOUNDED, bound=max(sizes) + 1, n=n)
    if ana.has_strictly_increasing:
        return _result(Sib.CONTINUUM, STRICTLY_INC, family=str(d.families[0]))
    if ana.has_increasing_unbounded:
        return _result(Sib.CONTINUUM, SIB_INCREASING_UNBOUNDED, sequence=_increasing_source(d))
    note = None
    if any(chain_sib(c.type) == Sib.ALEPH0 for c in d.classes):
        note = "conjectured exact value aleph0 (Generalaleph0, unproven)"
    return _result(SibRange(Sib.ALEPH0, Sib.CONTINUUM), BOUNDS_ONLY, note,
                   lower=COUNTABLE_TRIVIAL, upper="ThomasseP",
                   nontrivial_count=str(nontrivial))


def _tail_above(d: DscDescription, m: int) -> DscDescription:
    """Q: the components of size greater than m."""
    classes = [c for c in d.classes if not is_finite_type(c.type) or c.type.n > m]
    fams = []
    for f in d.families:
        b = f.b
        while b <= m:
            b += f.a
        fams.append(Family(f.a, b, f.ladder))
    return normalize(DscDescription(classes, fams))


def _lambda_pair(prof, m: Optional[int]):
    top = m if m is not None else prof.horizon + 2 * prof.period + 1
    if top < 2:
        return None
    lam = {n: prof.lam(n) for n in range(1, top + 1)}
    for i in range(1, top + 1):
        for j in range(i + 1, top + 1):
            if lam[j].is_infinite and lam[i] <= lam[j]:
                return i, j, lam[i], lam[j]
    return None


def classify_general(d: DscDescription) -> SibResult:
    """Sibling number of a DSC of any cardinality: 1 or infinite."""
    d = normalize(d)
    for c in d.classes:
        s = chain_sib(c.type)
        if s != Sib.ONE:
            w = dict(component=str(c.type), component_sib=str(s))
            if d.is_countable:
                w["countable_refinement"] = str(classify_countable(d).count)
            return _result(Sib.INFINITE, INFINITE_SIBLING_COMPONENT, **w)
    nontrivial = d.nontrivial_mult()
    if nontrivial.is_finite:
        return _result(Sib.ONE, FINITE_NONTRIVIAL, nontrivial_count=nontrivial.index)
    prof = lambda_profile(d)
    m = prof.largest_infinite_size()
    pair = _lambda_pair(prof, m)
    if pair is not None:
        i, j, li, lj = pair
        return _result(Sib.INFINITE, GENERAL_PAIRWISE_1, i=i, j=j,
                       lambda_i=str(li), lambda_j=str(lj))
    lam1 = prof.lam(1)
    cap = disjoint_increasing_capacity(d.nontrivial())
    if not lam1.is_zero and cap >= lam1:
        return _result(Sib.INFINITE, PAIRWISE_DISJOINT_INCREASING,
                       capacity=str(cap), lambda_1=str(lam1))
    ana = increasing_analysis(d)
    if lam1.is_finite and ana.has_increasing:
        rule = INCREASING_SEQUENCE if lam1.is_zero else INF_SIB_FINITE_TRIVIAL
        return _result(Sib.INFINITE, rule, lambda_1=str(lam1), sequence=_increasing_source(d))
    if m is not None and m >= 1:
        lams = [prof.lam(n) for n in range(1, m + 1)]
        if all(a > b for a, b in zip(lams, lams[1:])) and lams[-1] >= ALEPH_0:
            q = _tail_above(d, m)
            w = dict(m=m, lambdas=[str(x) for x in lams], Q=str(q))
            if increasing_analysis(q).has_increasing:
                return _result(Sib.INFINITE, GENERAL_PAIRWISE_2, sequence=_increasing_source(q), **w)
            return _result(Sib.ONE, GENERAL_NO_INCREASING, **w)
    if lam1.is_zero and not ana.has_increasing:
        return _result(Sib.ONE, NO_INCREASING)
    return _result(SibRange(Sib.ONE, Sib.INFINITE), BOUNDS_ONLY, lower="1", upper="inf")


def classify(d: DscDescription, mode: str = "general") -> SibResult:
    if mode == "countable":
        return classify_countable(d)
    if mode == "general":
        return classify_general(d)
    raise ValueError(f"unknown mode {mode!r}")


def consistent(countable: SibResult, general: SibResult) -> bool:
    """Whether the two classifiers agree on a countable input."""
    c, g = countable.count, general.count
    if g == Sib.ONE:
        return c == Sib.ONE
    if g == Sib.INFINITE:
        if isinstance(c, SibRange):
            return c.lo >= Sib.ALEPH0
        return c in (Sib.ALEPH0, Sib.CONTINUUM)
    if isinstance(g, SibRange):
        if isinstance(c, SibRange):
            return g.lo <= c.lo and c.hi <= g.hi
        return g.lo <= c <= g.hi
    return False


def replay_certificate(d: DscDescription, result: SibResult) -> bool:
    """Independently re-establish the hypotheses named by a certificate.

    Conditions are recomputed from scratch; where a rule is a biconditional
    with an embedding statement, the embedding side is re-decided by the
    Hall engine as a second route.
    """
    d = normalize(d)
    rule, w = result.rule, result.certificate.witness
    prof = lambda_profile(d)
    ana = increasing_analysis(d)
    sibs = [_sib_of(t) for t in d.terms]
    lam1 = prof.lam(1)
    if rule == BOUNDS_ONLY:
        return isinstance(result.count, SibRange)
    if rule == INFINITE_SIBLING_COMPONENT:
        hit = [c for c in d.classes if str(c.type) == w.get("component")]
        return bool(hit) and chain_sib(hit[0].type) != Sib.ONE and result.count >= chain_sib(hit[0].type)
    if rule == FINITE_NONTRIVIAL:
        return d.nontrivial_mult().is_finite and all(s == Sib.ONE for s in sibs)
    if rule == FINITE_ALEPH0:
        return (d.is_countable and d.nontrivial_mult().is_finite and Sib.ALEPH0 in sibs
                and all(s in (Sib.ONE, Sib.ALEPH0) for s in sibs))
    if rule == COUNTABLE_BOUNDED:
        return (d.is_countable and d.nontrivial_mult().is_infinite and not d.families
                and all(is_finite_type(c.type) and c.type.n < w["bound"] for c in d.classes))
    if rule == STRICTLY_INC:
        return d.is_countable and ana.has_strictly_increasing and equimorphic(d + DscDescription(families=(DID,)), d)
    if rule == SIB_INCREASING_UNBOUNDED:
        return d.is_countable and ana.has_increasing_unbounded and equimorphic(d + DscDescription(families=(DID,)), d)
    if rule == GENERAL_PAIRWISE_1:
        i, j = w["i"], w["j"]
        m = prof.largest_infinite_size()
        li, lj = prof.lam(i), prof.lam(j)
        return (1 <= i < j and (m is None or j <= m) and lj.is_infinite and li <= lj
                and all(s == Sib.ONE for s in sibs))
    if rule == PAIRWISE_DISJOINT_INCREASING:
        cap = disjoint_increasing_capacity(d.nontrivial())
        return (not lam1.is_zero and cap >= lam1 and str(cap) == w["capacity"]
                and dsc_embeds(d, d.nontrivial()).embeds)
    if rule in (INF_SIB_FINITE_TRIVIAL, INCREASING_SEQUENCE):
        one = DscDescription((ComponentClass(Fin(1), CARD_ONE),))
        return lam1.is_finite and ana.has_increasing and dsc_embeds(d + one, d).embeds
    if rule in (GENERAL_PAIRWISE_2, GENERAL_NO_INCREASING):
        m = w["m"]
        lams = [prof.lam(n) for n in range(1, m + 1)]
        if prof.largest_infinite_size() != m or not lams[-1].is_infinite:
            return False
        if not all(a > b for a, b in zip(lams, lams[1:])):
            return False
        q_inc = increasing_analysis(_tail_above(d, m)).has_increasing
        return q_inc if rule == GENERAL_PAIRWISE_2 else (not q_inc and all(s == Sib.ONE for s in sibs))
    if rule == NO_INCREASING:
        return lam1.is_zero and not ana.has_increasing and all(s == Sib.ONE for s in sibs)
    return False
