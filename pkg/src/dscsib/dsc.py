"""Finitely presented direct sums of chains.

A description is a finite list of component classes (an order type with a
cardinal multiplicity) plus affine families of finite chains. A family
``Family(a, b)`` stands for one chain of each size ``a*n + b`` (n >= 0); a
ladder family ``Family(a, b, ladder=True)`` has aleph_s copies of the member
of size s instead of one.
"""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import cardinal as card
from .cardinal import ALEPH_0, ALEPH_OMEGA, ONE, ZERO, Cardinal, aleph, finite
from .ordertype import Fin, OrderType, chain_sib, is_finite_type, size, type_key


@dataclass(frozen=True)
class ComponentClass:
    type: OrderType
    mult: Cardinal = ONE

    def __post_init__(self):
        object.__setattr__(self, "mult", card.as_cardinal(self.mult))
        if self.mult.is_zero:
            raise ValueError(f"component class {self.type} with zero multiplicity")

    @property
    def is_trivial(self) -> bool:
        return self.type == Fin(1)

    def __str__(self):
        return f"{self.mult}*{self.type}"


@dataclass(frozen=True)
class Family:
    a: int
    b: int
    ladder: bool = False

    def __post_init__(self):
        if self.a < 0 or self.b < 1:
            raise ValueError(f"bad family parameters ({self.a}, {self.b})")

    def sizes(self, upto: int) -> List[int]:
        if self.a == 0:
            return [self.b] if self.b <= upto else []
        return list(range(self.b, upto + 1, self.a))

    def contains(self, n: int) -> bool:
        if n < self.b:
            return False
        return n == self.b if self.a == 0 else (n - self.b) % self.a == 0

    def member_mult(self, s: int) -> Cardinal:
        return aleph(s) if self.ladder else ONE

    @property
    def total(self) -> Cardinal:
        return ALEPH_OMEGA if self.ladder else ALEPH_0

    def without_trivial(self) -> "Family":
        if self.b == 1:
            return Family(self.a, self.a + 1, self.ladder)
        return self

    def key(self):
        return (self.ladder, self.a, self.b)

    def __str__(self):
        return f"{'Ladder' if self.ladder else 'Fam'}({self.a},{self.b})"


DID = Family(1, 1)



@dataclass(frozen=True)
class DscDescription:
    classes: Tuple[ComponentClass, ...] = ()
    families: Tuple[Family, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        object.__setattr__(self, "families", tuple(self.families))

    def __add__(self, other: "DscDescription") -> "DscDescription":
        return normalize(DscDescription(self.classes + other.classes,
                                        self.families + other.families))

    def __str__(self):
        from .syntax import format_dsc
        return format_dsc(self)

    @property
    def terms(self) -> list:
        return list(self.classes) + list(self.families)

    def mult_of(self, t: OrderType) -> Cardinal:
        for c in self.classes:
            if c.type == t:
                return c.mult
        return ZERO

    @property
    def is_empty(self) -> bool:
        return not self.classes and not self.families

    @property
    def is_purely_finite(self) -> bool:
        return not self.families and all(
            is_finite_type(c.type) and c.mult.is_finite for c in self.classes)

    @property
    def is_countable(self) -> bool:
        if any(f.ladder for f in self.families):
            return False
        return all(c.mult <= ALEPH_0 and size(c.type) <= ALEPH_0 for c in self.classes)

    def trivial_count(self) -> Cardinal:
        """lambda_1: the number of singleton components."""
        return lambda_profile(self).lam(1)

    def nontrivial(self) -> "DscDescription":
        return normalize(DscDescription(
            [c for c in self.classes if not c.is_trivial],
            [f.without_trivial() for f in self.families]))

    def nontrivial_mult(self) -> Cardinal:
        xs = [c.mult for c in self.classes if not c.is_trivial]
        xs += [f.total for f in self.families]
        return card.cardinal_sum(xs) if xs else ZERO

    def total_mult(self) -> Cardinal:
        xs = [c.mult for c in self.classes] + [f.total for f in self.families]
        return card.cardinal_sum(xs) if xs else ZERO

    def component_types(self) -> list:
        types = [c.type for c in self.classes]
        for f in self.families:
            types.append(Fin(f.b))
        return types


EMPTY = DscDescription()


def dsc(*items) -> DscDescription:
    """Convenience constructor: items are ``(type, mult)`` pairs, types, or families."""
    classes, families = [], []
    for it in items:
        if isinstance(it, Family):
            families.append(it)
        elif isinstance(it, ComponentClass):
            classes.append(it)
        elif isinstance(it, tuple):
            classes.append(ComponentClass(it[0], card.as_cardinal(it[1])))
        else:
            classes.append(ComponentClass(it, ONE))
    return normalize(DscDescription(classes, families))


def from_chain_sizes(sizes) -> DscDescription:
    counts = Counter(int(s) for s in sizes)
    return normalize(DscDescription(
        [ComponentClass(Fin(n), finite(k)) for n, k in counts.items()]))


def chain_sizes(d: DscDescription) -> List[int]:
    """Sorted component sizes of a purely finite description."""
    if not d.is_purely_finite:
        raise ValueError(f"{d} is not purely finite")
    out = []
    for c in d.classes:
        out += [c.type.n] * c.mult.index
    return sorted(out)


def normalize(d: DscDescription) -> DscDescription:
    merged: Dict[object, List[Cardinal]] = defaultdict(list)
    families = []
    for c in d.classes:
        merged[c.type].append(c.mult)
    for f in d.families:
        if f.a == 0:
            merged[Fin(f.b)].append(aleph(f.b) if f.ladder else ALEPH_0)
        else:
            families.append(f)
    classes = [ComponentClass(t, card.cardinal_sum(ms)) for t, ms in merged.items()]
    classes = [c for c in classes if not c.mult.is_zero]
    classes.sort(key=lambda c: type_key(c.type))
    families.sort(key=Family.key)
    return DscDescription(tuple(classes), tuple(families))


@dataclass(frozen=True)
class Profile:
    """lambda_n for every finite n, given as explicit entries plus a family tail rule."""

    explicit: Dict[int, Cardinal]
    families: Tuple[Family, ...]
    infinite_classes: Tuple[Tuple[OrderType, Cardinal], ...]
    size_unbounded: bool

    def lam(self, n: int) -> Cardinal:
        xs = [self.explicit.get(n, ZERO)]
        xs += [f.member_mult(n) for f in self.families if f.contains(n)]
        return card.cardinal_sum(xs)

    @property
    def horizon(self) -> int:
        """Beyond this size the lambda pattern is periodic with :attr:`period`."""
        return max([0, *self.explicit, *(f.b for f in self.families)])

    @property
    def period(self) -> int:
        return math.lcm(*(f.a for f in self.families)) if self.families else 1

    @property
    def has_ladder(self) -> bool:
        return any(f.ladder for f in self.families)

    def largest_infinite_size(self) -> Optional[int]:
        """m = the largest n with lambda_n infinite; 0 if none; None if unbounded."""
        if self.has_ladder:
            return None
        infinite = [n for n, c in self.explicit.items() if c.is_infinite]
        return max(infinite, default=0)


def lambda_profile(d: DscDescription) -> Profile:
    d = normalize(d)
    explicit = {}
    infinite_classes = []
    for c in d.classes:
        if isinstance(c.type, Fin):
            explicit[c.type.n] = c.mult
        else:
            infinite_classes.append((c.type, c.mult))
    unbounded = bool(d.families) or bool(infinite_classes)
    return Profile(explicit, d.families, tuple(infinite_classes), unbounded)


@dataclass(frozen=True)
class IncreasingAnalysis:
    has_increasing: bool
    has_strictly_increasing: bool
    has_increasing_unbounded: bool


def increasing_analysis(d: DscDescription) -> IncreasingAnalysis:
    """Which kinds of infinite increasing sequences of non-trivial components exist.

    With finitely many classes, an infinite sequence of distinct components
    must eventually live in one class of infinite multiplicity or in a
    family, so the three predicates reduce to those two sources.
    """
    d = normalize(d)
    inf_nontrivial = [c for c in d.classes if not c.is_trivial and c.mult.is_infinite]
    has_family = bool(d.families)
    return IncreasingAnalysis(
        has_increasing=has_family or bool(inf_nontrivial),
        has_strictly_increasing=has_family,
        has_increasing_unbounded=has_family or any(
            not is_finite_type(c.type) for c in inf_nontrivial),
    )


def disjoint_increasing_capacity(d: DscDescription) -> Cardinal:
    """Largest number of pairwise disjoint increasing sequences of non-trivial components.

    A class of infinite multiplicity mu splits into mu constant sequences
    (mu * aleph_0 = mu); a plain family splits into aleph_0 sequences; a
    ladder family contributes sup_s aleph_s = aleph_omega.
    """
    d = normalize(d)
    xs = [c.mult for c in d.classes if not c.is_trivial and c.mult.is_infinite]
    xs += [f.total for f in d.families if not f.ladder]
    ladder = [aleph(f.b) for f in d.families if f.ladder]
    if ladder:
        return card.cardinal_sum(xs + ladder, countably_many=True, unbounded=True)
    return card.cardinal_sum(xs) if xs else ZERO


def isomorphic(d1: DscDescription, d2: DscDescription) -> bool:
    """Exact isomorphism test: same lambda profile and same infinite components.

    Finite chains are determined by their size and infinite catalog types by
    their normal form, so a DSC is determined up to isomorphism by these data.
    The lambda pattern is eventually periodic, so a finite scan decides it.
    """
    p1, p2 = lambda_profile(d1), lambda_profile(d2)
    if dict(p1.infinite_classes) != dict(p2.infinite_classes):
        return False
    bound = max(p1.horizon, p2.horizon) + math.lcm(p1.period, p2.period)
    return all(p1.lam(n) == p2.lam(n) for n in range(1, bound + 1))


def max_component_sib(d: DscDescription):
    return max((chain_sib(t) for t in normalize(d).component_types()), default=None)
