"""Explicit sibling families.

Each generator builds siblings by one of the classical constructions and
then re-checks its output with the embedding engine before returning it:
every member must be equimorphic to the input and members must be pairwise
non-isomorphic.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence

from .cardinal import ALEPH_0, as_cardinal
from .dsc import ComponentClass, DscDescription, Family, isomorphic, normalize
from .embed import dsc_embeds, equimorphic
from .errors import (AbsentTarget, ConditionFails, FiniteJ, NoStrictFamily, NotBounded,
                     NotCountable)
from .ordertype import Fin, OrderType, equimorphic_types, is_finite_type, sibling_variants

_SINGLETON = DscDescription((ComponentClass(Fin(1)),))


def _antichain(m) -> DscDescription:
    return DscDescription((ComponentClass(Fin(1), as_cardinal(m)),))


def _checked(d: DscDescription, members: List[DscDescription]) -> List[DscDescription]:
    for x in members:
        if not equimorphic(x, d):
            raise AssertionError(f"generated {x} is not a sibling of {d}")
    for x, y in combinations(members, 2):
        if isomorphic(x, y):
            raise AssertionError(f"generated siblings {x} and {y} are isomorphic")
    return members


def padding_family(d: DscDescription, k: int) -> List[DscDescription]:
    """``N + A^m`` for m = 1..k, where N is the non-trivial part of ``d``.

    Needs ``d + C^1`` to embed in N: then every ``N + A^m`` sits between
    N and d. Members differ in their number of singletons.
    """
    d = normalize(d)
    n = d.nontrivial()
    if not dsc_embeds(d + _SINGLETON, n).embeds:
        raise ConditionFails(f"{d} + C^1 does not embed in its non-trivial part")
    return _checked(d, [n + _antichain(m) for m in range(1, k + 1)])


def bounded_family(d: DscDescription, t: Sequence) -> DscDescription:
    """The sibling ``t_1*C^1 + ... + t_{n-1}*C^{n-1} + aleph0*C^n + F``.

    ``n`` is the largest size occurring infinitely often and F holds the
    (finitely many) components larger than n. Each ``t_i`` is at most aleph0.
    """
    d = normalize(d)
    if not d.is_countable:
        raise NotCountable(f"{d} is not countable")
    if d.families or not all(is_finite_type(c.type) for c in d.classes):
        raise NotBounded(f"{d} has components of unbounded size")
    big = [c.type.n for c in d.classes if c.mult.is_infinite and not c.is_trivial]
    if not big:
        raise ConditionFails(f"{d} has only finitely many non-trivial components")
    n = max(big)
    t = [as_cardinal(x) for x in t]
    if len(t) != n - 1:
        raise ValueError(f"expected {n - 1} multiplicities for sizes 1..{n - 1}, got {len(t)}")
    if any(x > ALEPH_0 for x in t):
        raise NotCountable("multiplicities must be at most aleph0")
    classes = [ComponentClass(Fin(i + 1), x) for i, x in enumerate(t) if not x.is_zero]
    classes.append(ComponentClass(Fin(n), ALEPH_0))
    classes += [c for c in d.classes if c.type.n > n]
    out = normalize(DscDescription(classes))
    _checked(d, [out])
    return out


@dataclass(frozen=True)
class PeriodicSet:
    """An eventually periodic subset of the naturals.

    Members are ``prefix`` (all below ``start``) together with every
    ``n >= start`` whose residue mod ``period`` lies in ``residues``.
    """

    prefix: FrozenSet[int] = frozenset()
    start: int = 0
    period: int = 1
    residues: FrozenSet[int] = frozenset({0})

    def __post_init__(self):
        object.__setattr__(self, "prefix", frozenset(self.prefix))
        object.__setattr__(self, "residues", frozenset(r % self.period for r in self.residues))
        if self.period < 1 or self.start < 0:
            raise ValueError("period must be positive and start non-negative")
        if any(x >= self.start or x < 0 for x in self.prefix):
            raise ValueError("prefix members must lie in [0, start)")

    def __contains__(self, n: int) -> bool:
        if n < self.start:
            return n in self.prefix
        return n % self.period in self.residues

    @property
    def is_infinite(self) -> bool:
        return bool(self.residues)

    def members(self, upto: int) -> List[int]:
        return [n for n in range(upto + 1) if n in self]

    def first_difference(self, other: "PeriodicSet") -> Optional[int]:
        """Least element of the symmetric difference, or None if the sets are equal."""
        horizon = max(self.start, other.start) + self.period * other.period
        for n in range(horizon + 1):
            if (n in self) != (n in other):
                return n
        return None


def evens(start: int = 0) -> PeriodicSet:
    return PeriodicSet(frozenset(), start + start % 2, 2, frozenset({0}))


def odds() -> PeriodicSet:
    return PeriodicSet(frozenset(), 0, 2, frozenset({1}))


def naturals(start: int = 0) -> PeriodicSet:
    return PeriodicSet(frozenset(), start, 1, frozenset({0}))


def qj_family(d: DscDescription, j: PeriodicSet) -> DscDescription:
    """Keep the members of the first family whose sizes lie in ``j``, plus H.

    The strictly increasing sequence is the first family of ``d`` (members
    indexed by their size). H collects the components that embed in no
    member, i.e. the infinite ones; everything finite is dropped, since it
    re-embeds into the kept members. Distinct index sets yield
    non-isomorphic outputs whenever they differ on a member size.
    """
    d = normalize(d)
    if not d.is_countable:
        raise NotCountable(f"{d} is not countable")
    if not d.families:
        raise NoStrictFamily(f"{d} has no strictly increasing family of components")
    fam = d.families[0]
    a, p = fam.a, j.period
    s0 = fam.b
    while s0 < j.start:
        s0 += a
    classes = [ComponentClass(Fin(s)) for s in range(fam.b, s0, a) if s in j]
    fams = [Family(a * p, s0 + r * a) for r in range(p) if (s0 + r * a) in j]
    if not fams:
        raise FiniteJ(f"only finitely many members of {fam} have sizes in the index set")
    classes += [c for c in d.classes if not is_finite_type(c.type)]
    out = normalize(DscDescription(classes, fams))
    _checked(d, [out])
    return out


def component_swap_family(d: DscDescription, target: OrderType, k: int) -> List[DscDescription]:
    """Replace every class equimorphic to ``target`` by the i-th sibling variant of it."""
    d = normalize(d)
    if all(c.type != target for c in d.classes):
        raise AbsentTarget(f"{target} is not a component of {d}")
    variants = sibling_variants(target, k)
    out = []
    for v in variants:
        classes = [ComponentClass(v, c.mult) if equimorphic_types(c.type, target) else c
                   for c in d.classes]
        out.append(normalize(DscDescription(classes, d.families)))
    return _checked(d, out)


def verify_family(d: DscDescription, members: Iterable[DscDescription]) -> bool:
    """Independent re-check used by tests and the CLI."""
    members = list(members)
    try:
        _checked(normalize(d), members)
    except AssertionError:
        return False
    return True
