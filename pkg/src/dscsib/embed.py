"""Embeddability of DSC descriptions via injective component assignment.

An embedding of direct sums of chains sends each component into a single
component, injectively (two incomparable points cannot share a chain), and
conversely any injective assignment of components into components that
embed them is an embedding. With finitely many blocks of interchangeable
components, existence of such an assignment is decided by the Hall subset
condition over cardinal multiplicities.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

import networkx as nx

from . import cardinal as card
from .cardinal import ZERO, Cardinal, finite
from .dsc import ComponentClass, DscDescription, Family, normalize
from .errors import TooManyClasses
from .ordertype import Fin, chain_embeds, size

SUBSET_SCAN_LIMIT = 20


def demand(term) -> Cardinal:
    return term.mult if isinstance(term, ComponentClass) else term.total


def compatible(src, tgt) -> bool:
    """Whether every component of block ``src`` fits into the components of block ``tgt``.

    A target family accepts any finite chain (cofinitely many members are
    large enough). A source family needs a target hosting unboundedly large
    finite chains: another family or an infinite chain type.
    """
    if isinstance(src, ComponentClass):
        if isinstance(tgt, ComponentClass):
            return chain_embeds(src.type, tgt.type)
        return isinstance(src.type, Fin)
    if isinstance(tgt, Family):
        return True
    return size(tgt.type).is_infinite


@dataclass(frozen=True)
class Transfer:
    source: object
    target: object
    amount: Cardinal

    def __str__(self):
        return f"{_label(self.source)} -> {_label(self.target)} x{self.amount}"


def _label(term) -> str:
    return str(term.type) if isinstance(term, ComponentClass) else str(term)


Assignment = Tuple[Transfer, ...]


class EmbedResult(NamedTuple):
    embeds: bool
    assignment: Optional[Assignment]
    violation: Optional[Tuple[object, ...]] = None

    def __bool__(self):
        return self.embeds


def _sum(xs) -> Cardinal:
    xs = list(xs)
    return card.cardinal_sum(xs) if xs else ZERO


def hall_violation(sources, targets, limit: int = SUBSET_SCAN_LIMIT):
    """Return the first source subset violating the Hall condition, or None."""
    k = len(sources)
    if k > limit:
        raise TooManyClasses(f"{k} source blocks exceed the subset-scan limit {limit}")
    nbr = [sum(1 << j for j, t in enumerate(targets) if compatible(s, t)) for s in sources]
    dem = [demand(s) for s in sources]
    caps = [demand(t) for t in targets]
    cap_cache = {}
    sub_dem = [ZERO] * (1 << k)
    sub_nbr = [0] * (1 << k)
    for mask in range(1, 1 << k):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        sub_dem[mask] = sub_dem[rest] + dem[low]
        sub_nbr[mask] = sub_nbr[rest] | nbr[low]
        nm = sub_nbr[mask]
        if nm not in cap_cache:
            cap_cache[nm] = _sum(c for j, c in enumerate(caps) if nm >> j & 1)
        if sub_dem[mask] > cap_cache[nm]:
            return tuple(s for i, s in enumerate(sources) if mask >> i & 1)
    return None


def construct_assignment(sources, targets) -> Optional[Assignment]:
    """Build an injective block assignment, or return None if none exists.

    Infinite blocks go whole to one compatible target at least as large;
    an infinite target absorbs any finite number of blocks no larger than
    itself, so those choices never block anything. What remains is a finite
    transportation problem, solved by max-flow.
    """
    out: List[Transfer] = []
    residual = []
    for s in sources:
        dem = demand(s)
        cands = [t for t in targets if compatible(s, t)]
        if dem.is_infinite:
            big = [t for t in cands if demand(t) >= dem]
            if not big:
                return None
            out.append(Transfer(s, max(big, key=demand), dem))
            continue
        inf_cands = [t for t in cands if demand(t).is_infinite]
        if inf_cands:
            out.append(Transfer(s, max(inf_cands, key=demand), dem))
        else:
            residual.append((s, cands))
    if residual:
        g = nx.DiGraph()
        total = 0
        for i, (s, cands) in enumerate(residual):
            g.add_edge("src", ("s", i), capacity=demand(s).index)
            total += demand(s).index
            for j, t in enumerate(targets):
                if t in cands:
                    g.add_edge(("s", i), ("t", j))
                    g.add_edge(("t", j), "sink", capacity=demand(t).index)
        value, flow = nx.maximum_flow(g, "src", "sink")
        if value < total:
            return None
        for i, (s, _) in enumerate(residual):
            for node, amount in flow[("s", i)].items():
                if amount:
                    out.append(Transfer(s, targets[node[1]], finite(amount)))
    return tuple(out)


def validate_assignment(d1: DscDescription, d2: DscDescription, assignment) -> bool:
    """Check an assignment against its invariants (certificate replay)."""
    d1, d2 = normalize(d1), normalize(d2)
    sources, targets = d1.terms, d2.terms
    for tr in assignment:
        if tr.source not in sources or tr.target not in targets:
            return False
        if tr.amount.is_zero or not compatible(tr.source, tr.target):
            return False
    for s in sources:
        if _sum(tr.amount for tr in assignment if tr.source == s) != demand(s):
            return False
    for t in targets:
        if _sum(tr.amount for tr in assignment if tr.target == t) > demand(t):
            return False
    return True


def dsc_embeds(d1: DscDescription, d2: DscDescription,
               limit: int = SUBSET_SCAN_LIMIT) -> EmbedResult:
    """Decide whether ``d1`` embeds into ``d2``; on success return an assignment."""
    d1, d2 = normalize(d1), normalize(d2)
    sources, targets = d1.terms, d2.terms
    bad = hall_violation(sources, targets, limit)
    if bad is not None:
        return EmbedResult(False, None, bad)
    asg = construct_assignment(sources, targets)
    if asg is None:  # pragma: no cover - Hall condition guarantees a construction
        raise AssertionError(f"Hall condition holds but no assignment for {d1} -> {d2}")
    return EmbedResult(True, asg)


def embeds(d1: DscDescription, d2: DscDescription) -> bool:
    return dsc_embeds(d1, d2).embeds


def equimorphic(d1: DscDescription, d2: DscDescription) -> bool:
    return embeds(d1, d2) and embeds(d2, d1)
