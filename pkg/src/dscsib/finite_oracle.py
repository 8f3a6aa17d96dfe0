"""Element-level brute force on finite disjoint unions of chains.

Nothing here consults the symbolic engine: embeddings are searched point by
point, so agreement with :mod:`dscsib.embed` is an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import CapExceeded

DEFAULT_CAP = 12
EXHAUSTIVE_CAP = 7

Element = Tuple[int, int]  # (chain index, position)


@dataclass(frozen=True)
class FinitePoset:
    chains: Tuple[int, ...]
    cap: int = field(default=DEFAULT_CAP, compare=False)

    def __post_init__(self):
        chains = tuple(int(c) for c in self.chains)
        if any(c < 1 for c in chains):
            raise ValueError("chain sizes must be positive")
        object.__setattr__(self, "chains", chains)
        if self.size > self.cap:
            raise CapExceeded(f"poset of size {self.size} exceeds cap {self.cap}")

    @property
    def size(self) -> int:
        return sum(self.chains)

    def elements(self) -> List[Element]:
        return [(i, p) for i, n in enumerate(self.chains) for p in range(n)]

    def leq(self, x: Element, y: Element) -> bool:
        return x[0] == y[0] and x[1] <= y[1]


def _compatible(p: FinitePoset, q: FinitePoset, x, fx, y, fy) -> bool:
    return p.leq(x, y) == q.leq(fx, fy) and p.leq(y, x) == q.leq(fy, fx)


def iter_embeddings(p: FinitePoset, q: FinitePoset) -> Iterator[Dict[Element, Element]]:
    """Yield every order embedding p -> q (injective, order and incomparability preserving)."""
    src, tgt = p.elements(), q.elements()
    if len(src) > len(tgt):
        return
    assigned: List[Element] = []
    used = set()

    def extend(i):
        if i == len(src):
            yield dict(zip(src, assigned))
            return
        x = src[i]
        for fx in tgt:
            if fx in used:
                continue
            if all(_compatible(p, q, x, fx, src[j], assigned[j]) for j in range(i)):
                assigned.append(fx)
                used.add(fx)
                yield from extend(i + 1)
                used.discard(fx)
                assigned.pop()

    yield from extend(0)


def brute_embeds(p: FinitePoset, q: FinitePoset) -> Tuple[bool, Optional[Dict[Element, Element]]]:
    for f in iter_embeddings(p, q):
        return True, f
    return False, None


def brute_iso(p: FinitePoset, q: FinitePoset) -> bool:
    """Unions of chains are isomorphic iff their chain-size multisets agree."""
    return sorted(p.chains) == sorted(q.chains)


def iso_by_search(p: FinitePoset, q: FinitePoset) -> bool:
    """Isomorphism by searching for a surjective embedding (slow; for cross-checks)."""
    if p.size != q.size:
        return False
    return brute_embeds(p, q)[0]


def all_chain_multisets(cap: int) -> List[Tuple[int, ...]]:
    """Every non-empty multiset of chain sizes with total at most ``cap`` (sorted descending)."""
    out = []

    def rec(remaining, largest, acc):
        if acc:
            out.append(tuple(acc))
        for s in range(min(remaining, largest), 0, -1):
            acc.append(s)
            rec(remaining - s, s, acc)
            acc.pop()

    rec(cap, cap, [])
    return out


@dataclass
class MutualEmbedReport:
    cap: int
    pairs: int = 0
    mutual: int = 0
    counterexamples: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_mutual_embed_implies_iso(cap: int) -> MutualEmbedReport:
    """Exhaustively check that mutually embeddable finite unions of chains are isomorphic."""
    shapes = all_chain_multisets(cap)
    posets = [FinitePoset(s, cap=max(cap, 1)) for s in shapes]
    report = MutualEmbedReport(cap)
    for p in posets:
        for q in posets:
            report.pairs += 1
            if brute_embeds(p, q)[0] and brute_embeds(q, p)[0]:
                report.mutual += 1
                if not brute_iso(p, q):
                    report.counterexamples.append((p.chains, q.chains))
    return report


def component_map(p: FinitePoset, f: Dict[Element, Element]) -> Optional[Dict[int, int]]:
    """The induced map on chain indices, or None if some chain is split across targets."""
    fhat: Dict[int, int] = {}
    for (i, _), (j, _) in f.items():
        if fhat.setdefault(i, j) != j:
            return None
    return fhat


def induced_injection_check(p: FinitePoset, q: FinitePoset, budget: int = 100_000) -> bool:
    """Every embedding p -> q induces a well-defined injective map on components."""
    seen = 0
    for f in iter_embeddings(p, q):
        fhat = component_map(p, f)
        if fhat is None or len(set(fhat.values())) != len(fhat):
            return False
        seen += 1
        if seen >= budget:
            break
    if seen == 0:
        raise ValueError(f"{p.chains} does not embed in {q.chains}")
    return True
