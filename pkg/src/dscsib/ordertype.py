"""Catalog of chain order types and sibling counts.

Covered: finite chains, ordinals below w^w in Cantor normal form, their
reverses, eta followed by a finite chain, and opaque user-declared chains.
Embeddability between catalog types is decided by closed-form rules.

Ordinals have exactly one sibling: if a ↪ b and b ↪ a for well-orders, then
a <= b and b <= a as ordinals, so a = b. The same holds for reversed ordinals.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import FrozenSet, Tuple, Union

from .cardinal import ALEPH_0, Cardinal, finite
from .errors import SingleSibling, Unsupported


class Sib(enum.IntEnum):
    """Exact sibling counts. INFINITE is the unspecified-cardinality infinity."""

    ONE = 0
    ALEPH0 = 1
    CONTINUUM = 2
    INFINITE = 3

    def __str__(self):
        return _SIB_TEXT[self]

    @property
    def is_exact(self) -> bool:
        return True


_SIB_TEXT = {Sib.ONE: "1", Sib.ALEPH0: "aleph0", Sib.CONTINUUM: "2^aleph0",
             Sib.INFINITE: "inf"}
_SIB_FROM_TEXT = {v: k for k, v in _SIB_TEXT.items()}
_SIB_FROM_TEXT.update({"one": Sib.ONE, "continuum": Sib.CONTINUUM, "infinite": Sib.INFINITE})


@dataclass(frozen=True)
class SibRange:
    """A proven bound ``lo <= Sib <= hi`` where the exact value is not decided."""

    lo: Sib
    hi: Sib

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty sibling range [{self.lo}, {self.hi}]")

    @property
    def is_exact(self) -> bool:
        return False

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


SibCount = Union[Sib, SibRange]


def parse_sib(text: str) -> Sib:
    key = str(text).strip().lower()
    if key not in _SIB_FROM_TEXT:
        raise ValueError(f"unknown sibling count {text!r}")
    return _SIB_FROM_TEXT[key]


@dataclass(frozen=True)
class Fin:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("finite chains have at least one element")

    def __str__(self):
        return f"C^{self.n}"


@dataclass(frozen=True)
class Ord:
    """w^e1*c1 + ... + w^ek*ck + tail with e1 > ... > ek >= 1, all ci >= 1."""

    terms: Tuple[Tuple[int, int], ...]
    tail: int = 0

    def __post_init__(self):
        terms = tuple((int(e), int(c)) for e, c in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("an infinite ordinal needs at least one w-term")
        exps = [e for e, _ in terms]
        if any(e < 1 for e in exps) or any(c < 1 for _, c in terms):
            raise ValueError(f"bad Cantor normal form {terms!r}")
        if any(a <= b for a, b in zip(exps, exps[1:])):
            raise ValueError(f"exponents must strictly decrease: {terms!r}")
        if self.tail < 0:
            raise ValueError("negative tail")

    def cnf(self):
        """Terms with the tail as an exponent-0 term; list order is ordinal order."""
        out = list(self.terms)
        if self.tail:
            out.append((0, self.tail))
        return out

    def __str__(self):
        parts = []
        for e, c in self.terms:
            s = "w" if e == 1 else f"w^{e}"
            if c != 1:
                s += f"*{c}"
            parts.append(s)
        if self.tail:
            parts.append(str(self.tail))
        return "+".join(parts)


def omega(tail: int = 0) -> Ord:
    return Ord(((1, 1),), tail)


def ordinal_from_cnf(pairs) -> Union[Fin, Ord]:
    """Normalize an arbitrary ordinal sum of w^e*c parts (ordinal addition)."""
    acc: list = []
    for e, c in pairs:
        if c == 0:
            continue
        while acc and acc[-1][0] < e:
            acc.pop()
        if acc and acc[-1][0] == e:
            acc[-1] = (e, acc[-1][1] + c)
        else:
            acc.append((e, c))
    tail = acc[-1][1] if acc and acc[-1][0] == 0 else 0
    terms = tuple(t for t in acc if t[0] > 0)
    if not terms:
        return Fin(tail)
    return Ord(terms, tail)


@dataclass(frozen=True)
class Rev:
    o: Ord

    def __str__(self):
        return f"rev({self.o})"


@dataclass(frozen=True)
class EtaTail:
    n: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative eta tail")

    def __str__(self):
        return "eta" if self.n == 0 else f"eta+{self.n}"


@dataclass(frozen=True)
class Declared:
    """An opaque chain class; identity is its name.

    ``embeds_into`` / ``embeds_from`` list names of other declared chains.
    Use :class:`dscsib.declarations.Declarations` to build consistent,
    transitively closed sets.
    """

    name: str
    size: Cardinal = field(default=ALEPH_0, compare=False)
    sib: Sib = field(default=Sib.ONE, compare=False)
    embeds_into: FrozenSet[str] = field(default=frozenset(), compare=False)
    embeds_from: FrozenSet[str] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        if not self.size.is_infinite:
            raise ValueError(f"declared chain {self.name!r} must be infinite; use C^n")
        if self.size == ALEPH_0 and self.sib == Sib.INFINITE:
            raise ValueError("a countable chain has 1, aleph0 or 2^aleph0 siblings")
        object.__setattr__(self, "embeds_into", frozenset(self.embeds_into))
        object.__setattr__(self, "embeds_from", frozenset(self.embeds_from))

    def __str__(self):
        return f"X({self.name})"


OrderType = Union[Fin, Ord, Rev, EtaTail, Declared]


def size(t: OrderType) -> Cardinal:
    if isinstance(t, Fin):
        return finite(t.n)
    if isinstance(t, Declared):
        return t.size
    return ALEPH_0


def is_finite_type(t: OrderType) -> bool:
    return isinstance(t, Fin)


def type_key(t: OrderType):
    """Fixed total order on normal forms, used for canonical sorting."""
    if isinstance(t, Fin):
        return (0, t.n)
    if isinstance(t, Ord):
        return (1, tuple(t.cnf()))
    if isinstance(t, Rev):
        return (2, tuple(t.o.cnf()))
    if isinstance(t, EtaTail):
        return (3, t.n)
    return (4, t.name)


def ord_le(a: Ord, b: Ord) -> bool:
    return a.cnf() <= b.cnf()


def chain_embeds(s: OrderType, t: OrderType) -> bool:
    """Whether a chain of type ``s`` order-embeds into one of type ``t``."""
    if isinstance(s, Fin):
        return size(t) >= finite(s.n)
    if isinstance(s, Declared) or isinstance(t, Declared):
        if s == t:
            return True
        if size(s) > size(t):
            return False
        if isinstance(s, Declared) and isinstance(t, Declared):
            return t.name in s.embeds_into or s.name in t.embeds_from
        return False
    if isinstance(t, Fin):
        return False
    if isinstance(t, EtaTail):
        return True
    if isinstance(s, EtaTail):
        return False
    if isinstance(s, Ord) and isinstance(t, Ord):
        return ord_le(s, t)
    if isinstance(s, Rev) and isinstance(t, Rev):
        return ord_le(s.o, t.o)
    return False


def equimorphic_types(s: OrderType, t: OrderType) -> bool:
    return chain_embeds(s, t) and chain_embeds(t, s)


def chain_sib(t: OrderType) -> Sib:
    if isinstance(t, EtaTail):
        return Sib.CONTINUUM
    if isinstance(t, Declared):
        return t.sib
    return Sib.ONE


def sibling_variants(t: OrderType, k: int) -> list:
    """``k`` pairwise non-isomorphic chains, each equimorphic to ``t``.

    For eta-like chains the number of elements with only finitely many
    elements above them (the finite tail) separates isomorphism classes.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if chain_sib(t) == Sib.ONE:
        raise SingleSibling(f"{t} has exactly one sibling")
    if isinstance(t, EtaTail):
        return [EtaTail(m) for m in range(k)]
    raise Unsupported(f"cannot generate siblings of declared chain {t}")


def finite_tail_length(t: OrderType):
    """Number of elements with finitely many elements above them, or None if infinite."""
    if isinstance(t, Fin):
        return t.n
    if isinstance(t, EtaTail):
        return t.n
    if isinstance(t, Ord):
        return t.tail
    if isinstance(t, Rev):
        return None
    raise Unsupported(f"finite tail of {t} is unknown")
