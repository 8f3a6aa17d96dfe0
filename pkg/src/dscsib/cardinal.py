"""Symbolic cardinals: finite n, aleph_k and aleph_omega.

The universe is closed under every operation the classifier needs. Infinite
arithmetic follows the absorption laws, so ``a + b == a * b == max(a, b)``
whenever one side is infinite and neither is zero.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyAggregate, ParseError

_FINITE, _ALEPH, _ALEPH_OMEGA = 0, 1, 2


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True, order=True)
class Cardinal:
    """A cardinal in normal form.

    ``kind`` is 0 (finite), 1 (aleph_k) or 2 (aleph_omega); ``index`` is the
    integer value or the aleph index. The dataclass ordering on
    ``(kind, index)`` is exactly the cardinal order.
    """

    kind: int
    index: int = 0

    def __post_init__(self):
        if self.kind not in (_FINITE, _ALEPH, _ALEPH_OMEGA):
            raise ValueError(f"bad cardinal kind {self.kind!r}")
        if self.index < 0:
            raise ValueError("cardinal index must be non-negative")
        if self.kind == _ALEPH_OMEGA and self.index != 0:
            raise ValueError("aleph_omega carries no index")

    @property
    def is_finite(self) -> bool:
        return self.kind == _FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind != _FINITE

    @property
    def is_zero(self) -> bool:
        return self.kind == _FINITE and self.index == 0

    def __int__(self):
        if not self.is_finite:
            raise OverflowError(f"{self} is infinite")
        return self.index

    def __add__(self, other):
        if isinstance(other, int):
            other = finite(other)
        if not isinstance(other, Cardinal):
            return NotImplemented
        return cardinal_sum([self, other])

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            other = finite(other)
        if not isinstance(other, Cardinal):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __str__(self):
        if self.kind == _FINITE:
            return str(self.index)
        if self.kind == _ALEPH:
            return f"aleph{self.index}"
        return "alephw"

    def __repr__(self):
        if self.kind == _FINITE:
            return f"finite({self.index})"
        if self.kind == _ALEPH:
            return f"aleph({self.index})"
        return "ALEPH_OMEGA"


def finite(n: int) -> Cardinal:
    return Cardinal(_FINITE, int(n))


def aleph(k: int) -> Cardinal:
    return Cardinal(_ALEPH, int(k))


ZERO = finite(0)
ONE = finite(1)
ALEPH_0 = aleph(0)
ALEPH_1 = aleph(1)
ALEPH_OMEGA = Cardinal(_ALEPH_OMEGA)


def as_cardinal(x) -> Cardinal:
    if isinstance(x, Cardinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return finite(x)
    if isinstance(x, str):
        return parse_cardinal(x)
    raise TypeError(f"cannot interpret {x!r} as a cardinal")


def cmp(a: Cardinal, b: Cardinal) -> Ordering:
    if a < b:
        return Ordering.LT
    if a > b:
        return Ordering.GT
    return Ordering.EQ


def cardinal_sum(xs: Iterable[Cardinal], countably_many: bool = False,
                 unbounded: bool = False) -> Cardinal:
    """Sum a finite list of cardinals.

    ``countably_many`` reads the list as the values of a countably infinite
    family (each listed value repeated aleph_0 times, or a family whose
    members are drawn from the list). ``unbounded`` further declares that the
    family's aleph indices grow without bound, so the list is only a
    truncation; its sum is aleph_omega (the supremum of all aleph_m).
    """
    xs = [as_cardinal(x) for x in xs]
    if not xs:
        raise EmptyAggregate("sum of an empty list of cardinals")
    if unbounded:
        return ALEPH_OMEGA
    top = max(xs)
    if top.is_infinite:
        return top
    if countably_many:
        return ALEPH_0 if top.index > 0 else ZERO
    return finite(sum(x.index for x in xs))


def mul(a: Cardinal, b: Cardinal) -> Cardinal:
    a, b = as_cardinal(a), as_cardinal(b)
    if a.is_zero or b.is_zero:
        return ZERO
    if a.is_finite and b.is_finite:
        return finite(a.index * b.index)
    return max(a, b)


_CARD_RE = re.compile(r"^(?:(\d+)|aleph(\d+)|alephw)$")


def parse_cardinal(text: str) -> Cardinal:
    """Parse ``0``, ``7``, ``aleph0``, ``aleph3`` or ``alephw``."""
    s = text.strip()
    m = _CARD_RE.match(s)
    if not m:
        raise ParseError(f"not a cardinal: {text!r}")
    if m.group(1) is not None:
        return finite(int(m.group(1)))
    if m.group(2) is not None:
        return aleph(int(m.group(2)))
    return ALEPH_OMEGA
