"""Expression grammar for chains, cardinals and DSC descriptions.

    dsc     := term ('+' term)* | 'empty'
    term    := [card '*'] chain | 'A^' card | 'Did' | 'Fam(' nat ',' nat ')'
               | 'Ladder(' nat ',' nat ')'
    chain   := 'C^' nat | ordinal | 'rev(' ordinal ')' | 'eta' ['+' nat]
               | 'X(' ident ')' | '(' chain ')'
    ordinal := wpart ('+' wpart)* ['+' nat]
    wpart   := 'w' ['^' nat] ['*' nat]
    card    := nat | 'aleph' nat | 'alephw'

A '+' directly after an ordinal or ``eta`` continues that chain when it is
followed by ``w`` (ordinals only) or by a number that is not a multiplicity
(not followed by '*'). Write ``1*w + 1*w`` or ``2*w`` for separate copies.
"""
from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .cardinal import ONE, Cardinal, parse_cardinal
from .declarations import EMPTY_DECLS, Declarations
from .dsc import ComponentClass, DscDescription, Family, normalize
from .errors import ParseError, ZeroMultiplicity
from .ordertype import EtaTail, Fin, Ord, OrderType, Rev, ordinal_from_cnf

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^(),]))")
_CARD_IDENT = re.compile(r"^aleph(\d+|w)$")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("nat", m.group(1), start))
        elif m.group(2):
            toks.append(("ident", m.group(2), start))
        else:
            toks.append(("op", m.group(3), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, decls: Declarations):
        self.toks = _tokenize(text)
        self.i = 0
        self.decls = decls

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at(self, value, k=0) -> bool:
        kind, v, _ = self.peek(k)
        return kind != "end" and v == value

    def expect(self, value):
        kind, v, pos = self.next()
        if v != value or kind == "end":
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def nat(self) -> int:
        kind, v, pos = self.next()
        if kind != "nat":
            raise ParseError(f"expected a number, found {v or 'end of input'!r}", pos)
        return int(v)

    def ident(self) -> str:
        kind, v, pos = self.next()
        if kind != "ident":
            raise ParseError(f"expected a name, found {v or 'end of input'!r}", pos)
        return v

    def is_card_start(self, k=0) -> bool:
        kind, v, _ = self.peek(k)
        return kind == "nat" or (kind == "ident" and bool(_CARD_IDENT.match(v)))

    def card(self) -> Cardinal:
        kind, v, pos = self.next()
        if kind == "nat" or (kind == "ident" and _CARD_IDENT.match(v)):
            return parse_cardinal(v)
        raise ParseError(f"expected a cardinal, found {v or 'end of input'!r}", pos)

    # dsc := term ('+' term)*
    def dsc(self) -> DscDescription:
        if self.at("empty"):
            self.next()
            self.finish()
            return DscDescription()
        classes, families = [], []
        while True:
            self.term(classes, families)
            if self.at("+"):
                self.next()
                continue
            break
        self.finish()
        return normalize(DscDescription(classes, families))

    def finish(self):
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)

    def term(self, classes, families):
        kind, v, pos = self.peek()
        if kind == "ident" and v in ("Did", "Fam", "Ladder"):
            self.next()
            if v == "Did":
                families.append(Family(1, 1))
                return
            self.expect("(")
            a = self.nat()
            self.expect(",")
            b = self.nat()
            self.expect(")")
            if b < 1:
                raise ParseError("family offset must be at least 1", pos)
            families.append(Family(a, b, ladder=(v == "Ladder")))
            return
        if kind == "ident" and v == "A" and self.at("^", 1):
            self.next()
            self.next()
            m = self.card()
            if m.is_zero:
                raise ZeroMultiplicity(f"A^0 at position {pos}")
            classes.append(ComponentClass(Fin(1), m))
            return
        mult = ONE
        if self.is_card_start() and self.at("*", 1):
            mult = self.card()
            self.next()
            if mult.is_zero:
                raise ZeroMultiplicity(f"zero multiplicity at position {pos}")
        classes.append(ComponentClass(self.chain(), mult))

    def chain(self) -> OrderType:
        kind, v, pos = self.peek()
        if kind == "op" and v == "(":
            self.next()
            t = self.chain()
            self.expect(")")
            return t
        if kind != "ident":
            raise ParseError(f"expected a chain, found {v or 'end of input'!r}", pos)
        if v == "C":
            self.next()
            self.expect("^")
            n = self.nat()
            if n < 1:
                raise ParseError("C^n needs n >= 1", pos)
            return Fin(n)
        if v == "w":
            return self.ordinal()
        if v == "rev":
            self.next()
            self.expect("(")
            o = self.ordinal()
            self.expect(")")
            if not isinstance(o, Ord):
                raise ParseError("rev() needs an infinite ordinal", pos)
            return Rev(o)
        if v == "eta":
            self.next()
            n = 0
            if self.at("+") and self.peek(1)[0] == "nat" and not self.at("*", 2):
                self.next()
                n = self.nat()
            return EtaTail(n)
        if v == "X":
            self.next()
            self.expect("(")
            name = self.ident()
            self.expect(")")
            return self.decls[name]
        raise ParseError(f"unknown chain {v!r}", pos)

    def ordinal(self) -> OrderType:
        parts = [self.wpart()]
        while self.at("+"):
            if self.at("w", 1):
                self.next()
                parts.append(self.wpart())
            elif self.peek(1)[0] == "nat" and not self.at("*", 2):
                self.next()
                parts.append((0, self.nat()))
                break
            else:
                break
        return ordinal_from_cnf(parts)

    def wpart(self) -> Tuple[int, int]:
        self.expect("w")
        e, c = 1, 1
        if self.at("^"):
            self.next()
            e = self.nat()
        if self.at("*") and self.peek(1)[0] == "nat":
            self.next()
            c = self.nat()
        return (e, c)


def parse(text: str, decls: Optional[Declarations] = None) -> DscDescription:
    """Parse a DSC expression into a normalized description."""
    return _Parser(text, decls if decls is not None else EMPTY_DECLS).dsc()


def parse_chain(text: str, decls: Optional[Declarations] = None) -> OrderType:
    p = _Parser(text, decls if decls is not None else EMPTY_DECLS)
    t = p.chain()
    p.finish()
    return t


def format_chain(t: OrderType) -> str:
    return str(t)


def _needs_parens(t: OrderType) -> bool:
    if isinstance(t, Ord):
        return len(t.terms) > 1 or t.tail > 0
    return isinstance(t, EtaTail) and t.n > 0


def format_dsc(d: DscDescription) -> str:
    """Canonical printer; ``parse(format_dsc(d)) == d`` for normalized ``d``."""
    d = normalize(d)
    if d.is_empty:
        return "empty"
    out = []
    prev_bare_ord = False
    for c in d.classes:
        s = format_chain(c.type)
        paren = _needs_parens(c.type) and (c.mult != ONE or isinstance(c.type, Ord))
        if isinstance(c.type, Ord) and c.mult == ONE and prev_bare_ord:
            paren = True
        if paren:
            s = f"({s})"
        if c.mult != ONE:
            s = f"{c.mult}*{s}"
        out.append(s)
        prev_bare_ord = isinstance(c.type, Ord) and not paren
    for f in d.families:
        out.append("Did" if f == Family(1, 1) else str(f))
    return " + ".join(out)
