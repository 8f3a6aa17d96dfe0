"""Registry for user-declared opaque chains (``X(name)`` in expressions).

The sidecar file is JSON::

    {"chains": [
        {"name": "r1", "size": "aleph0", "sib": "1",
         "embeds_into": ["r2"], "embeds_from": []}
    ]}

Relations are closed under transitivity and mirrored, so that ``a`` listed in
``b.embeds_from`` also puts ``b`` into ``a.embeds_into``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, Iterable, Mapping

from .cardinal import as_cardinal
from .errors import UnknownDeclared
from .ordertype import Declared, Sib, parse_sib


class Declarations(Mapping):
    def __init__(self, chains: Iterable[Declared] = ()):
        raw = {}
        for c in chains:
            if c.name in raw:
                raise ValueError(f"chain {c.name!r} declared twice")
            raw[c.name] = c
        self._chains = _close(raw)

    def __getitem__(self, name) -> Declared:
        try:
            return self._chains[name]
        except KeyError:
            raise UnknownDeclared(f"undeclared chain X({name})") from None

    def __iter__(self):
        return iter(self._chains)

    def __len__(self):
        return len(self._chains)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Declarations":
        chains = []
        for entry in data.get("chains", []):
            sib = entry.get("sib", "1")
            chains.append(Declared(
                name=entry["name"],
                size=as_cardinal(entry.get("size", "aleph0")),
                sib=sib if isinstance(sib, Sib) else parse_sib(sib),
                embeds_into=frozenset(entry.get("embeds_into", ())),
                embeds_from=frozenset(entry.get("embeds_from", ())),
            ))
        return cls(chains)

    @classmethod
    def load(cls, path) -> "Declarations":
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self) -> dict:
        return {"chains": [
            {"name": c.name, "size": str(c.size), "sib": str(c.sib),
             "embeds_into": sorted(c.embeds_into), "embeds_from": sorted(c.embeds_from)}
            for c in self._chains.values()]}


def _close(raw: Dict[str, Declared]) -> Dict[str, Declared]:
    names = list(raw)
    below = {n: set() for n in names}  # below[y] = names embedding into y
    for x, c in raw.items():
        for y in c.embeds_into:
            if y not in raw:
                raise UnknownDeclared(f"X({x}) refers to undeclared X({y})")
            below[y].add(x)
        for y in c.embeds_from:
            if y not in raw:
                raise UnknownDeclared(f"X({x}) refers to undeclared X({y})")
            below[x].add(y)
    changed = True
    while changed:
        changed = False
        for y in names:
            extra = set().union(*(below[x] for x in below[y])) - below[y] - {y}
            if extra:
                below[y] |= extra
                changed = True
    out = {}
    for x, c in raw.items():
        above = {y for y in names if x in below[y]}
        for y in above:
            if raw[x].size > raw[y].size:
                raise ValueError(f"X({x}) is larger than X({y}) and cannot embed into it")
        out[x] = Declared(x, c.size, c.sib, frozenset(above), frozenset(below[x]))
    return out


EMPTY_DECLS = Declarations()
