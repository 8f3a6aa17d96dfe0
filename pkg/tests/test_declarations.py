import json

import pytest

from dscsib.classify import classify_general
from dscsib.declarations import Declarations
from dscsib.errors import UnknownDeclared
from dscsib.ordertype import Sib, chain_embeds
from dscsib.syntax import parse

DECLS = {"chains": [
    {"name": "a", "size": "aleph0", "sib": "1", "embeds_into": ["b"], "embeds_from": []},
    {"name": "b", "size": "aleph0", "sib": "1", "embeds_into": [], "embeds_from": []},
    {"name": "c", "size": "aleph0", "sib": "1", "embeds_into": [], "embeds_from": ["b"]},
]}


def test_relations_are_closed(tmp_path):
    path = tmp_path / "decls.json"
    path.write_text(json.dumps(DECLS))
    decls = Declarations.load(path)
    a, c = decls["a"], decls["c"]
    assert chain_embeds(a, c) and not chain_embeds(c, a)
    assert Declarations.from_dict(decls.to_dict())["a"] == a
    with pytest.raises(UnknownDeclared):
        decls["zzz"]


def test_rejects_bad_declarations():
    with pytest.raises(ValueError):
        Declarations.from_dict({"chains": [{"name": "x", "size": "3", "sib": "1"}]})
    with pytest.raises(ValueError):
        Declarations.from_dict({"chains": [{"name": "x", "size": "aleph0", "sib": "inf"}]})


def test_unrelated_results_do_not_depend_on_declarations():
    decls = Declarations.from_dict(DECLS)
    for text in ["aleph1*C^1 + aleph0*C^3", "Did + w", "aleph0*C^2"]:
        assert classify_general(parse(text)) == classify_general(parse(text, decls))


def test_sib_is_read():
    decls = Declarations.from_dict({"chains": [
        {"name": "q", "size": "aleph0", "sib": "aleph0"}]})
    assert decls["q"].sib == Sib.ALEPH0
