"""Structured reports (see ``report.schema.json``) and their text rendering."""
from __future__ import annotations

import json
from importlib import resources

from .classify import SibResult
from .dsc import ComponentClass
from .syntax import format_dsc

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_ERROR, EXIT_RANGE = 0, 1, 2


def load_schema() -> dict:
    return json.loads(resources.files("dscsib").joinpath("report.schema.json").read_text())


def term_text(term) -> str:
    return str(term.type) if isinstance(term, ComponentClass) else str(term)


def certificate_dict(result: SibResult) -> dict:
    cert = result.certificate
    return {"rule": cert.rule, "paper_quote": cert.statement,
            "witness": cert.witness, "note": cert.note}


def assignment_list(assignment) -> list:
    return [{"source": term_text(t.source), "target": term_text(t.target),
             "amount": str(t.amount)} for t in assignment or ()]


def make_report(command: str, inputs, result, *, certificate=None, exit_code=EXIT_OK,
                timing_ms=0.0, **extra) -> dict:
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": [format_dsc(x) if not isinstance(x, str) else x for x in inputs],
        "result": result,
        "certificate": certificate,
        "timing_ms": round(float(timing_ms), 3),
        "exit_code": exit_code,
    }
    rep.update(extra)
    return rep


def render_text(rep: dict) -> str:
    lines = [f"{rep['command']}: {', '.join(rep['inputs'])}"]
    if "error" in rep:
        lines.append(f"error {rep['error']['code']}: {rep['error']['message']}")
        return "\n".join(lines)
    res = rep["result"]
    if isinstance(res, list):
        lines.append("result:")
        lines += [f"  {x}" for x in res]
    elif isinstance(res, dict):
        lines.append("result:")
        lines += [f"  {k}: {v}" for k, v in res.items()]
    else:
        lines.append(f"result: {res}")
    cert = rep.get("certificate")
    if cert:
        lines.append(f"rule: {cert['rule']}")
        lines.append(f"  {cert['paper_quote']}")
        for k, v in cert["witness"].items():
            lines.append(f"  witness {k} = {v}")
        if cert.get("note"):
            lines.append(f"  note: {cert['note']}")
    for tr in rep.get("assignment", []):
        lines.append(f"  {tr['source']} -> {tr['target']} x{tr['amount']}")
    lines.append(f"({rep['timing_ms']} ms)")
    return "\n".join(lines)
