"""Command-line interface: ``dscsib <command> ...``.

Exit codes: 0 for a definite answer, 2 when only bounds are proven, 1 on
errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .classify import classify
from .declarations import EMPTY_DECLS, Declarations
from .embed import dsc_embeds
from .errors import DscError
from .finite_oracle import (FinitePoset, brute_embeds, brute_iso, check_mutual_embed_implies_iso,
                            induced_injection_check)
from .report import (EXIT_ERROR, EXIT_OK, EXIT_RANGE, assignment_list, certificate_dict,
                     make_report, render_text)
from .syntax import format_dsc, parse, parse_chain
from .verify import run_suite
from .witness import (PeriodicSet, bounded_family, component_swap_family, evens, naturals,
                      odds, padding_family, qj_family)


def parse_periodic_set(text: str) -> PeriodicSet:
    """``evens``, ``evens>=4``, ``odds``, ``all``, ``all>=3`` or
    ``prefix=1,3;start=4;period=3;residues=0,2``."""
    s = text.replace(" ", "")
    base, _, lo = s.partition(">=")
    if base == "evens":
        return evens(int(lo or 0))
    if base == "odds" and not lo:
        return odds()
    if base == "all":
        return naturals(int(lo or 0))
    fields = dict(kv.split("=", 1) for kv in s.split(";") if kv)
    ints = lambda v: frozenset(int(x) for x in v.split(",") if x)  # noqa: E731
    try:
        return PeriodicSet(ints(fields.get("prefix", "")), int(fields.get("start", 0)),
                           int(fields.get("period", 1)), ints(fields.get("residues", "0")))
    except (KeyError, ValueError) as e:
        raise DscError(f"bad index set {text!r}: {e}") from None


def _sizes(text: str):
    return tuple(int(x) for x in text.replace(" ", "").split(",") if x)


def _cmd_classify(args, decls):
    d = parse(args.expr, decls)
    res = classify(d, args.mode)
    code = EXIT_OK if res.is_exact else EXIT_RANGE
    return make_report("classify", [d], str(res.count), mode=args.mode, exact=res.is_exact,
                       certificate=certificate_dict(res), exit_code=code)


def _cmd_embeds(args, decls):
    d1, d2 = parse(args.left, decls), parse(args.right, decls)
    r = dsc_embeds(d1, d2)
    extra = {"assignment": assignment_list(r.assignment)} if r.embeds else {}
    return make_report("embeds", [d1, d2], r.embeds, **extra)


def _cmd_equimorphic(args, decls):
    d1, d2 = parse(args.left, decls), parse(args.right, decls)
    return make_report("equimorphic", [d1, d2],
                       dsc_embeds(d1, d2).embeds and dsc_embeds(d2, d1).embeds)


def _cmd_witnesses(args, decls):
    d = parse(args.expr, decls)
    if args.kind == "padding":
        out = padding_family(d, args.k)
    elif args.kind == "bounded":
        out = [bounded_family(d, [t for t in (args.t or "").split(",") if t])]
    elif args.kind == "qj":
        out = [qj_family(d, parse_periodic_set(j)) for j in args.j or ["all"]]
    else:
        if not args.target:
            raise DscError("--target is required for swap witnesses")
        out = component_swap_family(d, parse_chain(args.target, decls), args.k)
    return make_report("witnesses", [d], [format_dsc(x) for x in out], kind=args.kind)


def _cmd_verify(args, decls):
    reports = run_suite(args.suite, cap=args.cap, samples=args.samples, seed=args.seed)
    result = {r.name: {"checked": r.checked, "failures": len(r.failures),
                       "examples": r.failures[:5]} for r in reports}
    code = EXIT_OK if all(r.ok for r in reports) else EXIT_ERROR
    return make_report("verify", [args.suite], result, exit_code=code)


def _cmd_oracle(args, decls):
    if args.sub == "mutual":
        r = check_mutual_embed_implies_iso(args.cap)
        result = {"pairs": r.pairs, "mutual": r.mutual,
                  "counterexamples": [f"{p} ~ {q}" for p, q in r.counterexamples]}
        return make_report("oracle", [f"mutual cap={args.cap}"], result,
                           exit_code=EXIT_OK if r.ok else EXIT_ERROR)
    p = FinitePoset(_sizes(args.left), cap=args.cap)
    q = FinitePoset(_sizes(args.right), cap=args.cap)
    inputs = [args.left, args.right]
    if args.sub == "embeds":
        ok, f = brute_embeds(p, q)
        result = {"embeds": ok, "map": {f"{k}": f"{v}" for k, v in (f or {}).items()}}
    elif args.sub == "iso":
        result = brute_iso(p, q)
    else:
        result = induced_injection_check(p, q)
    return make_report("oracle", inputs, result)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dscsib", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--decls", help="JSON declarations file for X(name) chains")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="sibling number with certificate")
    p.add_argument("expr")
    p.add_argument("--mode", choices=("countable", "general"), default="general")
    p.set_defaults(run=_cmd_classify)

    for name, fn in (("embeds", _cmd_embeds), ("equimorphic", _cmd_equimorphic)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(run=fn)

    p = sub.add_parser("witnesses", parents=[common], help="explicit sibling families")
    p.add_argument("expr")
    p.add_argument("--kind", choices=("padding", "bounded", "qj", "swap"), required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--t", help="comma-separated multiplicities t_1..t_{n-1} (bounded)")
    p.add_argument("--j", action="append", help="index set (qj); repeatable")
    p.add_argument("--target", help="chain to swap (swap)")
    p.set_defaults(run=_cmd_witnesses)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite")
    p.add_argument("--cap", type=int, default=7)
    p.add_argument("--samples", type=int, default=250)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force finite checks")
    p.add_argument("sub", choices=("embeds", "iso", "mutual", "injection"))
    p.add_argument("left", nargs="?", default="")
    p.add_argument("right", nargs="?", default="")
    p.add_argument("--cap", type=int, default=12)
    p.set_defaults(run=_cmd_oracle)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        decls = Declarations.load(args.decls) if args.decls else EMPTY_DECLS
        rep = args.run(args, decls)
    except (DscError, OSError, ValueError) as e:
        code = e.code if isinstance(e, DscError) else "BAD_INPUT"
        raw = [getattr(args, k) for k in ("expr", "left", "right", "suite")
               if getattr(args, k, None)]
        rep = make_report(args.command, raw, None, exit_code=EXIT_ERROR,
                          error={"code": code, "message": str(e)})
    rep["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    if args.format == "structured":
        out.write(json.dumps(rep, indent=2) + "\n")
    else:
        out.write(render_text(rep) + "\n")
    return rep["exit_code"]


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
