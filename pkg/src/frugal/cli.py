"""Command-line front end: ``frugal <command> ...``.

Exit codes: 0 ok, 1 verification failed, 2 parse or validation error,
3 unsupported rule/solver combination, 4 search limits exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from .election import ElectionError, RuleSpec, compute_winner, rule_scores
from .fileformat import (
    parse_cm,
    parse_document,
    parse_partition,
    parse_rule,
    parse_x3c,
    serialize,
)
from .oracles import REDUCTIONS, UnknownReduction, generate, solve_partition, solve_x3c, verify_reduction
from .reductions import ReductionError
from .solvers import ALGORITHM_TABLE, LimitExceeded, Limits, UnsupportedRule, poly_route, solve
from .vulnerability import Variant, build_instance

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_LIMITS = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(args, payload: dict, lines: List[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _load(args):
    doc = parse_document(_read(args.file))
    rule_text = args.rule or doc.meta.get("rule")
    if not rule_text:
        raise UsageError("no rule given (use --rule or a 'rule:' line)")
    return doc, parse_rule(rule_text)


def _target(args, doc) -> str:
    target = args.target or doc.meta.get("target")
    if not target:
        raise UsageError("no target given (use --target or a 'target:' line)")
    return target


def _scores(election, rule: RuleSpec):
    return rule_scores(election.candidates, election.tally(), rule)


def cmd_winner(args) -> int:
    doc, rule = _load(args)
    e = doc.election
    w = compute_winner(e, rule)
    scores = {c: str(s) for c, s in _scores(e, rule).items()}
    if args.figure:
        from .plots import score_chart

        score_chart(args.figure, e.candidates, _scores(e, rule), f"{rule} scores", highlight=w)
    _emit(args, {"winner": w, "rule": str(rule), "scores": scores}, [w])
    return EXIT_OK


def cmd_vulnerable(args) -> int:
    doc, rule = _load(args)
    target = _target(args, doc)
    inst = build_instance(doc.election, rule, target)
    vuln = list(inst.vulnerable)
    winner = compute_winner(doc.election, rule)
    lines = [f"winner: {winner}", f"vulnerable: {' '.join(map(str, vuln)) or '-'}"]
    _emit(args, {"winner": winner, "target": target, "vulnerable": vuln}, lines)
    return EXIT_OK


def _limits(args) -> Limits:
    base = Limits()
    return Limits(
        max_m=args.max_m if args.max_m is not None else base.max_m,
        max_vulnerable=args.max_votes if args.max_votes is not None else base.max_vulnerable,
        max_budget=args.max_budget if args.max_budget is not None else base.max_budget,
    )


def cmd_solve(args) -> int:
    if args.explain and not args.file:
        print(explain_table())
        return EXIT_OK
    if not args.file:
        raise UsageError("solve needs an election file")
    doc, rule = _load(args)
    target = _target(args, doc)
    variant = Variant(args.variant or doc.meta.get("variant", "frugal"))
    budget = args.budget
    if budget is None and "budget" in doc.meta:
        budget = int(doc.meta["budget"])
    inst = build_instance(doc.election, rule, target, budget=budget, variant=variant)
    limits = _limits(args)
    if args.explain:
        print(explain_table())
        route = poly_route(inst, limits)
        print(f"selected: {'exact' if route is None or args.algorithm == 'exact' else 'polynomial'}")
    start = time.perf_counter()
    sol = solve(inst, args.algorithm, limits)
    elapsed = time.perf_counter() - start
    payload = sol.to_dict()
    payload["elapsed"] = round(elapsed, 6)
    lines = [
        f"decision: {payload['decision']}",
        "witness: " + ("; ".join(f"{i}: {r}" for i, r in payload["witness"].items()) or "-"),
        f"cost: {payload['cost']}",
        f"algorithm: {payload['algorithm']}",
        f"elapsed: {payload['elapsed']:.6f}s",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def explain_table() -> str:
    rows = [("variant", "rule / condition", "algorithm")] + list(ALGORITHM_TABLE)
    width = [max(len(r[i]) for r in rows) for i in range(3)]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, width)).rstrip() for r in rows)


def _source(name: str, text: str):
    if name.endswith("-x3c"):
        return parse_x3c(text)
    if name.endswith("-quarter"):
        return parse_partition(text, "quarter")
    if name.endswith("-partition"):
        return parse_partition(text, "half")
    return parse_cm(text)


def _gen_options(args) -> dict:
    opts = {}
    if args.k is not None:
        opts["k"] = args.k
    if args.as_printed:
        opts["as_printed"] = True
    return opts


def _instance_meta(inst) -> dict:
    meta = {"rule": str(inst.rule), "target": inst.target, "variant": inst.variant.value}
    if inst.variant.priced:
        meta["budget"] = str(inst.budget)
    return meta


def cmd_gen(args) -> int:
    _known(args.name)
    src = _source(args.name, _read(args.file))
    out = generate(args.name, src, **_gen_options(args))
    text = serialize(out.instance.election, _instance_meta(out.instance))
    cert = dict(out.certificate, reduction=out.name)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        with open(args.out + ".cert.json", "w", encoding="utf-8") as fh:
            json.dump(cert, fh, indent=2, sort_keys=True)
            fh.write("\n")
        e = out.instance.election
        print(f"wrote {args.out} ({len(e.candidates)} candidates, {len(e.votes)} votes) and {args.out}.cert.json")
    elif args.json:
        print(json.dumps({"election": text, "certificate": cert}, indent=2, sort_keys=True))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    _known(args.name)
    src = _source(args.name, _read(args.file))
    opts = _gen_options(args)
    report = verify_reduction(args.name, src, max_bits=args.max_bits, **opts)
    data = report.to_dict()
    if args.figure:
        _verify_figure(args, src, opts)
    lines = [f"reduction: {data['reduction']}", f"source: {data['source_decision']}"]
    lines.append(f"instance: {data['instance_decision'] or 'not searched'}")
    for key, value in data["checks"].items():
        note = data["notes"].get(key)
        lines.append(f"{key}: {value}" + (f"  ({note})" if note else ""))
    lines.append(f"overall: {data['overall']}")
    _emit(args, data, lines)
    return EXIT_OK if report.passed else EXIT_FAIL


def _verify_figure(args, src, opts) -> None:
    from .plots import score_chart

    out = generate(args.name, src, **opts)
    inst = out.instance
    e = inst.election
    sol = REDUCTIONS[args.name][1](src)
    after = _scores(e.with_rankings(out.forward(sol)), inst.rule) if sol is not None else None
    score_chart(args.figure, e.candidates, _scores(e, inst.rule), out.name, after=after, highlight=inst.target)


def cmd_oracle(args) -> int:
    text = _read(args.file)
    if args.kind == "x3c":
        src = parse_x3c(text)
        found = solve_x3c(src)
        shown = [list(src.sets[i]) for i in found] if found is not None else None
    else:
        src = parse_partition(text, "half" if args.kind == "partition" else "quarter")
        found = solve_partition(src)
        shown = [src.weights[i] for i in found] if found is not None else None
    payload = {"decision": "YES" if found is not None else "NO", "indices": list(found) if found is not None else None, "witness": shown}
    lines = [payload["decision"]]
    if found is not None:
        lines.append(f"indices: {' '.join(map(str, found))}")
        lines.append(f"witness: {shown}")
    _emit(args, payload, lines)
    return EXIT_OK


def _known(name: str) -> None:
    if name not in REDUCTIONS:
        raise UnknownReduction(f"unknown reduction {name!r}; known: {', '.join(sorted(REDUCTIONS))}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frugal", description="Frugal bribery: winners, vulnerable votes, solvers and reductions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, target=True):
        p.add_argument("file", help="election document ('-' for stdin)")
        p.add_argument("--rule", help="voting rule, e.g. borda, kapproval:2, copeland:1/2")
        if target:
            p.add_argument("--target", help="distinguished candidate")
        p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("winner", help="winner under a rule")
    common(p, target=False)
    p.add_argument("--figure", help="write a score bar chart to this image file")
    p.set_defaults(func=cmd_winner)

    p = sub.add_parser("vulnerable", help="votes ranking the target above the winner")
    common(p)
    p.set_defaults(func=cmd_vulnerable)

    p = sub.add_parser("solve", help="decide a bribery instance")
    p.add_argument("file", nargs="?", help="election document ('-' for stdin)")
    p.add_argument("--rule")
    p.add_argument("--target")
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("--variant", choices=[v.value for v in Variant])
    p.add_argument("--algorithm", choices=["auto", "poly", "exact"], default="auto")
    p.add_argument("--max-m", type=int, help="candidate cap for exhaustive search")
    p.add_argument("--max-votes", type=int, help="vulnerable-vote cap for exhaustive search")
    p.add_argument("--max-budget", type=int, help="budget cap for budget-enumerating solvers")
    p.add_argument("--explain", action="store_true", help="print the algorithm-selection table")
    p.set_defaults(func=cmd_solve)

    def reduction(p):
        p.add_argument("name", help="reduction name: " + ", ".join(sorted(REDUCTIONS)))
        p.add_argument("file", help="source instance (X3C, partition weights or manipulation document)")
        p.add_argument("--k", type=int, help="k for kapproval-x3c / kveto-x3c")
        p.add_argument("--as-printed", action="store_true", help="borda-x3c: literal dummy block sizes")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen", help="generate a bribery instance from a source instance")
    reduction(p)
    p.add_argument("--out", help="write the election here and the certificate to OUT.cert.json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a reduction against brute-force oracles")
    reduction(p)
    p.add_argument("--max-bits", type=float, default=24, help="search-space cap for the reverse check")
    p.add_argument("--figure", help="write before/after scores of the forward witness to this image file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force X3C or partition")
    p.add_argument("kind", choices=["x3c", "partition", "quarter"])
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def run_command(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except UnsupportedRule as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMITS
    except (ElectionError, ReductionError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
