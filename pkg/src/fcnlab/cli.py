"""Command line front end.

Exit codes: 0 success / claim confirmed, 1 refuted claim or failed
verification, 2 usage or input error, 3 undecided within budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .constructions import construct, formula_value
from .generators import complete, cycle, fcn, hypercube, path, rooted_product
from .graph import Graph, GraphError
from .harness import (
    BOUND_CLAIMS,
    FCN_CLAIMS,
    PRODUCT_CLAIMS,
    Verdict,
    check_bound_claim,
    check_extremes_example,
    check_fcn_claim,
    check_product_claim,
    check_twin_bound_claim,
    run_all_claims,
)
from .serialize import (
    certificate_from_json,
    certificate_to_json,
    graph_digest,
    graph_from_json,
    graph_to_dot,
    graph_to_edges,
    graph_to_json,
)
from .solve import Budget, SolverStatus, min_param
from .verify import ParameterKind, certificate_indices, check, explain_violation
from .solve import is_quasi_double_pair

_GENERATORS = {
    "fcn": lambda a: fcn(int(a)),
    "cycle": lambda a: cycle(int(a)),
    "path": lambda a: path(int(a)),
    "complete": lambda a: complete(int(a)),
    "hypercube": lambda a: hypercube(int(a)),
}


class UsageError(Exception):
    pass


def load_graph(spec: str) -> Graph:
    """Parse a graph spec: generator form name:arg or a JSON file path."""
    if ":" in spec:
        name, _, arg = spec.partition(":")
        if name in _GENERATORS:
            try:
                return _GENERATORS[name](arg)
            except (ValueError, GraphError) as e:
                raise UsageError(f"bad generator spec {spec!r}: {e}")
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            try:
                return graph_from_json(fh.read())
            except (GraphError, ValueError) as e:
                raise UsageError(f"could not read graph from {spec}: {e}")
    raise UsageError(
        f"unknown graph spec {spec!r}; use one of "
        + ", ".join(f"{k}:N" for k in _GENERATORS)
        + " or a path to a graph JSON file"
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _budget_from_args(args) -> Budget | None:
    nodes = getattr(args, "budget_nodes", None)
    secs = getattr(args, "budget_secs", None)
    exhaustive = bool(getattr(args, "exhaustive", False))
    if secs is None and nodes is None:
        env = os.environ.get("FCNLAB_BUDGET_SECS")
        if env:
            try:
                secs = float(env)
            except ValueError:
                raise UsageError(f"FCNLAB_BUDGET_SECS must be a number, got {env!r}")
    if nodes is None and secs is None and not exhaustive:
        return None
    return Budget(max_seconds=secs, max_nodes=nodes, exhaustive=exhaustive)


def _parse_members(g: Graph, raw: str) -> list[int]:
    members = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            members.append(g.index_of(token))
        except GraphError:
            raise UsageError(f"{token!r} is not a vertex of {g.name}")
    return members


# ---------------------------------------------------------------------------
# subcommands


def cmd_generate(args) -> int:
    g = load_graph(f"{args.family}:{args.size}")
    if args.format == "dot":
        _emit(graph_to_dot(g), args.output)
    elif args.format == "edges":
        _emit(graph_to_edges(g), args.output)
    else:
        _emit(graph_to_json(g), args.output)
    return 0


def cmd_product(args) -> int:
    gamma = load_graph(args.gamma)
    omega = load_graph(args.omega)
    try:
        root = omega.index_of(args.root)
    except GraphError:
        raise UsageError(f"root {args.root!r} is not a vertex of {omega.name}")
    g = rooted_product(gamma, omega, root)
    if args.format == "dot":
        _emit(graph_to_dot(g), args.output)
    elif args.format == "edges":
        _emit(graph_to_edges(g), args.output)
    else:
        _emit(graph_to_json(g), args.output)
    return 0


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    kind = ParameterKind.from_string(args.kind)
    budget = _budget_from_args(args)
    res = min_param(g, kind, budget)
    if args.json:
        obj = {
            "graph": g.name,
            "digest": graph_digest(g),
            "kind": kind.value,
            "status": res.status.value,
            "value": res.value,
            "lower": res.lower,
            "upper": res.upper,
            "witness": list(res.witness_names(g)) if res.witness is not None else None,
            "nodes": res.nodes,
            "detail": res.detail,
        }
        _emit(json.dumps(obj, sort_keys=True, separators=(",", ":")), args.output)
    else:
        lines = [f"{kind.value}({g.name}): {res.status.value}"]
        if res.status is SolverStatus.EXACT:
            lines.append(f"  value   {res.value}")
        elif res.status is SolverStatus.BOUNDS:
            lines.append(f"  bounds  [{res.lower}, {res.upper if res.upper is not None else '?'}]")
        else:
            lines.append("  no set of any size satisfies the property")
        if res.witness is not None:
            lines.append("  witness " + ",".join(res.witness_names(g)))
        lines.append(f"  nodes   {res.nodes}")
        for key, val in sorted(res.detail.items()):
            lines.append(f"  {key}: {val}")
        _emit("\n".join(lines), args.output)
    return 3 if res.status is SolverStatus.BOUNDS else 0


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    kind = ParameterKind.from_string(args.kind)
    if kind is ParameterKind.QDDOM:
        if args.cert or args.set is not None:
            raise UsageError("qddom verifies a pair: pass --u and --v instead of --set")
        u = _parse_members(g, args.u or "")
        v = _parse_members(g, args.v or "")
        ok = is_quasi_double_pair(g, u, v)
        verdict = "valid" if ok else "invalid"
        _emit(json.dumps({"kind": kind.value, "graph": g.name, "holds": ok}, sort_keys=True, separators=(",", ":")) if args.json else f"{kind.value} pair on {g.name}: {verdict}", args.output)
        return 0 if ok else 1
    if args.cert:
        with open(args.cert, "r", encoding="utf-8") as fh:
            cert = certificate_from_json(fh.read())
        if cert.kind is not kind:
            raise UsageError(f"certificate is for {cert.kind.value}, not {kind.value}")
        if cert.graph_digest != graph_digest(g):
            sys.stderr.write(
                "certificate digest does not match the graph; refusing to verify\n"
                f"  certificate: {cert.graph_digest}\n  graph:       {graph_digest(g)}\n"
            )
            return 2
        members = certificate_indices(g, cert)
    elif args.set is not None:
        members = _parse_members(g, args.set)
    else:
        raise UsageError("pass --set a,b,c or --cert FILE")
    ok = check(kind, g, members)
    reason = None if ok else explain_violation(kind, g, members)
    if args.json:
        obj = {"kind": kind.value, "graph": g.name, "size": len(members), "holds": ok, "reason": reason}
        _emit(json.dumps(obj, sort_keys=True, separators=(",", ":")), args.output)
    else:
        text = f"{kind.value} set of size {len(members)} on {g.name}: " + ("valid" if ok else f"INVALID ({reason})")
        _emit(text, args.output)
    return 0 if ok else 1


def cmd_construct(args) -> int:
    kind = ParameterKind.from_string(args.kind)
    cert = construct(kind, args.level, args.variant)
    code = 0
    if args.check:
        g = fcn(args.level)
        members = certificate_indices(g, cert)
        ok = check(kind, g, members)
        if not ok:
            reason = explain_violation(kind, g, members)
            sys.stderr.write(f"constructed set fails its property: {reason}\n")
            code = 1
    _emit(certificate_to_json(cert), args.output)
    return code


def _verdict_exit(verdicts) -> int:
    if any(v is Verdict.REFUTED for v in verdicts):
        return 1
    if any(v is Verdict.UNDECIDED for v in verdicts):
        return 3
    return 0


def cmd_check(args) -> int:
    claim = args.claim
    if claim in FCN_CLAIMS:
        if args.level is None:
            raise UsageError(f"{claim} needs --level")
        budget = _budget_from_args(args)
        o = check_fcn_claim(claim, args.level, budget)
        if args.json:
            _emit(json.dumps(o.to_obj(), sort_keys=True, separators=(",", ":")), args.output)
        else:
            _emit(
                f"{o.claim_id} at level {o.level}: {o.verdict.value}\n"
                f"  formula {o.formula}, bounds [{o.lower}, {o.upper if o.upper is not None else '?'}]\n"
                f"  {o.note}",
                args.output,
            )
        return _verdict_exit([o.verdict])
    if claim in PRODUCT_CLAIMS or claim in BOUND_CLAIMS or claim in ("twin-dim-bound", "extremes-demo"):
        if claim == "extremes-demo":
            o = check_extremes_example()
        else:
            if args.seed is None:
                raise UsageError(f"{claim} samples random instances; pass an explicit --seed")
            if claim in PRODUCT_CLAIMS:
                o = check_product_claim(claim, args.seed, args.instances)
            elif claim == "twin-dim-bound":
                o = check_twin_bound_claim(args.seed, args.instances)
            else:
                o = check_bound_claim(claim, args.seed, args.instances)
        if args.json:
            _emit(json.dumps(o.to_obj(), sort_keys=True, separators=(",", ":")), args.output)
        else:
            lines = [f"{o.claim_id}: {o.verdict.value} (checked {o.checked}, vacuous {o.vacuous})"]
            for v in o.violations:
                lines.append(f"  violation: {json.dumps(v, sort_keys=True)}")
            _emit("\n".join(lines), args.output)
        return _verdict_exit([o.verdict])
    known = sorted(list(FCN_CLAIMS) + list(PRODUCT_CLAIMS) + list(BOUND_CLAIMS) + ["twin-dim-bound", "extremes-demo"])
    raise UsageError(f"unknown claim {claim!r}; known claims: {', '.join(known)}")


def _render_report(report: dict) -> str:
    lines = []
    lines.append(f"claim adjudication  seed={report['seed']} instances={report['instances']} levels={report['levels']}")
    lines.append("")
    lines.append("fcn claims")
    header = f"  {'claim':<12} {'lvl':>3} {'kind':<7} {'formula':>7} {'bounds':<12} verdict"
    lines.append(header)
    for o in report["fcn"]:
        upper = o["upper"] if o["upper"] is not None else "?"
        bounds = f"[{o['lower']},{upper}]"
        lines.append(
            f"  {o['claim']:<12} {o['level']:>3} {o['kind']:<7} {o['formula']:>7} {bounds:<12} {o['verdict']}"
        )
    lines.append("")
    lines.append("rooted product claims")
    lines.append(f"  {'claim':<14} {'checked':>7} {'vacuous':>7} verdict")
    for o in report["product"]:
        lines.append(f"  {o['claim']:<14} {o['checked']:>7} {o['vacuous']:>7} {o['verdict']}")
    lines.append("")
    lines.append("bound claims")
    lines.append(f"  {'claim':<14} {'checked':>7} {'vacuous':>7} verdict")
    for o in report["bounds"]:
        lines.append(f"  {o['claim']:<14} {o['checked']:>7} {o['vacuous']:>7} {o['verdict']}")
    s = report["summary"]
    lines.append("")
    lines.append(f"summary: {s['confirmed']} confirmed, {s['refuted']} refuted, {s['undecided']} undecided")
    return "\n".join(lines)


def cmd_table(args) -> int:
    levels = tuple(int(x) for x in args.levels.split(","))
    budget = None
    if args.budget_nodes is not None:
        budget = Budget(max_nodes=args.budget_nodes)
    report = run_all_claims(
        seed=args.seed,
        instances=args.instances,
        levels=levels,
        budget=budget,
        threads=args.threads,
    )
    if args.json:
        _emit(json.dumps(report, sort_keys=True, separators=(",", ":")), args.output)
    else:
        _emit(_render_report(report), args.output)
    verdicts = [Verdict(o["verdict"]) for o in report["fcn"] + report["product"] + report["bounds"]]
    return _verdict_exit(verdicts)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fcnlab", description="fractal cubic networks: build, solve, verify, adjudicate")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a generated graph")
    p.add_argument("family", choices=sorted(_GENERATORS))
    p.add_argument("size", type=int, help="level for fcn, order for the rest")
    p.add_argument("--format", choices=("json", "edges", "dot"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("product", help="emit a rooted product of two graphs")
    p.add_argument("gamma", help="outer graph spec (e.g. cycle:4 or a JSON file)")
    p.add_argument("omega", help="inner graph spec")
    p.add_argument("--root", required=True, help="root vertex label in the inner graph")
    p.add_argument("--format", choices=("json", "edges", "dot"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("solve", help="minimise a parameter kind on a graph")
    p.add_argument("kind")
    p.add_argument("graph")
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-secs", type=float)
    p.add_argument("--exhaustive", action="store_true", help="full enumeration (small graphs only)")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a vertex set or certificate against a graph")
    p.add_argument("kind")
    p.add_argument("graph")
    p.add_argument("--set", help="comma separated vertex labels")
    p.add_argument("--cert", help="certificate JSON file")
    p.add_argument("--u", help="first part of a qddom pair")
    p.add_argument("--v", help="second part of a qddom pair")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build the claimed set for a kind on fcn(level)")
    p.add_argument("kind")
    p.add_argument("level", type=int)
    p.add_argument("--variant", default="default", help="default, neighborhood or twins")
    p.add_argument("--check", action="store_true", help="also verify the set")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="adjudicate one claim")
    p.add_argument("claim")
    p.add_argument("--level", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--instances", type=int, default=200)
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-secs", type=float)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table", help="adjudicate the whole claim registry")
    p.add_argument("--levels", default="1", help="comma separated fcn levels (claims apply from level 1)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--instances", type=int, default=200)
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except GraphError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
