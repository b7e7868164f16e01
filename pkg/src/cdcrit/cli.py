"""Command-line front end.

Every analysis subcommand prints one JSON object per input graph, tagged
with ``"schema": "cdcrit/1"``. Exit status: 0 when every check passes, 1 when
a check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from . import census as census_mod
from .criticality import check_critical, critical_k, is_k_critical
from .decomposition import decompose
from .domination import gamma_c
from .errors import CdcritError
from .families import FamilyInstance, FamilySpec, generate
from .graph import Graph, mask_of
from .graph6 import decode, encode, read_stream
from .matching import favaron_check, is_factor_critical
from .structure import find_bad_subgraph, is_b3_block, is_claw_free, is_diameter_critical, is_pk_member
from .suites import SCHEMA, SUITES, load_manifest, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(message)


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps({"schema": SCHEMA, **obj}) + "\n")


def _inputs(args) -> Iterator[tuple[Graph, FamilyInstance | None]]:
    if getattr(args, "family", None):
        inst = generate(args.family)
        yield inst.graph, inst
        return
    if getattr(args, "graph6", None):
        yield decode(args.graph6), None
        return
    for g in read_stream(sys.stdin):
        yield g, None


def _vertex(g: Graph, token: str) -> int:
    token = token.strip()
    if token.lstrip("-").isdigit():
        v = int(token)
    else:
        v = g.find(token)
    if not 0 <= v < g.n:
        raise UsageError(f"vertex {token!r} out of range")
    return v


def _vertex_set(g: Graph, text: str) -> int:
    return mask_of(_vertex(g, t) for t in text.split(",") if t.strip())


# -- subcommands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    inst = generate(args.family_spec)
    g6 = encode(inst.graph)
    payload = {
        "family": inst.tag,
        "spec": str(FamilySpec.parse(args.family_spec)),
        "graph6": g6,
        "n": inst.graph.n,
        "labels": list(inst.graph.labels or ()),
        "claims": inst.claims.to_json(),
    }
    if inst.marked:
        payload["marked"] = [i for i in range(inst.graph.n) if inst.marked >> i & 1]
    if inst.head is not None:
        payload["head"] = inst.head
    if args.format == "graph6":
        sys.stdout.write(g6 + "\n")
        if args.sidecar:
            with open(args.sidecar, "w") as fh:
                json.dump({"schema": SCHEMA, **payload}, fh, indent=2)
    else:
        _emit(payload)
    return EXIT_OK


def cmd_gamma_c(args) -> int:
    for g, _ in _inputs(args):
        res = gamma_c(g, enumerate_all=args.all)
        _emit({"graph6": encode(g), **res.to_json(g.n)})
    return EXIT_OK


def cmd_critical(args) -> int:
    status = EXIT_OK
    for g, _ in _inputs(args):
        if args.full:
            report = check_critical(g)
            ok = report.is_critical and (args.k is None or report.k == args.k)
            _emit({"graph6": encode(g), **report.to_json(), "critical": ok})
        else:
            k = gamma_c(g).gamma_c
            ok = is_k_critical(g, args.k) if args.k is not None else is_k_critical(g, k)
            _emit({"graph6": encode(g), "k": k, "critical": ok})
        if not ok:
            status = EXIT_FAIL
    return status


def cmd_blocks(args) -> int:
    for g, _ in _inputs(args):
        _emit({"graph6": encode(g), **decompose(g).to_json()})
    return EXIT_OK


def cmd_factor_critical(args) -> int:
    status = EXIT_OK
    for g, _ in _inputs(args):
        verdict = favaron_check(g, args.ell) if args.favaron else is_factor_critical(g, args.ell)
        _emit({"graph6": encode(g), "method": "favaron" if args.favaron else "direct", **verdict.to_json()})
        if not verdict.holds:
            status = EXIT_FAIL
    return status


def cmd_check(args) -> int:
    status = EXIT_OK
    for g, inst in _inputs(args):
        prop = args.property
        if prop == "bad-subgraph":
            verdict = find_bad_subgraph(g)
            # the check passes when no bad subgraph exists
            ok, body = not verdict.holds, {"found": verdict.holds, "witness": verdict.witness}
        else:
            if prop == "b3":
                if args.head is not None:
                    head = _vertex(g, args.head)
                elif inst is not None and inst.head is not None:
                    head = inst.head
                else:
                    raise UsageError("check --property b3 needs --head")
                verdict = is_b3_block(g, head)
            elif prop == "pk":
                if args.marked is not None:
                    h = _vertex_set(g, args.marked)
                elif inst is not None and inst.marked:
                    h = inst.marked
                else:
                    raise UsageError("check --property pk needs --marked")
                verdict = is_pk_member(g, h)
            elif prop == "claw-free":
                verdict = is_claw_free(g)
            else:
                if args.k is None:
                    raise UsageError("check --property diam-critical needs --k")
                verdict = is_diameter_critical(g, args.k)
            ok, body = verdict.holds, verdict.to_json()
        _emit({"graph6": encode(g), "property": prop, "passed": ok, **body})
        if not ok:
            status = EXIT_FAIL
    return status


def cmd_verify(args) -> int:
    manifest = load_manifest(args.manifest)
    report = run_suite(
        args.suite,
        manifest,
        jobs=args.jobs,
        only=args.instance,
        k=args.k,
        max_n=args.max_n,
    )
    sys.stdout.write(json.dumps(report.to_json(include_passes=args.all_results)) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def _predicate(args):
    def keep(g: Graph) -> bool:
        if args.zeta is not None or args.zeta0 is not None:
            dec = decompose(g)
            if args.zeta is not None and dec.zeta != args.zeta:
                return False
            if args.zeta0 is not None and dec.zeta0 != args.zeta0:
                return False
        if args.gamma_c is not None and gamma_c(g).gamma_c != args.gamma_c:
            return False
        if args.k is not None:
            return is_k_critical(g, args.k)
        if args.critical:
            return critical_k(g) is not None
        return True

    return keep


def cmd_enumerate(args) -> int:
    keep = _predicate(args)
    if args.input is not None or args.max_n is None:
        if args.input in (None, "-"):
            source = read_stream(sys.stdin)
        else:
            source = read_stream(open(args.input))
        graphs = census_mod.census(args.max_n or 10**9, keep, args.min_n, source=source)
    else:
        graphs = census_mod.census(args.max_n, keep, args.min_n)
    count = 0
    for g in graphs:
        count += 1
        if args.format == "json":
            _emit({"graph6": encode(g), "n": g.n})
        else:
            sys.stdout.write(encode(g) + "\n")
    sys.stderr.write(f"{count} graphs\n")
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def _graph_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph6", nargs="?", help="graph6 string; read graph6 lines from stdin when omitted")
    p.add_argument("--family", metavar="SPEC", help="use a generated family instance, e.g. F:p=1,q=2,r=2")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cdcrit", description="Connected-domination criticality toolkit.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a family instance")
    p.add_argument("family_spec", metavar="SPEC", help="TAG:key=val,... (tuples use dots)")
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")
    p.add_argument("--sidecar", metavar="PATH", help="write the claims JSON here (graph6 format)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("gamma-c", help="connected domination number")
    _graph_inputs(p)
    p.add_argument("--all", action="store_true", help="list every minimum connected dominating set")
    p.set_defaults(func=cmd_gamma_c)

    p = sub.add_parser("critical", help="k-gamma_c-criticality")
    _graph_inputs(p)
    p.add_argument("--k", type=int)
    p.add_argument("--full", action="store_true", help="report gamma_c(G + uv) for every non-edge")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("blocks", help="cut vertices and blocks")
    _graph_inputs(p)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("factor-critical", help="ell-factor-criticality")
    _graph_inputs(p)
    p.add_argument("--ell", type=int, required=True, choices=(0, 1, 2))
    p.add_argument("--favaron", action="store_true", help="use the odd-component condition instead")
    p.set_defaults(func=cmd_factor_critical)

    p = sub.add_parser("check", help="structural property checks")
    _graph_inputs(p)
    p.add_argument("--property", required=True, choices=("bad-subgraph", "b3", "pk", "claw-free", "diam-critical"))
    p.add_argument("--head", help="head vertex (index or label) for b3")
    p.add_argument("--marked", help="comma-separated clique vertices for pk")
    p.add_argument("--k", type=int, help="target diameter for diam-critical")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--manifest", help="INI file overriding the bundled parameters")
    p.add_argument("--k", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--instance", help="re-run one instance by name or source")
    p.add_argument("--all-results", action="store_true", help="include passing instances")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="census of connected graphs with a filter")
    p.add_argument("--max-n", type=int, help="internal enumeration up to this order (<= 9)")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--input", help="filter this graph6 file ('-' for stdin) instead")
    p.add_argument("--k", type=int, help="keep k-gamma_c-critical graphs")
    p.add_argument("--critical", action="store_true", help="keep gamma_c-critical graphs of any k")
    p.add_argument("--gamma-c", type=int)
    p.add_argument("--zeta", type=int)
    p.add_argument("--zeta0", type=int)
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("missing subcommand")
        return args.func(args)
    except (UsageError, CdcritError, OSError) as exc:
        sys.stderr.write(f"cdcrit: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
