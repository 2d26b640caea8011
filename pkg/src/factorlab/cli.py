"""Command-line surface: factor/barrier certificates, coloring, audits, scan.

Exit codes: 0 success, 1 a property was violated or a counterexample
found (JSON detail on stdout), 2 usage or parse error, 3 instance
exceeds a capability cap.  ``--json`` switches stdout to machine
output (single JSON document or JSON lines, each carrying
``"schema": "factorlab/1"``); graphs are given as graph6 arguments,
with ``-`` reading one graph6 line from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import audits as audit_mod
from .coloring import GraphClass, chromatic_index, classify, is_critical
from .enumeration import scan_conjectures
from .factors import (
    Barrier,
    TwoFactor,
    classify_components,
    deficiency_delta,
    find_barrier,
    find_two_factor,
    minimum_barrier,
    to_dot,
)
from .graphs import CapabilityError, Graph, Graph6Error, bits, parse_graph6

SCHEMA = "factorlab/1"


def _read_graph(arg: str) -> Graph:
    if arg == "-":
        arg = sys.stdin.readline()
    return parse_graph6(arg)


def _emit(payload: dict, as_json: bool, human: str):
    if as_json:
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(human)


def _cmd_two_factor(args) -> int:
    g = _read_graph(args.graph)
    factor = find_two_factor(g)
    if factor is not None:
        edges = sorted(factor.edges)
        _emit({"kind": "two-factor", **factor.to_json()}, args.json,
              "two-factor: " + " ".join(f"{u}-{v}" for u, v in edges))
        return 0
    barrier = find_barrier(g)
    assert barrier is not None, "no 2-factor implies a barrier"
    _emit({"kind": "barrier", **barrier.to_json()}, args.json,
          f"no two-factor; barrier S={sorted(bits(barrier.s))} T={sorted(bits(barrier.t))} "
          f"deficiency={barrier.deficiency} h={barrier.h}")
    return 0


def _cmd_barrier(args) -> int:
    g = _read_graph(args.graph)
    barrier = minimum_barrier(g) if args.minimum else find_barrier(g)
    if barrier is None:
        _emit({"kind": "barrier", "barrier": None}, args.json,
              "no barrier: the graph has a two-factor")
        return 0
    census = classify_components(g, barrier.s, barrier.t)
    recomputed = deficiency_delta(g, barrier.s, barrier.t)
    payload = {
        "kind": "barrier",
        **barrier.to_json(),
        "deficiency_recomputed": recomputed,
        "components": [
            {"vertices": sorted(bits(c.vertices)), "edges_to_t": c.edges_to_t,
             "parity": "odd" if c.odd else "even"}
            for c in census.components
        ],
    }
    lines = [f"barrier S={sorted(bits(barrier.s))} T={sorted(bits(barrier.t))} "
             f"deficiency={barrier.deficiency} (recomputed {recomputed}) h={barrier.h}"]
    for c in census.components:
        lines.append(f"  component {sorted(bits(c.vertices))}: {c.edges_to_t} edges to T "
                     f"({'odd' if c.odd else 'even'})")
    _emit(payload, args.json, "\n".join(lines))
    return 0


def _cmd_chi(args) -> int:
    g = _read_graph(args.graph)
    chi = chromatic_index(g)
    cls = classify(g)
    critical = is_critical(g)
    payload = {
        "kind": "chi",
        "n": g.n,
        "max_degree": g.max_degree(),
        "chi": chi,
        "class": 1 if cls is GraphClass.CLASS1 else 2,
        "critical": critical,
        "delta_critical": critical and cls is GraphClass.CLASS2,
    }
    _emit(payload, args.json,
          f"n={g.n} maxdeg={payload['max_degree']} chi'={chi} class={payload['class']} "
          f"critical={critical} delta-critical={payload['delta_critical']}")
    return 0


def _cmd_audit(args) -> int:
    g = _read_graph(args.graph)
    records = audit_mod.run_all(g)
    failed = [r for r in records if r.violated]
    if args.json:
        for r in records:
            print(json.dumps({"schema": SCHEMA, "kind": "audit", **r.to_json()}, sort_keys=True))
    else:
        for r in records:
            state = "FAIL" if r.violated else ("pass" if r.hypothesis else "n/a")
            print(f"{r.lemma}: {state}")
            if r.violated:
                print(f"  witness: {json.dumps(r.witness, sort_keys=True)}")
    return 1 if failed else 0


def _cmd_scan(args) -> int:
    report = scan_conjectures(args.max_n, delta_ge_half_only=args.delta_ge_half,
                              out_path=args.out)
    summary = report.summary_json()
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        counts = report.counts
        print(f"connected graphs scanned: {counts['connected']}")
        print(f"delta-critical: {counts['delta_critical']} "
              f"(with maxdeg >= n/2: {counts['delta_critical_delta_ge_half']})")
        print(f"counterexamples: {json.dumps(report.counterexamples)}")
    return 1 if report.counterexamples else 0


def _cmd_dot(args) -> int:
    g = _read_graph(args.graph)
    barrier = minimum_barrier(g) if g.n <= 16 else find_barrier(g)
    sys.stdout.write(to_dot(g, barrier))
    return 0


def _cmd_verify(args) -> int:
    with open(args.certificate, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    g = _read_graph(args.graph)
    if "edges" in data:
        factor = TwoFactor.from_json(data)
        ok = factor.is_valid(g)
        kind = "two-factor"
    elif "s" in data and "t" in data:
        try:
            barrier = Barrier.from_json(data)
        except ValueError:
            ok = False
        else:
            ok = barrier.recheck(g)
        kind = "barrier"
    else:
        raise ValueError("certificate is neither a two-factor nor a barrier")
    _emit({"kind": "verify", "certificate": kind, "valid": ok}, args.json,
          f"{kind} certificate: {'valid' if ok else 'INVALID'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorlab",
        description="Exact 2-factor, barrier, and edge-coloring toolkit for small graphs")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("two-factor", help="find a 2-factor or a barrier certificate")
    p.add_argument("graph", help="graph6 string, or - for stdin")
    p.set_defaults(func=_cmd_two_factor)

    p = sub.add_parser("barrier", help="find a barrier, with deficiency audit and census")
    p.add_argument("graph")
    p.add_argument("--minimum", action="store_true",
                   help="smallest S-union-T, then smallest h")
    p.set_defaults(func=_cmd_barrier)

    p = sub.add_parser("chi", help="chromatic index, class, criticality")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("audit", help="run all applicable lemma audits")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("scan", help="Delta-critical conjecture scan")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--delta-ge-half", action="store_true",
                   help="restrict to maximum degree >= n/2")
    p.add_argument("--out", help="JSON-lines output file (resumable)")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("dot", help="DOT output with barrier overlay")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_dot)

    p = sub.add_parser("verify", help="re-validate a certificate against a graph")
    p.add_argument("certificate", help="path to a certificate JSON file")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"graph6 error: {exc}", file=sys.stderr)
        return 2
    except CapabilityError as exc:
        print(f"capability limit: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
