"""Command-line front end: list Dyck graphs, expand X_G and LLT_G, apply
alphabet transforms, run verification suites and print permutation statistics.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource bound.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import chromatic as ch
from .dyckgraph import (Graph, code, enumerate_dyck, inv_G, maj_G, des_set_G, insertion_increments,
                        parse_graph, render_increments, st_G, to_diagram)
from .freealg.linear import BASES, from_json, parse_element
from .partitions import catalan
from .transforms import ALPHABETS, qsym_transform, sym_transform, wqsym_transform, wqsymdual_transform
from .verify import DEFAULT_MAX, SUITES, ResourceLimit, run_suite
from .words import parse_word, permutations, word_str

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

TARGETS = {
    "X:qsym-M": ch.x_qsym,
    "X:wqsym-M": ch.x_wqsym,
    "X:wqsym-Phi": ch.x_phi,
    "X:wqsym-PhiCheck": ch.x_phicheck,
    "X:t1-mt": ch.x1_mt,
    "X:qsym-F": ch.sw_f_expansion,
    "LLT:qsym-M": ch.llt_qsym,
    "LLT:wqsym-M": ch.llt_wqsym,
    "LLT:wqsym-PhiCheck": ch.llt_phicheck,
}

TRANSFORMS = {
    "QSym.M": qsym_transform,
    "Sym.S": sym_transform,
    "WQSym.M": wqsym_transform,
    "WQSymDual.N": wqsymdual_transform,
}

STATISTICS = ("st", "inv", "maj", "code", "increments")


class UsageError(Exception):
    pass


def max_n() -> int:
    raw = os.environ.get("NCCHROMATIC_MAX_N", "8")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"NCCHROMATIC_MAX_N={raw!r} is not an integer")


def _graph(text: str) -> Graph:
    try:
        G = parse_graph(text)
    except ValueError as exc:
        raise UsageError(f"malformed graph {text!r}: {exc}")
    if G.n > max_n():
        raise UsageError(f"graph has {G.n} vertices, above the limit {max_n()}")
    return G


# verbs

def cmd_graphs(args, out) -> int:
    if not 0 <= args.n <= max_n():
        raise UsageError(f"--n must lie in [0, {max_n()}]")
    graphs = enumerate_dyck(args.n)
    assert len(graphs) == catalan(args.n)
    if args.format == "json":
        records = [{"n": G.n, "h": list(G.hessenberg), "edges": [list(e) for e in G.sorted_edges()],
                    "diagram": str(to_diagram(G))} for G in graphs]
        json.dump(records, out, indent=1)
        out.write("\n")
    else:
        for G in graphs:
            edges = ",".join(f"{i}-{j}" for i, j in G.sorted_edges()) or "-"
            out.write(f"{G}\tedges={edges}\tdiagram={to_diagram(G)}\n")
        out.write(f"count: {len(graphs)}\n")
    return EXIT_OK


def cmd_expand(args, out) -> int:
    G = _graph(args.graph)
    try:
        x = TARGETS[args.target](G)
    except ch.NotDyck as exc:
        raise UsageError(str(exc))
    out.write((x.dumps() if args.json else x.to_text()) + "\n")
    return EXIT_OK


def _read_element(args):
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}")
    text = text.strip()
    try:
        if text.startswith("{"):
            return from_json(text)
        if not args.basis:
            raise UsageError("text input needs --basis")
        if args.basis not in BASES:
            raise UsageError(f"unknown basis {args.basis!r}")
        return parse_element(text, args.basis)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot parse element: {exc}")


def cmd_transform(args, out) -> int:
    x = _read_element(args)
    if x.tag not in TRANSFORMS:
        raise UsageError(f"transforms act on {', '.join(TRANSFORMS)}; got {x.tag}")
    y = TRANSFORMS[x.tag](x, args.alphabet)
    out.write((y.dumps() if args.json else y.to_text()) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    n = DEFAULT_MAX[args.identity] if args.n is None else args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    if n > max_n():
        out.write(f"{args.identity}: n={n} exceeds the limit {max_n()} (NCCHROMATIC_MAX_N)\n")
        return EXIT_RESOURCE

    def report(res):
        out.write(res.line() + "\n")
        out.flush()

    try:
        results = run_suite(args.identity, n, n_min=args.n_min, timeout=args.timeout, report=report)
    except ResourceLimit as exc:
        out.write(f"{args.identity}: stopped, {exc}\n")
        return EXIT_RESOURCE
    ok = all(r.passed for r in results)
    total = sum(r.checked for r in results)
    out.write(f"{args.identity}: {'pass' if ok else 'FAIL'}, {total} checked in total\n")
    return EXIT_OK if ok else EXIT_FAIL


def _stat_rows(G: Graph, stat: str, perms):
    if stat == "st":
        header = ["perm", "inv", "maj", "st"]
        rows = [[word_str(s), inv_G(G, s), maj_G(G, s), st_G(G, s)] for s in perms]
    elif stat == "inv":
        header = ["perm", "inv"]
        rows = [[word_str(s), inv_G(G, s)] for s in perms]
    elif stat == "maj":
        header = ["perm", "descents", "maj"]
        rows = [[word_str(s), " ".join(map(str, sorted(des_set_G(G, s)))), maj_G(G, s)] for s in perms]
    else:
        header = ["perm", "code"]
        rows = [[word_str(s), " ".join(map(str, code(G, s)))] for s in perms]
    return header, rows


def cmd_stats(args, out) -> int:
    G = _graph(args.graph)
    try:
        perm = parse_word(args.perm) if args.perm else None
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.statistic == "increments":
        if perm is None:
            raise UsageError("increments need --perm, a permutation of [n-1]")
        if sorted(perm) != list(range(1, G.n)):
            raise UsageError(f"--perm must be a permutation of [1, {G.n - 1}]")
        header = ["slot", "before", "increment"]
        rows = [[p, perm[p] if p < len(perm) else "end", inc] for p, inc in insertion_increments(G, perm)]
        if args.format == "text":
            out.write(render_increments(G, perm) + "\n")
    else:
        if perm is not None and sorted(perm) != list(range(1, G.n + 1)):
            raise UsageError(f"--perm must be a permutation of [1, {G.n}]")
        perms = [perm] if perm is not None else permutations(G.n)
        header, rows = _stat_rows(G, args.statistic, perms)
        if args.format == "text":
            for row in rows:
                out.write(f"{row[0]}: " + ", ".join(f"{h} {v}" for h, v in zip(header[1:], row[1:])) + "\n")
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    return EXIT_OK


# parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncchromatic",
                                description="Chromatic quasi-symmetric functions and LLT polynomials of Dyck graphs.")
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("graphs", help="list the Dyck graphs on n vertices")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--format", choices=["text", "json"], default="text")
    g.set_defaults(func=cmd_graphs)

    e = sub.add_parser("expand", help="expand X_G or LLT_G in a basis")
    e.add_argument("--graph", required=True, help="h:2,2,3 or e:3;1-2")
    e.add_argument("--target", required=True, choices=list(TARGETS))
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_expand)

    tr = sub.add_parser("transform", help="apply an alphabet transform to an element")
    tr.add_argument("--alphabet", required=True, choices=[a for a in ALPHABETS])
    tr.add_argument("--input", required=True, help="JSON or text file, '-' for stdin")
    tr.add_argument("--basis", help="basis tag for text input, e.g. QSym.M")
    tr.add_argument("--json", action="store_true")
    tr.set_defaults(func=cmd_transform)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--identity", required=True, choices=list(SUITES))
    v.add_argument("--n", type=int, help="largest size (default depends on the suite)")
    v.add_argument("--n-min", type=int, default=1)
    v.add_argument("--timeout", type=float, help="time budget in seconds")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stats", help="permutation statistics of a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--statistic", required=True, choices=STATISTICS)
    s.add_argument("--perm", help="a single permutation, e.g. 35142")
    s.add_argument("--format", choices=["text", "csv"], default="text")
    s.set_defaults(func=cmd_stats)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"ncchromatic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
