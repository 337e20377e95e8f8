"""Command-line front end.

Graphs travel between commands as edge lists on stdin/stdout, for example::

    tokenpowers gen star 5 | tokenpowers token -n 2 --dot
    tokenpowers verify theorem1 --graph klein5 -n 2

Exit codes: 0 pass, 1 check failed, 2 usage, 3 resource cap, 4 I/O or parse.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time

from . import powers
from .complexes import build_UD, build_X
from .exceptions import CheckFailure, GraphError, ResourceCapError
from .exchanges import count_local_exchanges, enumerate_local_exchanges, tally, tally_by_support
from .fixtures import named_graph
from .graph import (Graph, chordless_4cycles, generate, parse_edgelist, read_edgelist,
                    triangles)
from .groups import abelianize, describe, presentation_from_complex, tietze_simplify
from .homology import cubical_h1, h1_cellular
from .verify import SUITES, default_suite

SCHEMA = "tokenpowers.report/1"

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_CAP, EXIT_IO = 0, 1, 2, 3, 4

_ALIASES = {"klein": "klein_grid", "wedge": "wedge_cycles", "K": "complete"}

log = logging.getLogger("tokenpowers")


class InputError(Exception):
    """Unreadable or unparsable input (exit 4)."""


def _load_graph(args) -> tuple[Graph, str]:
    if getattr(args, "graph", None):
        return named_graph(args.graph), args.graph
    try:
        if getattr(args, "input", None):
            return read_edgelist(args.input), args.input
        text = sys.stdin.read()
        return parse_edgelist(text), "stdin"
    except (OSError, GraphError, UnicodeDecodeError) as exc:
        raise InputError(str(exc)) from exc


def _report(args, inputs: dict, results, passed=None, timings=None) -> dict:
    rep = {"schema": SCHEMA, "command": args.argv, "inputs": inputs, "results": results}
    if passed is not None:
        rep["passed"] = passed
    if timings is not None and args.timings:
        rep["timings"] = timings
    return rep


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _graph_inputs(G: Graph, name: str, **params) -> dict:
    d = {"graph": name, "graph_digest": G.digest(), "vertices": G.n_vertices, "edges": G.n_edges}
    d.update({k: v for k, v in params.items() if v is not None})
    return d


# -- commands ---------------------------------------------------------------------


def cmd_gen(args) -> tuple[str, int]:
    family = _ALIASES.get(args.family, args.family)
    G = generate(family, *args.params)
    if args.dot:
        return G.to_dot(), EXIT_OK
    return G.to_edgelist(), EXIT_OK


def _power_cmd(args, builder, variant: str) -> tuple[str, int]:
    G, name = _load_graph(args)
    P = builder(G, args.n, args.max_vertices)
    if args.stats:
        stats = {"vertices": P.n_vertices, "edges": P.n_edges, "n": args.n, "variant": variant,
                 "base_digest": G.digest()}
        return _dump(stats), EXIT_OK
    if args.table:
        return _dump(P.table()), EXIT_OK
    if args.dot:
        gname = "SP" if variant == "reduced" else "T"
        return P.to_dot(f"{gname}{args.n}", P.vertex_labels()), EXIT_OK
    if args.json:
        return _dump({"edges": [list(e) for e in P.edges], **P.table()}), EXIT_OK
    return P.to_edgelist(), EXIT_OK


def cmd_power(args):
    return _power_cmd(args, powers.reduced_power, "reduced")


def cmd_token(args):
    return _power_cmd(args, powers.token_graph, "token")


def cmd_complex(args) -> tuple[str, int]:
    G, _ = _load_graph(args)
    if args.ud is not None:
        UD = build_UD(G, args.ud)
        X = UD.complex
        cells = {str(k): len(v) for k, v in UD.cells.items()}
    else:
        X = build_X(G)
        cells = {"0": X.n_vertices, "1": len(X.edges), "2": len(X.faces)}
    if args.stats:
        return _dump({"cells": cells}), EXIT_OK
    return X.to_json() + "\n", EXIT_OK


def cmd_h1(args) -> tuple[str, int]:
    G, name = _load_graph(args)
    t0 = time.perf_counter()
    target, label = G, name
    if args.power:
        target, label = powers.reduced_power(G, args.power, args.max_vertices), f"SP^{args.power}({name})"
    elif args.token:
        target, label = powers.token_graph(G, args.token, args.max_vertices), f"T_{args.token}({name})"
    h = cubical_h1(target) if args.cubical else h1_cellular(build_X(target))
    if not args.json:
        return f"{h}\n", EXIT_OK
    method = "cubical" if args.cubical else "cellular"
    inputs = _graph_inputs(G, name, power=args.power, token=args.token, method=method)
    rep = _report(args, inputs, {"target": label, "h1": h.to_dict(), "text": str(h)},
                  timings={"seconds": round(time.perf_counter() - t0, 6)})
    return _dump(rep), EXIT_OK


def cmd_presentation(args) -> tuple[str, int]:
    G, name = _load_graph(args)
    target = G
    if args.power:
        target = powers.reduced_power(G, args.power, args.max_vertices)
    elif args.token:
        target = powers.token_graph(G, args.token, args.max_vertices)
    P = presentation_from_complex(build_X(target))
    S = P if args.raw else tietze_simplify(P)
    if not args.json:
        return f"{S}\n", EXIT_OK
    results = {"presentation": json.loads(S.to_json()), "text": str(S),
               "abelianization": abelianize(S).to_dict()}
    if not args.raw:
        results["identified"] = describe(P)["identified"]
    inputs = _graph_inputs(G, name, power=args.power, token=args.token, raw=args.raw)
    return _dump(_report(args, inputs, results)), EXIT_OK


def cmd_exchanges(args) -> tuple[str, int]:
    G, name = _load_graph(args)
    ex = enumerate_local_exchanges(G, args.n, args.max_vertices)
    rows = tally_by_support(ex)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["support", "kind", "count"])
        for r in rows:
            w.writerow([" ".join(map(str, r["support"])), r["kind"], r["count"]])
        return buf.getvalue(), EXIT_OK
    N = G.n_vertices
    if args.n >= 3 and N >= args.n + 3:
        formula = count_local_exchanges(N, args.n, len(triangles(G)), len(chordless_4cycles(G)))
    else:
        formula = "out of stated range"
    if args.json:
        results = {"total": len(ex), "kinds": tally(ex), "by_support": rows, "formula": formula}
        return _dump(_report(args, _graph_inputs(G, name, n=args.n), results)), EXIT_OK
    lines = [f"exchanges: {len(ex)}", f"formula: {formula}"]
    lines += [f"{k}: {v}" for k, v in tally(ex).items()]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    G, name = (None, None)
    if args.graph or args.input:
        G, name = _load_graph(args)
    t0 = time.perf_counter()
    res = default_suite(args.suite, G, name or "input", n=args.n, m=args.m, max_n=args.max_n,
                        k=args.k, seed=args.seed)
    elapsed = time.perf_counter() - t0
    code = EXIT_OK if res.passed else EXIT_CHECK
    inputs = {"suite": args.suite, "seed": args.seed}
    if G is not None:
        inputs.update(_graph_inputs(G, name))
    for key in ("n", "m", "max_n", "k"):
        if getattr(args, key) is not None:
            inputs[key] = getattr(args, key)
    if args.json:
        rep = _report(args, inputs, res.checks, passed=res.passed,
                      timings={"seconds": round(elapsed, 6)})
        return _dump(rep), code
    lines = []
    for c in res.checks:
        mark = {True: "PASS", False: "FAIL", None: "INFO"}[c["passed"]]
        if args.verbose or c["passed"] is not True:
            extra = {k: v for k, v in c.items() if k not in ("name", "passed")}
            lines.append(f"{mark} {c['name']} {json.dumps(extra, sort_keys=True)}")
        elif not args.quiet:
            lines.append(f"{mark} {c['name']}")
    n_ok = sum(c["passed"] is True for c in res.checks)
    n_bad = sum(c["passed"] is False for c in res.checks)
    lines.append(f"{args.suite}: {'pass' if res.passed else 'FAIL'} "
                 f"({n_ok} passed, {n_bad} failed, {len(res.checks) - n_ok - n_bad} info)")
    if args.timings:
        lines.append(f"time: {elapsed:.3f} s")
    return "\n".join(lines) + "\n", code


# -- parser -----------------------------------------------------------------------


def _add_graph_source(p):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph", metavar="NAME", help="named graph, e.g. klein5, star5, wedge3x5")
    src.add_argument("--input", "-i", metavar="FILE", help="edge-list file (default: stdin)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-vertices", type=int, default=powers.DEFAULT_MAX_VERTICES,
                        help="vertex cap for power constructions (default 10^6)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized fixtures")
    common.add_argument("--json", action="store_true", help="structured JSON output")
    common.add_argument("--timings", action="store_true",
                        help="include wall-clock timings (reports are then not reproducible)")
    common.add_argument("--out", "-o", metavar="FILE", help="write to FILE instead of stdout")
    verb = common.add_mutually_exclusive_group()
    verb.add_argument("--quiet", "-q", action="store_true")
    verb.add_argument("--verbose", "-v", action="store_true")

    parser = argparse.ArgumentParser(
        prog="tokenpowers",
        description="Reduced powers, token graphs and their first homology.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit a generated graph as an edge list")
    p.add_argument("family", help="path, cycle, star, complete, wedge_cycles, klein_grid")
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_gen)

    for name, func, what in (("power", cmd_power, "reduced power SP^n(G)"),
                             ("token", cmd_token, "token graph T_n(G)")):
        p = sub.add_parser(name, parents=[common], help=f"build the {what}")
        _add_graph_source(p)
        p.add_argument("-n", type=int, required=True)
        out = p.add_mutually_exclusive_group()
        out.add_argument("--dot", action="store_true", help="DOT with monomial labels")
        out.add_argument("--stats", action="store_true", help="vertex and edge counts")
        out.add_argument("--table", action="store_true", help="index to configuration table")
        p.set_defaults(func=func)

    p = sub.add_parser("complex", parents=[common], help="emit X(G) or UD^n(G) as JSON")
    _add_graph_source(p)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--x", action="store_true", help="X(G) (default)")
    kind.add_argument("--ud", type=int, metavar="N", help="Abrams complex UD^N(G), cells of dim <= 2")
    p.add_argument("--stats", action="store_true", help="cell counts only")
    p.set_defaults(func=cmd_complex)

    for name, func, help_ in (("h1", cmd_h1, "first homology"),
                              ("presentation", cmd_presentation, "edge-path group presentation")):
        p = sub.add_parser(name, parents=[common], help=help_)
        _add_graph_source(p)
        on = p.add_mutually_exclusive_group()
        on.add_argument("--power", type=int, metavar="N", help="apply to SP^N(G)")
        on.add_argument("--token", type=int, metavar="N", help="apply to T_N(G)")
        if name == "h1":
            p.add_argument("--cubical", action="store_true",
                           help="discrete cubical chains instead of X(G)")
        else:
            p.add_argument("--raw", action="store_true", help="skip Tietze simplification")
        p.set_defaults(func=func)

    p = sub.add_parser("exchanges", parents=[common], help="local exchanges of T_n(G)")
    _add_graph_source(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--csv", action="store_true", help="per-support CSV")
    p.set_defaults(func=cmd_exchanges)

    p = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    p.add_argument("suite", choices=SUITES)
    _add_graph_source(p)
    p.add_argument("-n", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("-k", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(argv)
    args.argv = argv
    logging.basicConfig(level=logging.WARNING if args.quiet else
                        logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if args.max_vertices < 1:
        parser.error("--max-vertices must be positive")
    # suites build powers deep inside library calls; the cap reaches them
    # through the module default, restored on exit
    saved, powers.DEFAULT_MAX_VERTICES = powers.DEFAULT_MAX_VERTICES, args.max_vertices
    try:
        text, code = args.func(args)
    except InputError as exc:
        log.error("input: %s", exc)
        return EXIT_IO
    except ResourceCapError as exc:
        log.error("resource cap: %s", exc)
        return EXIT_CAP
    except CheckFailure as exc:
        log.error("check failed: %s", exc)
        return EXIT_CHECK
    except (GraphError, KeyError) as exc:
        log.error("usage: %s", exc)
        return EXIT_USAGE
    finally:
        powers.DEFAULT_MAX_VERTICES = saved
    try:
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        log.error("output: %s", exc)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
