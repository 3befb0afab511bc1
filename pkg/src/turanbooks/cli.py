"""``turanbooks`` command line.

Every command prints either an aligned text table (``--format table``, the
default) or JSON lines carrying a ``schema`` field (``--format records``).
Exit status: 0 on success, 1 when ``verify`` finds a mismatch, 2 on usage
errors or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cache import SCHEMA, cache_lookup, cache_store
from .constructions import FamilySpec, enumerate_g0_c3, enumerate_g1_b2
from .diagnostics import DEFAULT_RESTARTS, EpsilonParams, containment_report, extremal_structure_report
from .graph import Graph, GraphFormatError, emit_dot, emit_edgelist, emit_graph6, parse_dot, parse_edgelist, parse_graph6
from .properties import (
    booksize,
    clique_number,
    is_b_free,
    is_bipartite,
    is_k_colorable,
    odd_girth,
)
from .search import SearchProblem, solve
from .theorems import MISMATCH, THEOREM_TAGS, compare, theorem_setup

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

GRAPH_FORMATS = ("graph6", "dot", "edgelist")


class UsageError(Exception):
    pass


class Output:
    """Single writer for table or record output."""

    def __init__(self, fmt: str, command: str, stream=None):
        self.fmt = fmt
        self.command = command
        self.stream = stream or sys.stdout

    def line(self, text: str) -> None:
        self.stream.write(text + "\n")

    def record(self, rec: dict, table_rows: list[tuple[str, object]] | None = None) -> None:
        if self.fmt == "records":
            out = {"schema": SCHEMA, "command": self.command}
            out.update(rec)
            self.line(json.dumps(out, sort_keys=True, default=str))
            return
        rows = table_rows if table_rows is not None else list(rec.items())
        width = max((len(k) for k, _ in rows), default=0)
        for key, value in rows:
            self.line(f"{key:<{width}}  {_cell(value)}")
        self.line("")


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, dict):
        return " ".join(f"{k}={v}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value) if value else "(empty)"
    return str(value)


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"{path}: not ASCII text") from exc


def read_graphs(path: str | None, fmt: str = "graph6") -> list[Graph]:
    """graph6 input holds one graph per line; DOT and edge-list inputs hold one graph."""
    text = _read_text(path)
    if fmt == "graph6":
        graphs = [parse_graph6(ln.strip()) for ln in text.splitlines() if ln.strip()]
    elif fmt == "dot":
        graphs = [parse_dot(text)]
    else:
        graphs = [parse_edgelist(text)]
    if not graphs:
        raise GraphFormatError("no graphs in input")
    return graphs


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g)
    if fmt == "dot":
        return emit_dot(g).rstrip("\n")
    return emit_edgelist(g).rstrip("\n")


# ---------------------------------------------------------------- commands

def _family_graphs(args) -> list[tuple[str, Graph]]:
    kind = args.kind
    if args.n is None:
        raise UsageError("construct needs --n")
    n = args.n
    if kind == "turan":
        if args.k is None:
            raise UsageError("construct turan needs --k")
        specs = [FamilySpec("turan", {"n": n, "k": args.k})]
    elif kind == "krr":
        if args.r is None:
            raise UsageError("construct krr needs --r")
        specs = [FamilySpec("krr", {"n": n, "r": args.r})]
    elif kind == "turandotc3":
        specs = [FamilySpec("turandotc3", {"n": n})]
    elif kind == "g0c3":
        if args.t1 is None:
            return [(f"g0c3 n={n} #{i}", g) for i, g in enumerate(enumerate_g0_c3(n))]
        specs = [FamilySpec("g0c3", {"n": n, "t1": args.t1})]
    else:
        if args.s1 is None or args.t1 is None:
            return [(f"g1b2 n={n} #{i}", g) for i, g in enumerate(enumerate_g1_b2(n))]
        specs = [FamilySpec("g1b2", {"n": n, "s1": args.s1, "t1": args.t1})]
    return [(str(s), s.build()) for s in specs]


def cmd_construct(args, out: Output) -> int:
    graphs = _family_graphs(args)
    if not graphs:
        raise UsageError(f"family {args.kind} is empty at n={args.n}")
    for label, g in graphs:
        if args.format in GRAPH_FORMATS:
            out.line(write_graph(g, args.format))
        else:
            out.record({"family": label, "n": g.n, "edges": g.edge_count, "graph6": emit_graph6(g)})
    return EXIT_OK


def cmd_check(args, out: Output) -> int:
    for g in read_graphs(args.input):
        rec = {
            "graph6": emit_graph6(g), "n": g.n, "edges": g.edge_count,
            "booksize": booksize(g), "bipartite": is_bipartite(g),
            "odd_girth": odd_girth(g), "clique_number": clique_number(g),
        }
        if args.r is not None:
            rec[f"b{args.r + 1}_free"] = is_b_free(g, args.r)
        if args.k is not None:
            rec[f"{args.k}_colorable"] = is_k_colorable(g, args.k)
        out.record(rec)
    return EXIT_OK


def cmd_booksize(args, out: Output) -> int:
    for g in read_graphs(args.input):
        rec = {"graph6": emit_graph6(g), "n": g.n, "edges": g.edge_count, "booksize": booksize(g)}
        if args.r is not None:
            rec[f"b{args.r + 1}_free"] = is_b_free(g, args.r)
        out.record(rec)
    return EXIT_OK


def _cached_solve(problem: SearchProblem, args):
    cached = None if args.no_cache else cache_lookup(problem, args.cache_dir)
    if cached is not None:
        return cached, True
    outcome = solve(problem, budget=args.budget, threads=args.threads)
    if not args.no_cache:
        cache_store(problem, outcome, args.cache_dir)
    return outcome, False


def cmd_search(args, out: Output) -> int:
    if args.n is None:
        raise UsageError("search needs --n")
    problem = SearchProblem(
        args.n, max_booksize=args.r, forbid_clique=args.clique, min_odd_girth=args.odd_girth,
        forbid_cycle=args.cycle, require_non_bipartite=args.non_bipartite,
        require_non_k_partite=args.non_k_partite,
    )
    outcome, hit = _cached_solve(problem, args)
    rec = {
        "problem": outcome.problem, "max_edges": outcome.max_edges,
        "extremal_count": len(outcome.extremal), "exact": outcome.exact,
        "explored": outcome.explored, "cached": hit, "extremal": outcome.graph6,
    }
    out.record(rec)
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    params = {k: getattr(args, k) for k in ("n", "r", "k") if getattr(args, k) is not None}
    problem, *_ = theorem_setup(args.tag, params)
    outcome, hit = _cached_solve(problem, args)
    report = compare(args.tag, params, outcome)
    rec = report.to_record()
    rec["cached"] = hit
    out.record(rec)
    return EXIT_MISMATCH if report.status == MISMATCH else EXIT_OK


def cmd_diagnose(args, out: Output) -> int:
    if args.epsilon is None or args.r is None:
        raise UsageError("diagnose needs --epsilon and --r")
    params = EpsilonParams.of(args.epsilon, args.r)
    for g in read_graphs(args.input):
        rep = containment_report(g, params, restarts=args.restarts, seed=args.seed)
        rec = {"graph6": emit_graph6(g), "containment": rep.to_record()}
        rows = [("n", g.n), ("epsilon", args.epsilon), ("epsilon admissible", rep.admissible),
                ("cut", rep.cut_kind), ("internal edges", rep.internal),
                ("eps n^2", float(rep.internal_cap)), ("L", rep.L), ("W", rep.W),
                ("shortest odd cycle", rep.cycle)]
        rows += [(name, "n/a" if v is None else ("PASS" if v else "FAIL"))
                 for name, v in rep.checks.items()]
        if rep.cycle is not None and len(rep.cycle) == 3:
            st = extremal_structure_report(g, args.r).to_record()
            rec["structure"] = st
            rows += [("labeling w1 w2 w3", st["labeling"]),
                     ("d(w1)+d(w3) into S*", f"{st['sum_s']} vs {st['target_s']}"),
                     ("d(w2)+d(w3) into T*", f"{st['sum_t']} vs {st['target_t']}"),
                     ("equalities", "PASS" if st["equalities_hold"] else "FAIL"),
                     ("G* balanced complete bipartite", st["gstar_turan"])]
        out.record(rec, rows)
    return EXIT_OK


def cmd_convert(args, out: Output) -> int:
    for g in read_graphs(args.input, args.src):
        out.line(write_graph(g, args.dst))
    return EXIT_OK


# ---------------------------------------------------------------- parser

def _common(formats=("table", "records"), default="table") -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--epsilon")
    common.add_argument("--format", choices=formats, default=default)
    common.add_argument("--cache-dir")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--budget", type=int, help="search node limit (result marked inexact if hit)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="turanbooks", description="Book-free extremal graph toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[_common(("table", "records") + GRAPH_FORMATS, "graph6")],
                       help="emit a family graph")
    p.add_argument("kind", choices=("turan", "krr", "g0c3", "g1b2", "turandotc3"))
    p.add_argument("--s1", type=int)
    p.add_argument("--t1", type=int)
    p.set_defaults(func=cmd_construct)

    for name, func, text in (("check", cmd_check, "report graph properties"),
                             ("booksize", cmd_booksize, "report booksize"),
                             ("diagnose", cmd_diagnose, "degree-threshold diagnostics")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("input", nargs="?", help="graph6 file, one graph per line (default stdin)")
        if name == "diagnose":
            p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
        p.set_defaults(func=func)

    p = sub.add_parser("search", parents=[common], help="exact extremal search (--r bounds the booksize)")
    p.add_argument("--clique", type=int, help="forbid K_q")
    p.add_argument("--odd-girth", type=int, help="minimum odd girth")
    p.add_argument("--cycle", type=int, help="forbid C_L")
    p.add_argument("--non-bipartite", action="store_true")
    p.add_argument("--non-k-partite", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="compare a closed form with exact search")
    p.add_argument("tag", choices=THEOREM_TAGS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", parents=[common], help="translate between graph formats")
    p.add_argument("input", nargs="?")
    p.add_argument("--from", dest="src", choices=GRAPH_FORMATS, default="graph6")
    p.add_argument("--to", dest="dst", choices=GRAPH_FORMATS, default="graph6")
    p.set_defaults(func=cmd_convert)
    return parser


def run(argv: list[str] | None = None, stdout=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    out = Output(args.format, args.command, stdout)
    try:
        return args.func(args, out)
    except (UsageError, GraphFormatError, ValueError) as exc:
        sys.stderr.write(f"turanbooks {args.command}: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
