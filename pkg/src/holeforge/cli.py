"""Command-line front end: one binary, one subcommand per job, one output
row per graph.

Rows stream as they are computed so corpora pipe through standard tools.
JSON output is line-delimited with a schema tag and sorted keys: the same
invocation on the same input is byte-identical. Exit codes: 0 success,
1 input error, 2 cap or timeout, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from typing import Iterator, Optional

from . import config
from .classlab import (
    check_bipartition_conjecture,
    check_chi_omega_sq,
    corpus,
    f4_search,
    gyarfas_slack,
    max_anticomplete_odd_holes,
    verify_antichain,
)
from .catalog import canonical_code
from .errors import (
    Graph6Error,
    HoleforgeError,
    InternalInvariantError,
    LongHoleDetected,
    SolverTimeout,
    VertexCapExceeded,
)
from .graph6 import HEADER, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graphs import Graph
from .holes import classify
from .invariants import analyze, clique_number, is_proper
from .levelling import color_long_hole_free, palette_bound
from .perfection import chi_p_bounds, is_nice, perfect_chromatic_number

SCHEMA = "holeforge/1"
CODE_CAP = 12  # canonical codes get expensive on large symmetric graphs

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LIMIT = 2
EXIT_INVARIANT = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract reserves 2 for
    cap/timeout, so remap to the input-error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_INPUT)


def _vertex_list(vs) -> str:
    return ",".join(str(v) for v in vs)


def _read_lines(path: str) -> Iterator[str]:
    stream = sys.stdin if path == "-" else open(path, "r", encoding="ascii")
    try:
        for raw in stream:
            line = raw.strip()
            if line.startswith(HEADER):
                line = line[len(HEADER):].strip()
            if not line or line.startswith("#"):
                continue
            yield line
    finally:
        if stream is not sys.stdin:
            stream.close()


def _iter_graphs(args) -> Iterator[tuple]:
    if args.graph6 is not None:
        for i, s in enumerate(args.graph6):
            yield i, s, parse_graph6(s)
        return
    for i, line in enumerate(_read_lines(args.file)):
        yield i, line, parse_graph6(line)


def _base_row(i: int, line: str, g: Graph) -> dict:
    row = {"index": i, "graph6": line, "n": g.n, "m": g.m}
    row["code"] = canonical_code(g).hex() if g.n <= CODE_CAP else ""
    return row


def _row_analyze(g: Graph, args) -> dict:
    rep = analyze(g, timeout=args.timeout, cap=args.vcap)
    return {"omega": rep.omega, "chi": rep.chi, "alpha": rep.alpha, "theta": rep.theta}


def _row_classify(g: Graph, args) -> dict:
    flags = classify(g)
    return {
        "chordal": flags.chordal,
        "chordal_bipartite": flags.chordal_bipartite,
        "long_hole_free": flags.long_hole_free,
        "weakly_chordal": flags.weakly_chordal,
        "parity": flags.parity,
        "even_hole_free": flags.even_hole_free,
        "odd_hole_free": flags.odd_hole_free,
        "perfect": flags.perfect,
    }


def _row_color(g: Graph, args) -> dict:
    coloring = color_long_hole_free(g, trust=args.trust)
    omega, _ = clique_number(g)
    row = {
        "omega": omega,
        "palette_bound": palette_bound(omega) if omega else 1,
        "colors_used": coloring.colors_used(),
        "colors": _vertex_list(coloring.colors),
    }
    if args.verify:
        row["proper"] = is_proper(g, coloring)
    return row


def _row_chip(g: Graph, args) -> dict:
    lo, hi = chi_p_bounds(g, timeout=args.timeout) if g.n else (0, 0)
    chi_p, _ = perfect_chromatic_number(g, timeout=args.timeout, cap=args.vcap)
    return {"chi_p": chi_p, "lower": lo, "upper": hi}


def _row_nice(g: Graph, args) -> dict:
    rep = is_nice(g, cap=args.vcap)
    return {
        "nice": rep.is_nice,
        "witness": _vertex_list(rep.witness_vertices) if not rep.is_nice else "",
        "subgraphs_checked": rep.subgraphs_checked,
    }


def _row_slack(g: Graph, args) -> dict:
    rep = gyarfas_slack(g, cap=args.vcap)
    row = {"slack": rep.slack, "witness": _vertex_list(rep.witness)}
    if args.odd_holes:
        count, family = max_anticomplete_odd_holes(g, cap=args.vcap)
        row["anticomplete_odd_holes"] = count
        row["hole_family"] = ";".join(_vertex_list(h) for h in family)
    return row


def _row_search(g: Graph, args) -> dict:
    part = check_bipartition_conjecture(g, cap=args.vcap)
    rep = check_chi_omega_sq(g, timeout=args.timeout)
    return {
        "bipartition_found": part is not None,
        "side_a": _vertex_list(part[0]) if part else "",
        "side_b": _vertex_list(part[1]) if part else "",
        "omega": rep.omega,
        "chi": rep.chi,
        "chi_le_omega_sq": rep.holds,
    }


_ROW_FUNCS = {
    "analyze": _row_analyze,
    "classify": _row_classify,
    "color": _row_color,
    "chip": _row_chip,
    "nice": _row_nice,
    "slack": _row_slack,
    "search": _row_search,
}

_COLUMNS = {
    "analyze": ["omega", "chi", "alpha", "theta"],
    "classify": [
        "chordal",
        "chordal_bipartite",
        "long_hole_free",
        "weakly_chordal",
        "parity",
        "even_hole_free",
        "odd_hole_free",
        "perfect",
    ],
    "color": ["omega", "palette_bound", "colors_used", "colors", "proper"],
    "chip": ["chi_p", "lower", "upper"],
    "nice": ["nice", "witness", "subgraphs_checked"],
    "slack": ["slack", "witness", "anticomplete_odd_holes", "hole_family"],
    "search": [
        "bipartition_found",
        "side_a",
        "side_b",
        "omega",
        "chi",
        "chi_le_omega_sq",
    ],
}


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit(row: dict, columns: list, fmt: str, header_done: list) -> None:
    if fmt == "json":
        row = dict(row)
        row["schema"] = SCHEMA
        sys.stdout.write(json.dumps(row, sort_keys=True, separators=(",", ":")) + "\n")
    elif fmt == "tsv":
        if not header_done:
            sys.stdout.write("\t".join(["index", "graph6", "n", "m", "code"] + columns) + "\n")
            header_done.append(True)
        cells = [_cell(row.get(c)) for c in ["index", "graph6", "n", "m", "code"] + columns]
        sys.stdout.write("\t".join(cells) + "\n")
    else:
        sys.stdout.write(f"graph {row['index']}: {row['graph6']} (n={row['n']}, m={row['m']})\n")
        for c in columns:
            if c in row:
                sys.stdout.write(f"  {c} = {_cell(row[c])}\n")
    sys.stdout.flush()


_WORKER_ARGS = None


def _init_worker(args):
    global _WORKER_ARGS
    _WORKER_ARGS = args


def _work(task):
    i, line = task
    g = parse_graph6(line)
    row = _base_row(i, line, g)
    row.update(_ROW_FUNCS[_WORKER_ARGS.command](g, _WORKER_ARGS))
    return row


def _run_rows(args) -> int:
    columns = _COLUMNS[args.command]
    header_done: list = []
    if args.jobs > 1 and args.graph6 is None:
        tasks = ((i, line) for i, line in enumerate(_read_lines(args.file)))
        with multiprocessing.Pool(
            args.jobs, initializer=_init_worker, initargs=(args,)
        ) as pool:
            for row in pool.imap(_work, tasks, chunksize=8):
                _emit(row, columns, args.format, header_done)
        return EXIT_OK
    fn = _ROW_FUNCS[args.command]
    for i, line, g in _iter_graphs(args):
        row = _base_row(i, line, g)
        row.update(fn(g, args))
        _emit(row, columns, args.format, header_done)
    return EXIT_OK


def _run_antichain(args) -> int:
    graphs = []
    lines = []
    for _, line, g in _iter_graphs(args):
        graphs.append(g)
        lines.append(line)
    rep = verify_antichain(graphs)
    row = {
        "index": 0,
        "graph6": ";".join(lines),
        "n": sum(g.n for g in graphs),
        "m": sum(g.m for g in graphs),
        "code": "",
        "count": rep.count,
        "is_antichain": rep.is_antichain,
        "offending": "" if rep.offending is None else f"{rep.offending[0]}->{rep.offending[1]}",
    }
    _emit(row, ["count", "is_antichain", "offending"], args.format, [])
    return EXIT_OK


def _run_f4(args) -> int:
    rep = f4_search(
        target_omega=args.target_omega,
        exhaustive_max_n=args.exhaustive_n,
        substitution_trials=args.trials,
        random_trials=args.trials,
        seed=args.seed,
        timeout=args.timeout if args.timeout is not None else 10.0,
    )
    row = {
        "index": 0,
        "graph6": write_graph6(rep.witness) if rep.witness else "",
        "n": rep.witness.n if rep.witness else 0,
        "m": rep.witness.m if rep.witness else 0,
        "code": "",
        "target_omega": rep.target_omega,
        "best_chi": rep.best_chi,
        "witness_source": rep.witness_source or "",
        "graphs_examined": rep.graphs_examined,
        "timeouts": rep.timeouts,
    }
    _emit(
        row,
        ["target_omega", "best_chi", "witness_source", "graphs_examined", "timeouts"],
        args.format,
        [],
    )
    return EXIT_OK


def _run_corpus(args) -> int:
    params = {"seed": args.seed, "count": args.count}
    if args.kind == "random_chordal":
        params["n_max"] = args.n_max
    elif args.kind == "random_long_hole_free":
        params["n"] = args.n
        params["p"] = args.p
    elif args.kind == "substitution_closure":
        params["max_n"] = args.max_n
    elif args.kind == "exhaustive":
        params = {"n": args.n}
    for g in corpus(args.kind, **params):
        sys.stdout.write(write_graph6(g) + "\n")
    return EXIT_OK


def _run_convert(args) -> int:
    if args.source == "edges":
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, "r", encoding="ascii") as fh:
                text = fh.read()
        graphs = [parse_edge_list(text)]
    else:
        graphs = [g for _, _, g in _iter_graphs(args)]
    for g in graphs:
        if args.to == "graph6":
            sys.stdout.write(write_graph6(g) + "\n")
        else:
            sys.stdout.write(write_edge_list(g))
    return EXIT_OK


def _add_io_flags(sub) -> None:
    sub.add_argument("file", nargs="?", default="-", help="graph6 file, - for stdin")
    sub.add_argument(
        "-g",
        "--graph6",
        action="append",
        help="inline graph6 string instead of a file, repeatable",
    )
    sub.add_argument(
        "--format", choices=("json", "tsv", "human"), default="human"
    )
    sub.add_argument("--jobs", type=int, default=1, help="parallel workers")
    sub.add_argument("--vcap", type=int, help="vertex cap override")
    sub.add_argument("--timeout", type=float, help="exact solver timeout in seconds")


def build_parser() -> _Parser:
    parser = _Parser(prog="holeforge", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    for name, text in (
        ("analyze", "exact clique, chromatic, stability, clique cover numbers"),
        ("classify", "induced-cycle class flags"),
        ("color", "levelling coloring for long-hole-free graphs"),
        ("chip", "perfect chromatic number with sandwich bounds"),
        ("nice", "check chi <= omega + 1 on all connected induced subgraphs"),
        ("slack", "worst induced-subgraph violation of alpha*omega >= n"),
        ("search", "conjecture checks per graph, or --f4 extremal hunt"),
        ("antichain", "verify no input graph embeds induced in another"),
    ):
        sub = subs.add_parser(name, help=text)
        _add_io_flags(sub)
        if name == "color":
            sub.add_argument(
                "--trust",
                action="store_true",
                help="skip the long-hole precheck; a failure mid-run exits 3",
            )
            sub.add_argument(
                "--verify",
                action="store_true",
                help="append an independent properness recheck column",
            )
        elif name == "slack":
            sub.add_argument(
                "--odd-holes",
                action="store_true",
                help="also report the largest pairwise anticomplete odd hole family",
            )
        elif name == "search":
            sub.add_argument("--f4", action="store_true", help="budgeted extremal hunt")
            sub.add_argument("--target-omega", type=int, default=4)
            sub.add_argument("--trials", type=int, default=60)
            sub.add_argument("--exhaustive-n", type=int, default=6)
            sub.add_argument("--seed", type=int, default=0)

    sub = subs.add_parser("corpus", help="emit a seeded graph stream as graph6 lines")
    sub.add_argument(
        "--kind",
        required=True,
        choices=(
            "random_chordal",
            "random_long_hole_free",
            "substitution_closure",
            "exhaustive",
        ),
    )
    sub.add_argument("--count", type=int, default=50)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--n", type=int, default=8, help="vertices (rejection/exhaustive kinds)")
    sub.add_argument("--n-max", type=int, default=30, help="size limit for random_chordal")
    sub.add_argument("--max-n", type=int, default=60, help="size limit for substitution_closure")
    sub.add_argument("--p", type=float, default=0.4, help="edge probability for rejection")

    sub = subs.add_parser("convert", help="translate between graph6 and edge lists")
    sub.add_argument("file", nargs="?", default="-")
    sub.add_argument("-g", "--graph6", action="append", help="inline graph6 string")
    sub.add_argument("--source", choices=("graph6", "edges"), default="graph6")
    sub.add_argument("--to", choices=("graph6", "edges"), required=True)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "corpus":
            return _run_corpus(args)
        if args.command == "convert":
            return _run_convert(args)
        if args.command == "antichain":
            return _run_antichain(args)
        if args.command == "search" and args.f4:
            return _run_f4(args)
        return _run_rows(args)
    except BrokenPipeError:
        return EXIT_OK
    except (Graph6Error, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"holeforge: input error: {exc}\n")
        return EXIT_INPUT
    except (VertexCapExceeded, SolverTimeout) as exc:
        sys.stderr.write(f"holeforge: limit reached: {exc}\n")
        return EXIT_LIMIT
    except LongHoleDetected as exc:
        if getattr(args, "trust", False):
            sys.stderr.write(f"holeforge: invariant violation under --trust: {exc}\n")
            return EXIT_INVARIANT
        sys.stderr.write(f"holeforge: input error: {exc}\n")
        return EXIT_INPUT
    except InternalInvariantError as exc:
        sys.stderr.write(f"holeforge: internal invariant violation: {exc}\n")
        return EXIT_INVARIANT
    except HoleforgeError as exc:
        sys.stderr.write(f"holeforge: input error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
