"""``status-lab`` command line: compute / construct / bound / transform / enumerate / verify.

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
3 a transform broke its expected strict inequality.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Sequence

from . import families as fam
from .enumeration import MAX_GRAPH_ORDER, MAX_TREE_ORDER, enumerate_connected_graphs, enumerate_trees
from .errors import StatusLabError, TooLarge
from .graph import Graph, diameter, parse_edgelist, status_profile, to_edgelist, to_flat
from .invariants import domination_number, matching_number
from .transforms import caterpillar_shift, contract_to_pendant, dumbbell_shift, move_branches
from .verifier import TheoremId, VerifyConfig, all_passed, format_reports, run_verification

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_MONOTONE = 0, 1, 2, 3

DEFAULT_VERIFY_MAX_N = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _max_n(default: int) -> int:
    raw = os.environ.get("STATUS_LAB_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"STATUS_LAB_MAX_N must be an integer, got {raw!r}") from None


def _read_graph(path: str | None) -> Graph:
    if path is None or path == "-":
        return parse_edgelist(sys.stdin.read())
    with open(path) as fh:
        return parse_edgelist(fh.read())


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _or_none(fn, g: Graph):
    try:
        return fn(g).size
    except TooLarge:
        return None


def cmd_compute(args) -> int:
    g = _read_graph(args.input)
    prof = status_profile(g)
    prox = prof.proximity
    facts = {
        "n": g.n,
        "edges": g.edge_count,
        "min_status": prof.min_status,
        "median": list(prof.median),
        "proximity": f"{prox.numerator}/{prox.denominator}",
        "proximity_decimal": f"{float(prox):.6f}",
        "matching": _or_none(matching_number, g),
        "domination": _or_none(domination_number, g),
        "diameter": diameter(g),
    }
    if args.format == "json":
        _write(json.dumps(facts, indent=2) + "\n", args.output)
        return EXIT_OK
    lines = []
    for key, value in facts.items():
        if key == "proximity_decimal":
            continue
        if key == "median":
            value = " ".join(map(str, value))
        elif key == "proximity":
            value = f"{value} ({facts['proximity_decimal']})"
        elif value is None:
            value = "n/a"
        lines.append(f"{key}: {value}")
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


_FAMILIES = {f.value.lower(): f for f in fam.Family}


def cmd_construct(args) -> int:
    family = _FAMILIES.get(args.family.lower())
    if family is None:
        raise UsageError(f"unknown family {args.family!r}; choose from {sorted(_FAMILIES)}")
    g = fam.FamilySpec(family, args.n, tuple(args.params)).build()
    _write(to_edgelist(g), args.output)
    return EXIT_OK


_BOUNDS = {
    "match-lower": fam.bound_matching_lower,
    "match-upper": fam.bound_matching_upper,
    "dom-lower": fam.bound_domination_lower,
    "dom-upper-small": fam.bound_domination_upper_small,
    "dom-upper-large": fam.bound_domination_upper_large,
}


def cmd_bound(args) -> int:
    if args.kind == "order":
        if args.param is not None:
            raise UsageError("order bound takes only n")
        value = fam.bound_order(args.n)
    else:
        if args.param is None:
            raise UsageError(f"{args.kind} needs n and a parameter")
        value = _BOUNDS[args.kind](args.n, args.param)
    _write(f"{value}\n", args.output)
    return EXIT_OK


def cmd_transform(args) -> int:
    name = args.name
    if name in ("contract", "move"):
        g = _read_graph(args.input)
        before = status_profile(g).min_status
        if name == "contract":
            if len(args.args) != 2:
                raise UsageError("contract takes U V")
            out = contract_to_pendant(g, tuple(args.args))
            ok = status_profile(out).min_status < before
        else:
            if len(args.args) < 3:
                raise UsageError("move takes U W X [X ...]")
            u, w, *moved = args.args
            out = move_branches(g, u, w, moved)
            ok = status_profile(out).min_status > before
    else:
        if len(args.args) != 3:
            raise UsageError(f"{name} takes N P Q")
        shift = dumbbell_shift if name == "dumbbell-shift" else caterpillar_shift
        first, out = shift(*args.args)
        ok = status_profile(first).min_status > status_profile(out).min_status
    _write(to_edgelist(out), args.output)
    if not ok:
        print(f"error: {name} violated its strict status inequality", file=sys.stderr)
        return EXIT_MONOTONE
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.graphs:
        if args.n > MAX_GRAPH_ORDER:
            raise TooLarge(f"graph enumeration budget is n <= {MAX_GRAPH_ORDER}")
        stream = enumerate_connected_graphs(args.n)
    else:
        cap = min(_max_n(MAX_TREE_ORDER), MAX_TREE_ORDER)
        if args.n > cap:
            raise TooLarge(f"tree enumeration budget is n <= {cap}")
        stream = enumerate_trees(args.n)
    if args.count_only:
        _write(f"{sum(1 for _ in stream)}\n", args.output)
    else:
        _write("".join(to_flat(g) + "\n" for g in stream), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.theorem == "all":
        theorems = tuple(TheoremId)
    else:
        theorems = (TheoremId(args.theorem),)
    cap = _max_n(DEFAULT_VERIFY_MAX_N)
    if args.n_hi > cap:
        raise TooLarge(f"n_hi={args.n_hi} exceeds budget {cap} (raise STATUS_LAB_MAX_N)")
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    config = VerifyConfig(theorems, args.n_lo, args.n_hi, jobs)
    start = time.perf_counter()
    reports = run_verification(config)
    _write(format_reports(reports, args.format), args.output)
    if args.verbose:
        print(f"verify: {config} in {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return EXIT_OK if all_passed(reports) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="status-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def io_flags(sp, with_input=True):
        if with_input:
            sp.add_argument("--in", dest="input", help="edge-list file (default stdin)")
        sp.add_argument("--out", dest="output", help="output file (default stdout)")

    sp = sub.add_parser("compute", help="invariants of one graph")
    io_flags(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("construct", help="edge list of a named family member")
    sp.add_argument("family", help="path | cycle | star | A | dumbbell | caterpillar")
    sp.add_argument("n", type=int)
    sp.add_argument("params", type=int, nargs="*")
    io_flags(sp, with_input=False)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("bound", help="evaluate a closed-form bound")
    sp.add_argument("kind", choices=sorted(_BOUNDS) + ["order"])
    sp.add_argument("n", type=int)
    sp.add_argument("param", type=int, nargs="?")
    io_flags(sp, with_input=False)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("transform", help="apply a status-monotone surgery")
    sp.add_argument("name", choices=["contract", "move", "dumbbell-shift", "caterpillar-shift"])
    sp.add_argument("args", type=int, nargs="*")
    io_flags(sp)
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("enumerate", help="all trees (or connected graphs) of order n")
    sp.add_argument("n", type=int)
    sp.add_argument("--graphs", action="store_true", help="connected graphs instead of trees")
    sp.add_argument("--count-only", action="store_true")
    io_flags(sp, with_input=False)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="certify the theorems exhaustively")
    sp.add_argument("--theorem", default="all", choices=["all"] + [t.value for t in TheoremId])
    sp.add_argument("--n-lo", type=int, default=4)
    sp.add_argument("--n-hi", type=int, default=12)
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--verbose", action="store_true")
    io_flags(sp, with_input=False)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (StatusLabError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
