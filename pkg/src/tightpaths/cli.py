"""Command-line workbench.

Exit status: 0 success (or pattern-free), 1 pattern found, 2 usage or input
error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import constructions, formats
from .bounds import bound_table
from .core import DomainError, UnsupportedPatternError
from .extension import random_partition_experiment, verify_counting
from .patterns import SEARCH_KINDS, find_pattern
from .search import GROUPS, exact_extremal, verify_family

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = ("stack_free", "short_side", "clique_union", "transversal", "lift_plus")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tightpaths", description="Tight paths, zigzags and stacks in convex geometric hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="write an explicit family to a file")
    c.add_argument("--family", choices=FAMILIES, required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--m", type=int, default=1, help="fresh vertices for lift_plus")
    c.add_argument("--in", dest="infile", help="input hypergraph for lift_plus")
    c.add_argument("-o", "--out", help="output file (stdout if omitted)")

    d = sub.add_parser("detect", help="look for a pattern in a hypergraph file")
    d.add_argument("--in", dest="infile", required=True)
    d.add_argument("--pattern", choices=SEARCH_KINDS, required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--json", action="store_true")

    b = sub.add_parser("bound", help="table of closed-form bounds")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--json", action="store_true")

    s = sub.add_parser("search", help="exact extremal number by exhaustive search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--pattern", choices=SEARCH_KINDS, required=True)
    s.add_argument("--geometry", choices=("cgh", "abstract"), default="cgh")
    s.add_argument("--budget", type=int, default=None, help="node limit")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--group", choices=GROUPS, default=None)
    s.add_argument("-o", "--out", help="write the extremal witness here")
    s.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="certify freeness and check end counting")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--pattern", choices=SEARCH_KINDS, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--k-max", type=int, default=None, help="end-counting range (default: k)")
    v.add_argument("--json", action="store_true")

    e = sub.add_parser("experiment", help="random block-coloring Monte Carlo")
    e.add_argument("--in", dest="infile", required=True)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--trials", type=int, default=10_000)
    e.add_argument("--json", action="store_true")
    return p


def _need(args, *names: str) -> None:
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise _UsageError(f"{args.family} needs {', '.join(missing)}")


def _construct(args) -> tuple[int, str]:
    fam = args.family
    if fam == "stack_free":
        _need(args, "n", "r", "k")
        H = constructions.stack_free(args.n, args.r, args.k)
    elif fam == "short_side":
        _need(args, "n", "r", "k")
        H = constructions.short_side(args.n, args.r, args.k)
    elif fam == "clique_union":
        _need(args, "n", "k")
        H = constructions.clique_union(args.n, args.k)
    elif fam == "transversal":
        _need(args, "n", "r", "k")
        H = constructions.transversal_blocks(args.n, args.r, args.k)
    else:
        _need(args, "infile")
        H = constructions.lift_plus(formats.read(args.infile), args.m)
    text = formats.dumps(H)
    if args.out:
        formats.write(H, args.out)
        return EXIT_OK, f"wrote {len(H)} edges to {args.out}"
    return EXIT_OK, text.rstrip("\n")


def _detect(args) -> tuple[int, str]:
    H = formats.read(args.infile)
    w = find_pattern(H, args.pattern, args.k)
    if args.json:
        return (EXIT_FOUND if w else EXIT_OK), json.dumps({"free": w is None, "witness": w.to_dict() if w else None})
    if w is None:
        return EXIT_OK, "free"
    return EXIT_FOUND, f"found {w.kind} sequence {' '.join(map(str, w.sequence))}"


def _bound(args) -> tuple[int, str]:
    rows = bound_table(args.n, args.r, args.k)
    if args.json:
        return EXIT_OK, json.dumps(rows, indent=2)
    lines = [f"bounds for n={args.n} r={args.r} k={args.k}"]
    for row in rows:
        if row["applicable"]:
            lines.append(f"  {row['kind']:<14} {row['value']:<28} ~{row['float']:.4f}   {row['note']}")
        else:
            lines.append(f"  {row['kind']:<14} n/a (requires {', '.join(row['requires'])})")
    return EXIT_OK, "\n".join(lines)


def _search(args) -> tuple[int, str]:
    res = exact_extremal(args.n, args.r, args.k, args.pattern, args.geometry == "cgh",
                         budget=args.budget, group=args.group, threads=args.threads)
    if args.out:
        formats.write(res.witness, args.out)
    status = EXIT_OK if res.certificate == "exhaustive" else EXIT_BUDGET
    if args.json:
        return status, json.dumps(res.to_dict(), indent=2)
    lines = [
        f"value {res.value}",
        f"certificate {res.certificate}",
        f"nodes {res.nodes_explored}",
        f"time {res.wall_time:.3f}s",
        f"group {res.group}",
    ]
    if res.note:
        lines.append(f"note {res.note}")
    lines.append("witness " + "; ".join(" ".join(map(str, e)) for e in res.witness.sorted_edges()))
    return status, "\n".join(lines)


def _verify(args) -> tuple[int, str]:
    H = formats.read(args.infile)
    cert = verify_family(H, args.pattern, args.k)
    report = {"family": cert.to_dict()}
    counting = None
    if H.geometric and H.r % 2 == 0:
        counting = verify_counting(H, args.k_max or args.k)
        report["counting"] = counting.to_dict()
    status = EXIT_OK if cert.free and (counting is None or counting.ok) else EXIT_FOUND
    if args.json:
        return status, json.dumps(report, indent=2)
    lines = [f"{'free' if cert.free else 'pattern found'}, {cert.edge_count} edges"]
    if cert.witness is not None:
        lines.append("witness " + " ".join(map(str, cert.witness.sequence)))
    if counting is not None:
        lines.append(f"end counting: {counting.violations} violations")
        for row in counting.rows:
            lines.append(f"  k={row.k} |S|={row.S} |T|={row.T} |S_next|={row.S_next} "
                         f"lower={row.lower_bound} T_bound={row.T_bound} "
                         f"{'ok' if row.extension_ok and row.stuck_ok and row.lower_ok else 'FAIL'}")
    return status, "\n".join(lines)


def _experiment(args) -> tuple[int, str]:
    H = formats.read(args.infile)
    rep = random_partition_experiment(H, args.seed, args.trials)
    if args.json:
        return EXIT_OK, json.dumps(rep.to_dict(), indent=2)
    lines = [
        f"trials {rep.trials} seed {rep.seed}",
        f"mean |G| {rep.mean_G:.4f} (target {rep.target_G} = {float(rep.target_G):.4f}, stderr {rep.stderr:.4f})",
    ]
    for i, (m, se) in enumerate(zip(rep.mean_shadow_i, rep.stderr_shadow_i)):
        lines.append(f"mean |shadow_{i} G| {m:.4f} (bound {float(rep.bound_shadow):.4f}, stderr {se:.4f})")
    return EXIT_OK, "\n".join(lines)


HANDLERS = {
    "construct": _construct,
    "detect": _detect,
    "bound": _bound,
    "search": _search,
    "verify": _verify,
    "experiment": _experiment,
}


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    try:
        args = build_parser().parse_args(list(argv))
        return HANDLERS[args.command](args)
    except _UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}"
    except formats.FormatError as exc:
        return EXIT_USAGE, f"input error: {exc}"
    except (DomainError, UnsupportedPatternError) as exc:
        return EXIT_USAGE, f"error: {exc}"
    except OSError as exc:
        return EXIT_USAGE, f"error: {exc}"


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, report = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status in (EXIT_OK, EXIT_FOUND, EXIT_BUDGET) else sys.stderr
    print(report, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
