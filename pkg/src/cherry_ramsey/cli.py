"""Command line front end.

Subcommands mirror the library: construct writes a coloring file, verify
checks one against a target list, partition and extract decompose
rainbow-triangle-free colorings, formula evaluates the closed forms, and
search runs the exhaustive engine.

Results go to stdout (coloring text or JSON), diagnostics to stderr.  Exit
status is 0 for a positive answer, 1 for a negative one (invalid coloring,
no witness, formula out of range), 2 for bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .construct import (
    cycle_vs_stars_construction,
    gallai_nested_construction,
    k10_six_coloring,
    matching_base_construction,
)
from .core import ColoredComplete, ParseError, parse, parse_target_list, serialize
from .detect import contains_target
from .formulas import (
    FormulaResult,
    cockayne_lorimer,
    debiasio_pm,
    faudree_schelp_paths,
    gr_cherries,
    irving,
    lb_cherries,
    r_cherries_dominant,
    r_cycle_vs_stars,
    r_k_2p3,
    r_k_t_cherries_rest_p3,
    scobee,
)
from .gallai import (
    BoundNotMet,
    NotGallai,
    find_rainbow_triangle,
    gallai_extract,
    gallai_partition,
    random_gallai,
)
from .search import (
    InconclusiveSearch,
    RamseyInstance,
    SearchStatus,
    compute_ramsey,
    exists_good_coloring,
)


def _counts(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty count list")
    return values


def _targets(text: str) -> tuple:
    try:
        return tuple(parse_target_list(text))
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _load(path: str) -> ColoredComplete:
    with open(path, encoding="ascii") as fh:
        return parse(fh.read())


def _emit_coloring(c: ColoredComplete, out: str | None) -> None:
    text = serialize(c)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
        print(f"wrote {c.n_vertices} vertices, {c.n_colors} colors to {out}",
              file=sys.stderr)


def _json(payload) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _witness_json(color: int, w) -> dict:
    return {"color": color, "kind": w.kind.value,
            "copies": [list(copy) for copy in w.copies]}


def _cmd_construct(args) -> int:
    if args.family == "k10":
        c = k10_six_coloring()
    elif args.family == "matching-base":
        c = matching_base_construction(len(args.counts), args.counts)
    elif args.family == "gallai-nested":
        c = gallai_nested_construction(len(args.counts), args.counts)
    elif args.family == "cycle-stars":
        c = cycle_vs_stars_construction(args.cycle, len(args.tail) + 1, args.tail)
    else:
        c = random_gallai(args.n, args.colors, args.seed)
    _emit_coloring(c, args.output)
    return 0


def _cmd_verify(args) -> int:
    c = _load(args.coloring)
    targets = args.targets
    if c.n_colors != len(targets):
        print(f"coloring has {c.n_colors} colors but {len(targets)} targets given",
              file=sys.stderr)
        return 2
    report = {"vertices": c.n_vertices, "colors": c.n_colors, "valid": True,
              "violations": []}
    if args.gallai:
        tri = find_rainbow_triangle(c)
        report["rainbow_triangle"] = list(tri) if tri else None
        if tri:
            report["valid"] = False
    for color, target in enumerate(targets, start=1):
        w = contains_target(c, color, target)
        if w is not None:
            report["valid"] = False
            report["violations"].append(_witness_json(color, w))
    _json(report)
    return 0 if report["valid"] else 1


def _cmd_partition(args) -> int:
    c = _load(args.coloring)
    try:
        gp = gallai_partition(c)
    except NotGallai:
        tri = find_rainbow_triangle(c)
        print(f"not rainbow-triangle-free: triangle {tri}", file=sys.stderr)
        return 1
    _json({
        "parts": [list(p) for p in gp.parts],
        "between_colors": list(gp.between_colors),
        "reduced": [{"i": i, "j": j, "color": col} for i, j, col in gp.reduced],
    })
    return 0


def _cmd_extract(args) -> int:
    c = _load(args.coloring)
    try:
        color, w = gallai_extract(c, args.targets)
    except (NotGallai, BoundNotMet) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    _json(_witness_json(color, w))
    return 0


def _result_json(r: FormulaResult) -> dict:
    return {"value": r.value, "applicable": r.applicable,
            "hypothesis_note": r.hypothesis_note}


def _cmd_formula(args) -> int:
    name = args.name
    if name == "lower-bound":
        res = FormulaResult(lb_cherries(len(args.counts), args.counts), True, None)
    elif name == "rainbow-free":
        res = FormulaResult(gr_cherries(len(args.counts), args.counts), True, None)
    elif name == "dominant":
        res = r_cherries_dominant(len(args.counts), args.counts)
    elif name == "cycle-stars":
        res = r_cycle_vs_stars(len(args.tail) + 1, args.arity, args.cycle, args.tail)
    elif name == "two-cherries":
        res = r_k_2p3(args.colors)
    elif name == "t-cherries":
        res = r_k_t_cherries_rest_p3(args.t, args.colors)
    elif name == "single-stars":
        res = irving(args.colors)
    elif name == "matchings":
        res = cockayne_lorimer(args.counts)
    elif name == "paths":
        if len(args.counts) != 2:
            raise ValueError("paths needs exactly two copy counts")
        res = faudree_schelp_paths(args.order, args.counts[0], args.counts[1])
    elif name == "three-cherry-colors":
        if len(args.counts) != 3:
            raise ValueError("three-cherry-colors needs exactly three counts")
        res = scobee(*args.counts)
    else:
        res = debiasio_pm(args.counts)
    _json(_result_json(res))
    return 0 if res.applicable else 1


def _cmd_search(args) -> int:
    instance = RamseyInstance(args.targets, gallai_only=args.gallai)
    if args.compute:
        try:
            value = compute_ramsey(instance, n_hint=args.n, budget=args.budget)
        except InconclusiveSearch as exc:
            print(str(exc), file=sys.stderr)
            return 1
        _json({"instance": instance.describe(), "value": value})
        return 0
    if args.n is None:
        print("search needs --n unless --compute is given", file=sys.stderr)
        return 2
    out = exists_good_coloring(args.n, instance, budget=args.budget)
    payload = {
        "instance": instance.describe(),
        "n": args.n,
        "status": out.status.value,
        "nodes_explored": out.nodes_explored,
        "elapsed": round(out.elapsed, 6),
        "witness": serialize(out.witness) if out.witness else None,
    }
    _json(payload)
    if out.status is SearchStatus.WITNESS_FOUND and args.output:
        _emit_coloring(out.witness, args.output)
    return 0 if out.status is SearchStatus.WITNESS_FOUND else 1


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cherry-ramsey",
        description="exact Ramsey and rainbow-free Ramsey tooling for cherry unions")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write an extremal coloring")
    fam = p.add_subparsers(dest="family", required=True)
    f = fam.add_parser("k10", help="sporadic six-coloring of K_10")
    f = fam.add_parser("matching-base",
                       help="matching base plus one block per color")
    f.add_argument("--counts", type=_counts, required=True,
                   help="cherry counts per color, e.g. 3,1,1")
    f = fam.add_parser("gallai-nested",
                       help="nested substitution, rainbow-triangle-free")
    f.add_argument("--counts", type=_counts, required=True)
    f = fam.add_parser("cycle-stars", help="long-cycle color plus star colors")
    f.add_argument("--cycle", type=int, required=True, help="forbidden cycle length")
    f.add_argument("--tail", type=_counts, required=True,
                   help="star-forest copy counts for colors 2..k")
    f = fam.add_parser("random-gallai",
                       help="seeded random rainbow-triangle-free coloring")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--colors", type=int, required=True)
    f.add_argument("--seed", type=int, default=0)
    for f in fam.choices.values():
        f.add_argument("-o", "--output", default=None, help="write here instead of stdout")

    p = sub.add_parser("verify", help="check a coloring against its targets")
    p.add_argument("coloring", help="coloring file")
    p.add_argument("--targets", type=_targets, required=True,
                   help="comma list, e.g. 3P3,P3,P3,P3,P3,P3")
    p.add_argument("--gallai", action="store_true",
                   help="also require no rainbow triangle")

    p = sub.add_parser("partition", help="recover the maximum Gallai partition")
    p.add_argument("coloring")

    p = sub.add_parser("extract", help="pull a guaranteed monochromatic target")
    p.add_argument("coloring")
    p.add_argument("--targets", type=_targets, required=True)

    p = sub.add_parser("formula", help="evaluate a closed form")
    forms = p.add_subparsers(dest="name", required=True)
    f = forms.add_parser("lower-bound", help="general cherry lower bound")
    f.add_argument("--counts", type=_counts, required=True)
    f = forms.add_parser("rainbow-free", help="rainbow-free cherry value")
    f.add_argument("--counts", type=_counts, required=True)
    f = forms.add_parser("dominant", help="cherry value when one count dominates")
    f.add_argument("--counts", type=_counts, required=True)
    f = forms.add_parser("cycle-stars", help="long cycle versus star forests")
    f.add_argument("--cycle", type=int, required=True)
    f.add_argument("--arity", type=int, required=True)
    f.add_argument("--tail", type=_counts, required=True)
    f = forms.add_parser("two-cherries", help="2P3 first, lone cherries after")
    f.add_argument("--colors", type=int, required=True)
    f = forms.add_parser("t-cherries", help="tP3 first, lone cherries after")
    f.add_argument("--t", type=int, required=True)
    f.add_argument("--colors", type=int, required=True)
    f = forms.add_parser("single-stars", help="lone cherries in every color")
    f.add_argument("--colors", type=int, required=True)
    f = forms.add_parser("matchings", help="matchings in every color")
    f.add_argument("--counts", type=_counts, required=True)
    f = forms.add_parser("paths", help="two path colors")
    f.add_argument("--order", type=int, required=True, help="path vertex count")
    f.add_argument("--counts", type=_counts, required=True,
                   help="two copy counts, larger first")
    f = forms.add_parser("three-cherry-colors", help="three cherry-union colors")
    f.add_argument("--counts", type=_counts, required=True)
    f = forms.add_parser("perfect-matchings", help="near-perfect matching colors")
    f.add_argument("--counts", type=_counts, required=True)

    p = sub.add_parser("search", help="exhaustive search for a good coloring")
    p.add_argument("--targets", type=_targets, required=True)
    p.add_argument("--n", type=int, default=None, help="number of vertices")
    p.add_argument("--gallai", action="store_true")
    p.add_argument("--budget", type=int, default=None, help="node limit")
    p.add_argument("--compute", action="store_true",
                   help="walk n until the least bad order is found")
    p.add_argument("-o", "--output", default=None,
                   help="also write a found witness here")
    return top


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "partition": _cmd_partition,
    "extract": _cmd_extract,
    "formula": _cmd_formula,
    "search": _cmd_search,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ParseError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
