"""Command-line front end.

    homodigraph generate SPEC [-o FILE]
    homodigraph check WHAT BALL [-s S] [-t T] [-k K] [-u U] [-v V] [--cut ...]
    homodigraph analyze WHAT BALL
    homodigraph export BALL [--classes] [--match]
    homodigraph census [-n N] [-o FILE] [--csv] [--force]

Exit codes: 0 verified or exact-true, 1 refuted or exact-false (or census
found something unexpected), 2 parse error or unreadable ball, 3 construction
error, 4 inconclusive.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .digraph import FiniteBall
from .errors import HomodigraphError, InputError, SpecParseError
from .families import build, parse_spec
from .families.base import LabeledBall
from .manifest import defaults_for
from . import census as census_mod
from . import reachability as reach
from . import serialize, structure, symmetry

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUILD, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4

_VERDICT_EXIT = {
    symmetry.VERIFIED: EXIT_OK,
    symmetry.EXACT_TRUE: EXIT_OK,
    symmetry.REFUTED: EXIT_FAIL,
    symmetry.EXACT_FALSE: EXIT_FAIL,
    symmetry.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _vertex(lb: LabeledBall, token: str | None) -> int:
    if token is None or token == "center":
        return lb.ball.center
    if token.isdigit() and int(token) in lb.labels:
        return int(token)
    return lb.id_of(token)


def cmd_generate(args) -> int:
    try:
        spec = parse_spec(args.spec)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        lb = build(spec)
    except HomodigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUILD
    text = serialize.dumps(lb)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _report_exit(report: symmetry.CheckReport, lb: LabeledBall) -> int:
    _emit(report.to_json(lb.labels))
    return _VERDICT_EXIT[report.verdict]


def cmd_check(args, lb: LabeledBall) -> int:
    defaults = defaults_for(lb.family)
    b = lb.ball
    what = args.what
    if what == "c-homog":
        rep = symmetry.check_c_homogeneity(b, args.s or defaults["s"], args.t or defaults["t"])
        return _report_exit(rep, lb)
    if what == "k-arc":
        rep = symmetry.check_k_arc_transitivity(b, args.k or defaults["k"], args.t or 1)
        return _report_exit(rep, lb)
    if what == "property-z":
        lf = structure.level_assignment(b)
        if lf.consistent:
            rep = symmetry.CheckReport(symmetry.VERIFIED, None, {}, {"vertices": len(lf.levels)},
                                       "every cycle of the ball is balanced")
        else:
            rep = symmetry.CheckReport(symmetry.REFUTED,
                                       {"cycle": lf.conflict_cycle, "signs": lf.signs,
                                        "orientationSum": lf.orientation_sum},
                                       {}, {}, "unbalanced closed walk")
        return _report_exit(rep, lb)
    if what in ("desc-tree", "anc-tree"):
        u = _vertex(lb, args.u)
        rep = structure.is_desc_tree(b, u, "desc" if what == "desc-tree" else "anc")
        return _report_exit(rep, lb)
    if what == "path-length":
        rep = structure.path_length_uniformity(b, _vertex(lb, args.u), _vertex(lb, args.v))
        return _report_exit(rep, lb)
    if what == "triangles":
        tp = structure.triangle_profile(b, _vertex(lb, args.u))
        _emit({"center": lb.labels[tp.center],
               "triangles": [[lb.labels[v] for v in t] for t in tp.triangles],
               "residue": sorted(lb.labels[v] for v in tp.residue),
               "disjointApartFromCenter": tp.disjoint_apart_from_center})
        return EXIT_OK
    if what == "ends":
        cut = [_vertex(lb, c) for c in (args.cut or [])]
        _emit({"cut": [lb.labels[v] for v in cut], "boundaryComponents": structure.ends_probe(b, cut)})
        return EXIT_OK
    raise InputError(f"unknown check {what!r}")


def cmd_analyze(args, lb: LabeledBall) -> int:
    b = lb.ball
    g = b.graph
    part = reach.arc_classes(g)
    if args.what == "reachability":
        reports = [reach.reachability_digraph(b, min(c), partition=part) for c in part.classes]
        complete = [r for r in reports if r.completeness == "complete"]
        center_arcs = sorted(a for a in g.arcs if b.center in a)
        main = reach.reachability_digraph(b, center_arcs[0], partition=part) if center_arcs else None
        _emit({
            "classes": len(reports),
            "completeClasses": len(complete),
            "completeFamilies": dict(Counter(r.family for r in complete)),
            "family": complete[0].family if complete else None,
            "universalAtScale": any(r.universal_at_scale for r in reports),
            "centerClass": main.to_json(lb.labels) if main else None,
        })
        return EXIT_OK
    if args.what == "intersection":
        frag = reach.intersection_fragment(b)
        out = {"vertices": len(frag.vertices), "arcs": len(frag.arcs),
               "undirectedPairs": len(frag.edges)}
        if lb.family.startswith("m:"):
            n, k = (int(x) for x in lb.family[2:].split("@")[0].split(","))
            hit = reach.match_free_product_fragment(frag, n, k)
            out["freeProductBall"] = None if hit is None else {"n": n, "k": k, "radius": hit[0]}
        _emit(out)
        return EXIT_OK
    if args.what == "match":
        mr = reach.match_relation(b)
        _emit({"pairs": [[lb.labels[x], lb.labels[y]] for x, y in sorted(mr.pairs)],
               "witnesses": [[lb.labels[x], lb.labels[y], lb.labels[z], lb.labels[t]]
                             for (x, y), (z, t) in sorted(mr.witnesses.items())]})
        return EXIT_OK
    raise InputError(f"unknown analysis {args.what!r}")


def export_dot(lb: LabeledBall, classes: bool = False, match: bool = False) -> str:
    """DOT text; interior vertices solid, boundary dashed, optional class colours
    and dotted undirected lines for matched pairs."""
    b = lb.ball
    g = b.graph
    palette = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
               "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]
    lines = ["digraph ball {"]
    styled = classes or match
    for v in g.vertices:
        attrs = [f'label="{lb.labels[v]}"']
        if styled:
            attrs.append('style="solid"' if v in b.interior else 'style="dashed"')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    class_of = reach.arc_classes(g).class_of if classes else {}
    for u, v in g.sorted_arcs():
        if classes:
            lines.append(f'  {u} -> {v} [color="{palette[class_of[(u, v)] % len(palette)]}"];')
        else:
            lines.append(f"  {u} -> {v};")
    if match:
        for x, y in sorted(reach.match_relation(b).pairs):
            if x < y or (y, x) not in reach.match_relation(b).pairs:
                lines.append(f"  {x} -> {y} [style=dotted, dir=none, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(args, lb: LabeledBall) -> int:
    text = export_dot(lb, args.classes, args.match)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_census(args) -> int:
    try:
        res = census_mod.census_c_homogeneous(args.n, allow_large=args.force)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.csv:
        text = res.to_csv()
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(res.to_json(), args.output)
    return EXIT_FAIL if res.unexpected else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="homodigraph", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a family ball and write it as JSON")
    g.add_argument("spec")
    g.add_argument("-o", "--output")

    c = sub.add_parser("check", help="run a symmetry or structure check on a ball")
    c.add_argument("what", choices=["c-homog", "k-arc", "property-z", "desc-tree", "anc-tree",
                                    "path-length", "triangles", "ends"])
    c.add_argument("ball")
    c.add_argument("-s", type=int)
    c.add_argument("-t", type=int)
    c.add_argument("-k", type=int)
    c.add_argument("-u", help="vertex id, label, or 'center'")
    c.add_argument("-v", help="second vertex for path-length")
    c.add_argument("--cut", nargs="*", help="vertex ids or labels to remove (ends)")

    a = sub.add_parser("analyze", help="reachability classes, intersection digraph, matched pairs")
    a.add_argument("what", choices=["reachability", "intersection", "match"])
    a.add_argument("ball")

    e = sub.add_parser("export", help="DOT rendering of a ball")
    e.add_argument("ball")
    e.add_argument("--classes", action="store_true", help="colour arcs by reachability class")
    e.add_argument("--match", action="store_true", help="dotted lines for matched pairs")
    e.add_argument("-o", "--output")

    s = sub.add_parser("census", help="census of C-homogeneous bipartite graphs")
    s.add_argument("-n", type=int, default=census_mod.DEFAULT_MAX)
    s.add_argument("-o", "--output")
    s.add_argument("--csv", action="store_true")
    s.add_argument("--force", action="store_true", help="allow n above the default guard")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "generate":
        return cmd_generate(args)
    if args.command == "census":
        return cmd_census(args)
    try:
        lb = serialize.load(args.ball)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    handlers = {"check": cmd_check, "analyze": cmd_analyze, "export": cmd_export}
    try:
        return handlers[args.command](args, lb)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
