"""Command-line front end.

One binary with subcommands; JSON output is opt-in via --json.  Exit
codes: 0 = success / property true, 1 = property false (not an absolute
retract, no retraction, embedding not isometric, ...), 2 = input or
precondition error.
"""

import argparse
import json
import sys

from .graphs import DgParseError, is_acyclic, is_oriented, parse_dg
from .metric import distance_matrix, matrix_to_json
from .retracts import (
    embed_zigzag_product,
    injective_hull_search,
    is_absolute_retract,
    obstruction_check,
    retraction_search,
)
from .selftest import theorem_consistency
from .upsets import is_macneille_closed
from .words import format_word


def _fmt_upset(x):
    return "{" + ", ".join(format_word(g) for g in x.generators) + "}"


def _load(path):
    try:
        with open(path) as fh:
            return parse_dg(fh.read())
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(2) from exc
    except DgParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(2) from exc


def _emit(args, data, text_lines):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_analyze(args):
    g = _load(args.graph)
    m = distance_matrix(g)
    obs = obstruction_check(g)
    closure = {
        (x, y): is_macneille_closed(d) for (x, y), d in m.pairs() if x != y
    }
    lines = [
        f"vertices: {len(g.vertices)}  arcs: {len(g.arcs)}",
        f"oriented: {is_oriented(g)}",
        f"acyclic: {is_acyclic(g)}",
        f"obstructions: {'none' if obs.clean else 'found'}",
    ]
    if obs.two_cycles:
        lines.append(f"  2-cycles: {list(obs.two_cycles)}")
    if obs.directed_cycle:
        lines.append(f"  directed cycle: {list(obs.directed_cycle)}")
    for v in obs.transitivity_violations:
        lines.append(
            f"  conditional transitivity: arc {v['arc']} over path "
            f"{list(v['path'])}, missing arc {v['missing']}"
        )
    lines.append("distances:")
    for x in g.vertices:
        for y in g.vertices:
            if x == y:
                continue
            mark = "" if closure[x, y] else "  [not closed]"
            lines.append(f"  d({x},{y}) = {_fmt_upset(m[x, y])}{mark}")
    data = {
        "oriented": is_oriented(g),
        "acyclic": is_acyclic(g),
        "obstructions": {
            "clean": obs.clean,
            "two_cycles": [list(p) for p in obs.two_cycles],
            "directed_cycle": list(obs.directed_cycle)
            if obs.directed_cycle
            else None,
            "transitivity_violations": [
                {
                    "arc": list(v["arc"]),
                    "path": list(v["path"]),
                    "missing": list(v["missing"]),
                }
                for v in obs.transitivity_violations
            ],
        },
        "matrix": matrix_to_json(m),
        "closed": {f"{x},{y}": c for (x, y), c in closure.items()},
    }
    _emit(args, data, lines)
    return 0


def _cmd_distance(args):
    g = _load(args.graph)
    if args.x not in g.vertices or args.y not in g.vertices:
        print("error: unknown vertex", file=sys.stderr)
        return 2
    d = distance_matrix(g)[args.x, args.y]
    _emit(
        args,
        {"distance": [format_word(w) for w in d.generators]},
        [_fmt_upset(d)],
    )
    return 0


def _cmd_check_ar(args):
    g = _load(args.graph)
    rep = is_absolute_retract(g)
    lines = [
        f"oriented: {rep.oriented}",
        f"balls 2-Helly: {rep.helly.ok}",
        f"all distances closed: {not rep.unclosed_pairs}",
        f"acyclic: {rep.acyclic}",
        f"absolute retract: {rep.verdict}",
    ]
    if not rep.helly.ok:
        lines.append("Helly witness (pairwise intersecting, empty intersection):")
        for c, r, b in rep.helly.witness:
            members = ",".join(str(v) for v in sorted(b, key=g.vertices.index))
            lines.append(f"  B({c}, {format_word(r)}) = {{{members}}}")
    for a in rep.anomalies:
        lines.append(f"ANOMALY: {a}")
    data = {
        "oriented": rep.oriented,
        "helly": rep.helly.ok,
        "helly_witness": [
            {
                "center": str(c),
                "radius": format_word(r),
                "ball": sorted(str(v) for v in b),
            }
            for c, r, b in rep.helly.witness
        ],
        "unclosed_pairs": [[str(x), str(y)] for x, y in rep.unclosed_pairs],
        "acyclic": rep.acyclic,
        "verdict": rep.verdict,
        "anomalies": list(rep.anomalies),
    }
    _emit(args, data, lines)
    return 0 if rep.verdict else 1


def _cmd_embed(args):
    g = _load(args.graph)
    cert = embed_zigzag_product(g, bound=args.bound)
    lines = [
        f"factors: {len(cert.factors)}",
        "words: " + " ".join(format_word(u) for u in cert.factors),
    ]
    for v in g.vertices:
        lines.append(f"  {v} -> {cert.coords[v]}")
    lines.append(f"isometric: {cert.isometric}")
    if cert.failing_pair:
        lines.append(f"failing pair: {cert.failing_pair}")
    _emit(args, cert.to_json(), lines)
    return 0 if cert.isometric else 1


def _cmd_hull(args):
    g = _load(args.graph)
    res = injective_hull_search(g, max_add=args.max_add)
    lines = [f"result: {res.reason}"]
    if res.hull is not None:
        lines.append(f"added vertices: {len(res.added)}")
        for v in res.added:
            lines.append(f"  + {v}")
        lines.append(f"hull size: {len(res.hull.vertices)}")
    data = {
        "reason": res.reason,
        "added": [str(v) for v in res.added],
        "hull_vertices": [str(v) for v in res.hull.vertices]
        if res.hull
        else None,
        "hull_arcs": sorted(
            [str(a), str(b)] for a, b in res.hull.arcs
        )
        if res.hull
        else None,
    }
    _emit(args, data, lines)
    return 0 if res.reason == "found" else 1


def _cmd_retract(args):
    h = _load(args.host)
    g = _load(args.sub)
    try:
        r = retraction_search(h, g)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if r is None:
        _emit(args, {"retraction": None}, ["no retraction"])
        return 1
    lines = [f"  {v} -> {r.mapping[v]}" for v in h.vertices]
    _emit(
        args,
        {"retraction": {str(v): str(r.mapping[v]) for v in h.vertices}},
        ["retraction:"] + lines,
    )
    return 0


def _cmd_selftest(args):
    rep = theorem_consistency(max_n=args.max_n)
    lines = [
        f"graphs checked: {rep.graphs_checked} (n <= {rep.max_n})",
        f"absolute retracts found: {rep.ar_count}",
        f"retraction searches: {rep.retractions_checked}",
        f"failures: {len(rep.failures)}",
    ]
    for desc, g in rep.failures:
        lines.append(f"  FAIL {desc} on arcs {sorted(g.arcs)}")
    data = {
        "graphs_checked": rep.graphs_checked,
        "ar_count": rep.ar_count,
        "retractions_checked": rep.retractions_checked,
        "failures": [desc for desc, _ in rep.failures],
    }
    _emit(args, data, lines)
    return 0 if rep.ok else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="zigzagmetric",
        description="Zigzag-word metrics on reflexive directed graphs: "
        "distances, absolute-retract checks, embeddings and hulls.",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("analyze", _cmd_analyze, "full report on a .dg graph")
    sp.add_argument("graph")
    sp = add("distance", _cmd_distance, "distance antichain between two vertices")
    sp.add_argument("graph")
    sp.add_argument("x")
    sp.add_argument("y")
    sp = add("check-ar", _cmd_check_ar, "absolute-retract verdict")
    sp.add_argument("graph")
    sp = add("embed", _cmd_embed, "embed into a product of zigzags")
    sp.add_argument("graph")
    sp.add_argument("--bound", type=int, default=None,
                    help="word-length bound for disconnected pairs (default 2|V|)")
    sp = add("hull", _cmd_hull, "search for a minimal absolute-retract extension")
    sp.add_argument("graph")
    sp.add_argument("--max-add", type=int, default=2,
                    help="budget of added vertices (default 2)")
    sp = add("retract", _cmd_retract, "retraction of HOST onto isometric SUB")
    sp.add_argument("host")
    sp.add_argument("sub")
    sp = add("selftest", _cmd_selftest, "exhaustive theorem-consistency suite")
    sp.add_argument("--max-n", type=int, default=4,
                    help="largest vertex count to enumerate (default 4)")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
