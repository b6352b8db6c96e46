"""Command-line front end.

Exit codes: 0 ok, 1 a verification claim failed, 2 usage or unknown name,
3 malformed or inconsistent data, 4 a size bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import catalog, configs, graphs, hyperbolic, maps, verify
from .configs import Configuration
from .errors import BoundExceeded
from .graphs import Multigraph
from .maps import RegularMap
from .perm import Perm, compose

EXIT_FAIL, EXIT_USAGE, EXIT_DATA, EXIT_BOUND = 1, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _serialize(obj, fmt: str) -> str:
    if isinstance(obj, Multigraph):
        if fmt == "json":
            raise UsageError("graphs are written as text or dot")
        return graphs.to_dot(obj) if fmt == "dot" else graphs.to_text(obj)
    if fmt == "dot":
        g = maps.underlying_graph(obj) if isinstance(obj, RegularMap) else configs.levi_graph(obj)
        return graphs.to_dot(g)
    if isinstance(obj, RegularMap):
        return maps.map_to_json(obj) + "\n"
    return configs.to_json(obj) + "\n"


def load(path: str) -> Multigraph | RegularMap | Configuration:
    """Read a graph text file, a map JSON file or a configuration JSON file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from None
    if not text.lstrip().startswith("{"):
        return graphs.from_text(text)
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc.msg})") from None
    if isinstance(record, dict) and "x" in record and "y" in record:
        return maps.map_from_json(record)
    return configs.from_json(record)


def cmd_catalog(args) -> int:
    rows = [(e.name, e.kind, e.provenance) for e in catalog.entries()]
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    for name, kind, prov in rows:
        print(f"{name.ljust(w0)}  {kind.ljust(w1)}  {prov}")
    return 0


def cmd_build(args) -> int:
    obj = catalog.build(args.name)
    fmt = args.format or ("text" if isinstance(obj, Multigraph) else "json")
    _emit(_serialize(obj, fmt), args.output)
    return 0


def analyze_configuration(c: Configuration, from_graph: bool = False) -> dict:
    s = configs.summarize(c)
    out = {"summary": s.as_dict()}
    pent = configs.pentagonal_check(c)
    out["pentagonal"] = {"holds": pent.holds, "witness": list(pent.failure_witness) if pent.failure_witness else None}
    d = s.linear_dimension
    if d is not None and d >= 2:
        gp = configs.generalized_pentagonal_check(c, d)
        out["generalized_pentagonal"] = {"d": d, "holds": gp.holds, "count_formula": gp.count_formula}
    if c.point_count == c.block_count:
        out["natural_polarity"] = configs.natural_polarity_holds(c)
        try:
            out["self_polar"] = configs.find_polarity(c) is not None
        except BoundExceeded:
            out["self_polar"] = None
    comps = configs.split_components(c)
    out["components"] = [configs.summarize(x).as_dict() for x in comps]
    out["automorphism_order"] = configs.automorphism_order(c)
    if from_graph:
        out["neighborhood_geometry_of_graph"] = True
    return out


def analyze_graph(g: Multigraph) -> dict:
    bip, _ = graphs.is_bipartite(g)
    girth = graphs.girth(g)
    diam = graphs.diameter(g)
    aut = graphs.automorphism_group(g)
    return {
        "graph": {
            "vertices": g.vertex_count,
            "edges": g.edge_count,
            "simple": g.is_simple(),
            "regular_degree": g.regular_degree(),
            "bipartite": bip,
            "girth": girth if girth != float("inf") else None,
            "diameter": diam if diam != float("inf") else None,
            "components": len(graphs.connected_components(g)),
            "four_cycle": graphs.has_four_cycle(g),
            "moore": configs.moore_graph_check(g),
            "automorphism_order": aut.order,
            "vertex_transitive": aut.vertex_transitive,
            "arc_transitive": aut.arc_transitive,
        },
        "geometry": analyze_configuration(configs.neighborhood_geometry(g), True),
    }


def cmd_analyze(args) -> int:
    obj = load(args.file)
    if isinstance(obj, RegularMap):
        v, e, f = obj.counts
        result = {"map": {"p": obj.pair.p, "q": obj.pair.q, "V": v, "E": e, "F": f, "genus": obj.genus}}
        result.update(analyze_graph(maps.underlying_graph(obj)))
    elif isinstance(obj, Multigraph):
        result = analyze_graph(obj)
    else:
        result = analyze_configuration(obj)
    print(json.dumps(result, indent=1))
    return 0


_TOKEN = re.compile(r"([abstxyz])(?:\^(-?\d+))?")


def parse_word(m: RegularMap, word: str) -> Perm:
    """Evaluate a word such as ``ab^-1`` or ``x y^2`` in the map's group."""
    letters = {"x": m.pair.x, "y": m.pair.y, "z": m.pair.z}
    if m.translation_basis is not None:
        letters["a"], letters["b"] = m.translation_basis
    if m.yp is not None:
        letters["s"], letters["t"] = m.yp.s, m.yp.t
    compact = word.replace(" ", "").replace("*", "")
    if not compact:
        raise UsageError("empty element word")
    result = Perm.identity(m.pair.x.degree)
    pos = 0
    while pos < len(compact):
        tok = _TOKEN.match(compact, pos)
        if tok is None:
            raise UsageError(f"cannot parse element word {word!r} at {compact[pos:]!r}")
        name, power = tok.group(1), int(tok.group(2) or 1)
        if name not in letters:
            raise UsageError(f"generator {name!r} is not defined for map {m.name!r}")
        result = compose(result, letters[name] ** power)
        pos = tok.end()
    return result


def cmd_quotient(args) -> int:
    kind = catalog.kind_of(args.map)
    if kind != "map":
        raise UsageError(f"{args.map!r} is a {kind}, not a map")
    m = catalog.build(args.map)
    h = parse_word(m, args.element)
    q = maps.pgonal_quotient(m, h)
    _emit(graphs.to_dot(q) if args.format == "dot" else graphs.to_text(q), args.output)
    return 0


def cmd_render(args) -> int:
    spec = hyperbolic.TilingSpec(args.p, args.q)
    patch = hyperbolic.build_patch(spec, args.depth)
    svg = hyperbolic.render_svg(
        patch,
        show_circles=not args.no_circles,
        show_edges=not args.no_edges,
        show_vertices=not args.no_vertices,
        size=args.size,
    )
    Path(args.output).write_text(svg)
    if args.json:
        Path(args.json).write_text(json.dumps(hyperbolic.patch_to_json(patch)) + "\n")
    return 0


def cmd_verify(args) -> int:
    if args.suite != "paper":
        raise UsageError(f"unknown suite {args.suite!r}")
    report = verify.run_paper_suite()
    print(report.table())
    record = json.dumps(report.as_dict(), indent=1)
    if args.json:
        Path(args.json).write_text(record + "\n")
    else:
        print(record)
    return 0 if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pointcircle", description="Point-circle configurations on maps, graphs and hyperbolic tilings.")
    parser.add_argument("--seed", type=int, help="accepted for interface stability; every algorithm is deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list named objects").set_defaults(func=cmd_catalog)

    p = sub.add_parser("build", help="write a named object")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=["text", "dot", "json"])
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="summarize a graph, map or configuration file")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("quotient", help="quotient a map's graph by the orbits of a group element")
    p.add_argument("map")
    p.add_argument("element", help="word in x, y, z (and a, b, s, t for yp maps), e.g. 'ab^-1'")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=["text", "dot"], default="text")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("render", help="draw a {p,q} tiling patch with its neighbour circles")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--json", help="also write the patch coordinates")
    p.add_argument("--size", type=int, default=800)
    p.add_argument("--no-circles", action="store_true")
    p.add_argument("--no-edges", action="store_true")
    p.add_argument("--no-vertices", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["paper"])
    p.add_argument("--json", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, catalog.UnknownName) as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
