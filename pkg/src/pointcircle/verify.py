"""The claim suite behind ``pointcircle verify paper``.

Claims are grouped by acceptance criterion; each records what was expected,
what was observed and how long it took.  Combinatorial claims compare
exactly, numeric ones against a fixed tolerance.
"""

from __future__ import annotations

import random
import time
import xml.etree.ElementTree as ET
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable

from . import catalog, configs, graphs, hyperbolic, maps
from .configs import (
    concurrence_counts,
    deficiency_graph,
    dual,
    find_polarity,
    generalized_pentagonal_check,
    is_isomorphic,
    levi_graph,
    natural_polarity_holds,
    neighborhood_geometry,
    pentagonal_check,
    split_components,
    summarize,
)
from .graphs import cycle, generalized_petersen, graph_isomorphic

RANDOM_SEED = 20140601


@dataclass
class Claim:
    claim_id: str
    statement: str
    expected: Any
    observed: Any
    passed: bool
    runtime: float

    def as_dict(self) -> dict:
        return {
            "id": self.claim_id,
            "statement": self.statement,
            "expected": _jsonable(self.expected),
            "observed": _jsonable(self.observed),
            "pass": self.passed,
            "runtime": round(self.runtime, 4),
        }


def _jsonable(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return str(x)


@dataclass
class VerificationReport:
    claims: list[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def as_dict(self) -> dict:
        return {"passed": self.passed, "claims": [c.as_dict() for c in self.claims]}

    def table(self) -> str:
        rows = [("id", "result", "expected", "observed", "seconds")]
        for c in self.claims:
            rows.append((c.claim_id, "PASS" if c.passed else "FAIL", _short(c.expected), _short(c.observed), f"{c.runtime:.3f}"))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        lines.insert(1, "  ".join("-" * w for w in widths))
        failed = sum(not c.passed for c in self.claims)
        lines.append(f"{len(self.claims) - failed}/{len(self.claims)} claims passed")
        return "\n".join(lines)


def _short(x, limit: int = 40) -> str:
    s = str(_jsonable(x))
    return s if len(s) <= limit else s[: limit - 3] + "..."


class _Recorder:
    def __init__(self, report: VerificationReport, prefix: str):
        self.report = report
        self.prefix = prefix

    def _add(self, cid, statement, expected, observed, passed, t0):
        self.report.claims.append(Claim(f"{self.prefix}.{cid}", statement, expected, observed, passed, time.perf_counter() - t0))

    def equal(self, cid: str, statement: str, expected, fn: Callable[[], Any]) -> Any:
        t0 = time.perf_counter()
        observed = fn()
        self._add(cid, statement, expected, observed, observed == expected, t0)
        return observed

    def at_most(self, cid: str, statement: str, bound: float, fn: Callable[[], float]) -> float:
        t0 = time.perf_counter()
        observed = fn()
        self._add(cid, statement, f"<= {bound:g}", observed, observed <= bound, t0)
        return observed


def _profile(c: configs.Configuration, x: int) -> dict[int, int]:
    return dict(sorted(Counter(concurrence_counts(c, x).values()).items()))


def _uniform_profile(c: configs.Configuration):
    """The concurrence-count histogram shared by every point, or the set of histograms."""
    profiles = {tuple(_profile(c, x).items()) for x in range(c.point_count)}
    return dict(profiles.pop()) if len(profiles) == 1 else sorted(profiles)


def _is_perfect_matching(g: graphs.Multigraph) -> bool:
    return g.regular_degree() == 1


def klein_suite(rec: _Recorder) -> None:
    m = catalog.klein_map()
    rec.equal("counts", "Klein {3,7} map V, E, F", (56, 84, 24), lambda: m.counts)
    rec.equal("genus", "Klein map genus", 3, lambda: m.genus)
    c = neighborhood_geometry(maps.underlying_graph(m))
    s = summarize(c)
    rec.equal("config", "56_3 balanced configuration", (56, 56, 3, 3, True), lambda: (s.v, s.b, s.r, s.k, s.balanced_vr))
    rec.equal("linear", "56_3 is linear", True, lambda: s.linear)
    rec.equal("polarity", "natural polarity of 56_3", True, lambda: natural_polarity_holds(c))
    rec.equal("bipartite", "underlying graph is not bipartite", False, lambda: graphs.is_bipartite(maps.underlying_graph(m))[0])
    dm = maps.dual_map(m)
    rec.equal("dual.counts", "dual map V, E, F", (24, 84, 56), lambda: dm.counts)
    dc = neighborhood_geometry(maps.underlying_graph(dm))
    ds = summarize(dc)
    rec.equal("dual.config", "24_7 configuration", (24, 24, 7, 7), lambda: (ds.v, ds.b, ds.r, ds.k))
    rec.equal("dual.dimension", "24_7 linear dimension", 2, lambda: ds.linear_dimension)
    rec.equal("dual.concurrence", "per point: 2 never concyclic, 21 concyclic twice", {0: 2, 2: 21}, lambda: _uniform_profile(dc))


def bring_suite(rec: _Recorder) -> None:
    m = catalog.bring_map()
    rec.equal("counts", "Bring {4,5} map V, E, F", (30, 60, 24), lambda: m.counts)
    rec.equal("genus", "Bring map genus", 4, lambda: m.genus)
    s = summarize(neighborhood_geometry(maps.underlying_graph(m)))
    rec.equal("config", "30_4 configuration", (30, 30, 4, 4), lambda: (s.v, s.b, s.r, s.k))
    rec.equal("linear", "30_4 is linear", True, lambda: s.linear)
    dm = maps.dual_map(m)
    dg = maps.underlying_graph(dm)
    rec.equal("dual.counts", "dual map V, E, F", (24, 60, 30), lambda: dm.counts)
    rec.equal("dual.bipartite", "dual graph is bipartite", True, lambda: graphs.is_bipartite(dg)[0])
    comps = split_components(neighborhood_geometry(dg))
    rec.equal("dual.components", "two component configurations", 2, lambda: len(comps))
    for i, c in enumerate(comps):
        cs = summarize(c)
        rec.equal(f"dual.{i}.config", "12_5 with linear dimension 2", (12, 12, 5, 5, 2), lambda: (cs.v, cs.b, cs.r, cs.k, cs.linear_dimension))
        rec.equal(f"dual.{i}.concurrence", "per point: 1 never concyclic, 10 concyclic twice", {0: 1, 2: 10}, lambda: _uniform_profile(c))
        rec.equal(f"dual.{i}.antipodal", "zero-concurrence relation is a perfect matching", True, lambda: _is_perfect_matching(deficiency_graph(c)))


def bolza_suite(rec: _Recorder) -> None:
    m = catalog.bolza_map()
    rec.equal("counts", "Bolza {3,8} map V, E, F", (16, 24, 6), lambda: m.counts)
    rec.equal("genus", "Bolza map genus", 2, lambda: m.genus)
    comps = split_components(neighborhood_geometry(maps.underlying_graph(m)))
    rec.equal("components", "two linear 8_3 components", [(8, 8, 3, 3, True)] * 2, lambda: [_shape(c) + (summarize(c).linear,) for c in comps])
    mk = generalized_petersen(8, 3)
    for i, c in enumerate(comps):
        rec.equal(f"{i}.levi", "Levi graph is the Möbius-Kantor graph GP(8,3)", True, lambda: graph_isomorphic(levi_graph(c), mk) is not None)
        rec.equal(f"{i}.antipodal", "non-collinear points pair up", True, lambda: _is_perfect_matching(deficiency_graph(c)))
    rec.equal("graph", "underlying graph is GP(8,3)", True, lambda: graph_isomorphic(maps.underlying_graph(m), mk) is not None)
    dc = neighborhood_geometry(maps.underlying_graph(maps.dual_map(m)))
    rec.equal("dual.shape", "6 points, 6 blocks of size 4", (6, 6, 4), lambda: (dc.point_count, dc.block_count, summarize(dc).k))
    rec.equal("dual.repeats", "3 distinct blocks, each twice", [2, 2, 2], lambda: sorted(configs.block_multiplicities(dc).values()))
    distinct = sorted(set(dc.blocks), key=sorted)
    rec.equal("dual.meet", "distinct blocks meet in exactly 2 points", {2}, lambda: {len(a & b) for i, a in enumerate(distinct) for b in distinct[i + 1:]})


def _shape(c: configs.Configuration) -> tuple:
    s = summarize(c)
    return (s.v, s.b, s.r, s.k)


def _pent_params(c) -> tuple:
    s = summarize(c)
    return (s.k, s.r, s.v, s.b)


def pentagonal_suite(rec: _Recorder) -> None:
    moore = {"pentagon": cycle(5), "petersen": generalized_petersen(5, 2), "hoffman-singleton": graphs.hoffman_singleton()}
    params = {"pentagon": (2, 2, 5, 5), "petersen": (3, 3, 10, 10), "hoffman-singleton": (7, 7, 50, 50)}
    for name, g in moore.items():
        rec.equal(f"{name}.moore", "Moore graph of diameter 2", True, lambda: configs.moore_graph_check(g))
        c = neighborhood_geometry(g)
        rec.equal(f"{name}.pentagonal", "neighbourhood geometry is pentagonal", True, lambda: pentagonal_check(c).holds)
        rec.equal(f"{name}.params", "(points per line, lines per point, points, lines)", params[name], lambda: _pent_params(c))
        rec.equal(f"{name}.recovery", "geometry of the deficiency graph is the geometry", True, lambda: is_isomorphic(neighborhood_geometry(deficiency_graph(c)), c) is not None)
    rec.equal("petersen.desargues", "Petersen and Desargues graphs give the same 10_3", True,
              lambda: is_isomorphic(neighborhood_geometry(moore["petersen"]), split_components(neighborhood_geometry(generalized_petersen(10, 3)))[0]) is not None)
    hosi = neighborhood_geometry(moore["hoffman-singleton"])
    removed = configs.remove_point_and_opposite(hosi, 0)
    rs = summarize(removed)
    rec.equal("removal.params", "(points, line size, lines per point)", (42, 6, 7), lambda: (rs.v, rs.k, rs.r))
    rec.equal("removal.pentagonal", "removal result is pentagonal", True, lambda: pentagonal_check(removed).holds)


def yp_suite(rec: _Recorder, p: int) -> None:
    m = catalog.yp_map(p)
    pre = f"p{p}"
    rec.equal(f"{pre}.counts", "map V, E, F = 2p^2, 4p^2, 4p", (2 * p * p, 4 * p * p, 4 * p), lambda: m.counts)
    rec.equal(f"{pre}.genus", "genus (p-1)^2", (p - 1) ** 2, lambda: m.genus)
    g = maps.underlying_graph(m)
    rec.equal(f"{pre}.graph", "bipartite, 4-regular, girth 4", (True, 4, 4), lambda: (graphs.is_bipartite(g)[0], g.regular_degree(), graphs.girth(g)))
    rec.equal(f"{pre}.symmetric", "underlying graph is arc-transitive", True, lambda: graphs.automorphism_group(g).arc_transitive)
    comps = split_components(neighborhood_geometry(g))
    c = comps[0]
    s = summarize(c)
    rec.equal(f"{pre}.config", "component p^2_4 of linear dimension 2", (p * p, p * p, 4, 4, 2), lambda: (s.v, s.b, s.r, s.k, s.linear_dimension))
    rec.equal(f"{pre}.components", "two mutually dual components", (2, True), lambda: (len(comps), is_isomorphic(comps[0], dual(comps[1])) is not None))
    rec.equal(f"{pre}.self_polar", "component admits a polarity", True, lambda: find_polarity(c) is not None)
    rec.equal(f"{pre}.automorphisms", "8p^2 divides |Aut|", 0, lambda: configs.automorphism_order(c) % (8 * p * p))
    for label, h in maps.pgonal_elements(m).items():
        q = maps.pgonal_quotient(m, h)
        rec.equal(f"{pre}.quotient.{label}", f"quotient by {label} is the {2 * p}-cycle", True, lambda: graph_isomorphic(q, cycle(2 * p)) is not None)
        qc = split_components(neighborhood_geometry(q))
        rec.equal(
            f"{pre}.quotient.{label}.config",
            "two p_2 components with 2p-cycle Levi graphs",
            [(p, 2, True)] * 2,
            lambda: [(x.point_count, summarize(x).k, graph_isomorphic(levi_graph(x), cycle(2 * p)) is not None) for x in qc],
        )
    if p == 3:
        rec.equal("p3.concurrence", "every pair of points shares 1 or 2 blocks", {1, 2},
                  lambda: {v for x in range(9) for v in concurrence_counts(c, x).values()})
        gp = generalized_pentagonal_check(c, 2)
        rec.equal("p3.generalized_pentagonal", "generalized pentagonal with d = 2", True, lambda: gp.holds)
        rec.equal("p3.count", "9 = 1 + 16/2", True, lambda: gp.count_formula)
        rec.equal("p3.gq21", "component is the GQ(2,1) neighbourhood geometry", True,
                  lambda: is_isomorphic(c, neighborhood_geometry(graphs.rook(3, 3))) is not None)


def paley_suite(rec: _Recorder) -> None:
    g = graphs.kronecker_cover(graphs.paley(13))
    rec.equal("shape", "26 vertices, 6-regular", (26, 6), lambda: (g.vertex_count, g.regular_degree()))
    aut = graphs.automorphism_group(g)
    rec.equal("symmetric", "arc-transitive", True, lambda: aut.arc_transitive)
    rec.equal("automorphisms", "automorphism group order", 156, lambda: aut.order)
    for i, c in enumerate(split_components(neighborhood_geometry(g))):
        gp = generalized_pentagonal_check(c, 3)
        rec.equal(f"{i}.generalized_pentagonal", "13-point component, generalized pentagonal with d = 3 (candidate)", (13, True), lambda: (c.point_count, gp.holds))
        rec.equal(f"{i}.count", "13 = 1 + 36/3", True, lambda: gp.count_formula)


def random_test_graphs(count: int = 50, seed: int = RANDOM_SEED, max_vertices: int = 24) -> list[graphs.Multigraph]:
    """Connected, twin-free random graphs; every other one bipartite."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        if len(out) % 2:
            n1 = rng.randint(3, max_vertices // 2)
            n2 = rng.randint(3, max_vertices - n1)
            g = graphs.random_bipartite(n1, n2, rng.uniform(0.25, 0.6), rng)
        else:
            g = graphs.random_graph(rng.randint(5, max_vertices), rng.uniform(0.15, 0.5), rng)
        if len(graphs.connected_components(g)) != 1 or graphs.has_twins(g):
            continue
        out.append(g)
    return out


def structural_identity_failures(g: graphs.Multigraph) -> list[str]:
    """Names of the structural identities that fail for ``g`` (empty when all hold)."""
    failed = []
    c = neighborhood_geometry(g)
    s = summarize(c)
    # twins share a whole neighbourhood, so their 4-cycles never show up in d
    if not graphs.has_twins(g) and s.linear != (not graphs.has_four_cycle(g)):
        failed.append("linear-iff-no-4-cycle")
    if graph_isomorphic(levi_graph(c), graphs.kronecker_cover(graphs.simplify(g))) is None:
        failed.append("levi-is-kronecker")
    if not natural_polarity_holds(c):
        failed.append("natural-polarity")
    if graphs.is_bipartite(g)[0] and len(graphs.connected_components(g)) == 1:
        comps = split_components(c)
        if len(comps) != 2 or is_isomorphic(comps[0], dual(comps[1])) is None:
            failed.append("bipartite-duality")
    return failed


def _yp_dual_shape(g: graphs.Multigraph) -> tuple:
    """Whole geometry (points, block size, distinct blocks, d) and its component shapes."""
    c = neighborhood_geometry(g)
    s = summarize(c)
    comps = [summarize(x) for x in split_components(c)]
    return (s.v, s.k, s.distinct_block_count, s.linear_dimension), [(x.v, x.b, x.k, x.degenerate) for x in comps]


def structural_suite(rec: _Recorder) -> None:
    sample = dict(catalog.catalog_graphs())
    sample.update({f"random.{i:02d}": g for i, g in enumerate(random_test_graphs())})

    def failures():
        return {name: f for name, g in sample.items() if (f := structural_identity_failures(g))}

    rec.equal("all", f"identities on {len(sample)} graphs", {}, failures)
    rec.equal("twins", "graphs exempt from linear iff no 4-cycle (twin vertices)",
              ["bolza-dual-map", "yp-dual-map:3", "yp-dual-map:5"],
              lambda: sorted(name for name, g in sample.items() if graphs.has_twins(g)))
    for p in (3, 5):
        rec.equal(f"yp-dual-map:{p}", "dual Y_p geometry splits into two degenerate 2p_2p configurations",
                  ((4 * p, 2 * p, 2, 0), [(2 * p, 2 * p, 2 * p, True)] * 2),
                  lambda: _yp_dual_shape(sample[f"yp-dual-map:{p}"]))
    rec.equal("bipartite.count", "random sample includes bipartite graphs", True,
              lambda: sum(graphs.is_bipartite(g)[0] for g in sample.values()) >= 25)


def hyperbolic_suite(rec: _Recorder) -> None:
    for p, q in [(7, 3), (4, 6)]:
        spec = hyperbolic.TilingSpec(p, q)
        L = hyperbolic.edge_length(spec)
        patch = hyperbolic.build_patch(spec, 3)
        pre = f"{p}.{q}"
        rec.at_most(f"{pre}.triangle", "cosh(L/2) cosh(inradius) = cot(π/p) cot(π/q)", 1e-12, lambda: hyperbolic.hypotenuse_residual(spec))
        rec.at_most(f"{pre}.edges", "max |edge length - L|", 1e-9,
                    lambda: max(abs(hyperbolic.disk_distance(patch.positions[u], patch.positions[v]) - L) for u, v in patch.edges))
        interior = patch.interior_vertices()
        rec.at_most(f"{pre}.concyclic", "max concyclicity residual of neighbour sets", 1e-6,
                    lambda: max(hyperbolic.concyclic_residual(patch, v) for v in interior))
        radii = [hyperbolic.neighbor_circle(patch, v).hyperbolic_radius() for v in interior]
        rec.at_most(f"{pre}.isometric", "spread of hyperbolic radii", 1e-9, lambda: max(radii) - min(radii))
        rec.at_most(f"{pre}.radius", "|hyperbolic radius - L|", 1e-9, lambda: max(abs(r - L) for r in radii))
        svg = hyperbolic.render_svg(patch)

        def counts():
            root = ET.fromstring(svg)
            found = Counter(el.get("class") for el in root.iter() if el.get("class"))
            return found["neighbor-circle"], found["edge"], found["boundary"]

        rec.equal(f"{pre}.svg", "SVG parses; circles, edges, boundary", (len(interior), len(patch.edges), 1), counts)


CRITERIA: list[tuple[str, str, float, Callable[[_Recorder], None]]] = [
    ("1", "klein", 30, klein_suite),
    ("2", "bring", 10, bring_suite),
    ("3", "bolza", 10, bolza_suite),
    ("4", "pentagonal", 60, pentagonal_suite),
    ("5", "yp", 60, lambda rec: [yp_suite(rec, p) for p in (3, 5, 7)]),
    ("6", "paley13", 30, paley_suite),
    ("7", "structural", 60, structural_suite),
    ("8", "hyperbolic", 10, hyperbolic_suite),
]


def run_criterion(number: str, report: VerificationReport | None = None) -> VerificationReport:
    report = report if report is not None else VerificationReport()
    for num, key, budget, fn in CRITERIA:
        if num != number:
            continue
        rec = _Recorder(report, f"{num}.{key}")
        t0 = time.perf_counter()
        fn(rec)
        elapsed = time.perf_counter() - t0
        report.claims.append(Claim(f"{num}.{key}.runtime", "criterion runtime budget (s)", f"< {budget}", elapsed, elapsed < budget, 0.0))
    return report


def run_paper_suite() -> VerificationReport:
    report = VerificationReport()
    for num, *_ in CRITERIA:
        run_criterion(num, report)
    return report
