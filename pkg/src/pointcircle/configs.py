"""Combinatorial configurations and their incidence analytics.

A configuration is a point count plus a *list* of blocks; repeated blocks are
kept, because degenerate neighbourhood geometries (several vertices with the
same neighbourhood) have circles that coincide.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from . import graphs
from .errors import BoundExceeded
from .graphs import Multigraph
from .perm import Group, Perm, compose

POLARITY_ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class Configuration:
    point_count: int
    blocks: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        for b in self.blocks:
            if not b:
                raise ValueError("blocks must be nonempty")
            if min(b) < 0 or max(b) >= self.point_count:
                raise ValueError(f"block {sorted(b)} outside {self.point_count} points")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def point_degrees(self) -> list[int]:
        deg = [0] * self.point_count
        for b in self.blocks:
            for x in b:
                deg[x] += 1
        return deg

    def block_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]


@dataclass(frozen=True)
class ConfigSummary:
    v: int
    b: int
    r: int | list[int]
    k: int | list[int]
    balanced_vr: bool
    linear_dimension: int | None
    degenerate: bool
    linear: bool
    distinct_block_count: int

    def as_dict(self) -> dict:
        return {
            "v": self.v,
            "b": self.b,
            "r": self.r,
            "k": self.k,
            "balanced_vr": self.balanced_vr,
            "linear_dimension": self.linear_dimension,
            "degenerate": self.degenerate,
            "linear": self.linear,
            "distinct_block_count": self.distinct_block_count,
        }


@dataclass(frozen=True)
class PentagonalReport:
    holds: bool
    opposite_line: tuple[int, ...] | None = None
    failure_witness: tuple[int, str] | None = None


@dataclass(frozen=True)
class GeneralizedPentagonalReport:
    d: int
    holds: bool
    opposite_block: tuple[int, ...] | None = None
    failure_witness: tuple[int, str] | None = None
    count_formula: bool | None = None   # v == 1 + r^2/d, only for balanced self-polar input


def neighborhood_geometry(g: Multigraph) -> Configuration:
    """Point i is vertex i, block i is the set of distinct neighbours of vertex i."""
    blocks = []
    for v in range(g.vertex_count):
        nb = g.neighbors(v)
        if not nb:
            raise ValueError(f"vertex {v} has an empty neighbourhood")
        blocks.append(nb)
    return Configuration(g.vertex_count, tuple(blocks), g.labels)


def levi_graph(c: Configuration) -> Multigraph:
    """Point/block incidence graph: points ``0..v-1`` then blocks ``v..v+b-1``."""
    v = c.point_count
    return Multigraph(v + c.block_count, tuple((x, v + j) for j, b in enumerate(c.blocks) for x in b))


def _side_colors(c: Configuration, swap: bool = False) -> list[int]:
    pt, bl = (1, 0) if swap else (0, 1)
    return [pt] * c.point_count + [bl] * c.block_count


def split_components(c: Configuration) -> list[Configuration]:
    """Connected components of the Levi graph, re-indexed, ordered by least point."""
    v = c.point_count
    comps = graphs.connected_components(levi_graph(c))
    out = []
    for comp in comps:
        pts = [u for u in comp if u < v]
        if not pts:
            continue
        index = {u: i for i, u in enumerate(pts)}
        blocks = tuple(frozenset(index[x] for x in c.blocks[u - v]) for u in comp if u >= v)
        labels = tuple(c.labels[u] for u in pts) if c.labels else tuple(str(u) for u in pts)
        out.append(Configuration(len(pts), blocks, labels))
    return out


def dual(c: Configuration) -> Configuration:
    """Points become blocks and blocks points."""
    blocks = [set() for _ in range(c.point_count)]
    for j, b in enumerate(c.blocks):
        for x in b:
            blocks[x].add(j)
    return Configuration(c.block_count, tuple(frozenset(b) for b in blocks))


def pair_counts(c: Configuration) -> list[list[int]]:
    """``counts[x][y]``: blocks (with multiplicity) containing both x and y; diagonal zero."""
    n = c.point_count
    counts = [[0] * n for _ in range(n)]
    for b in c.blocks:
        pts = sorted(b)
        for i, x in enumerate(pts):
            row = counts[x]
            for y in pts[i + 1:]:
                row[y] += 1
                counts[y][x] += 1
    return counts


def concurrence_counts(c: Configuration, x: int) -> dict[int, int]:
    if not 0 <= x < c.point_count:
        raise ValueError(f"point {x} out of range")
    row = pair_counts(c)[x]
    return {y: row[y] for y in range(c.point_count) if y != x}


def _uniform(values: list[int]) -> int | list[int]:
    return values[0] if values and all(v == values[0] for v in values) else values


def summarize(c: Configuration) -> ConfigSummary:
    distinct = sorted(set(c.blocks), key=sorted)
    degenerate = len(distinct) <= 1
    d = None
    if not degenerate:
        d = max(len(a & b) for i, a in enumerate(distinct) for b in distinct[i + 1:])
    r = _uniform(c.point_degrees())
    k = _uniform(c.block_sizes())
    balanced = c.point_count == c.block_count and isinstance(r, int) and isinstance(k, int) and r == k
    return ConfigSummary(
        v=c.point_count,
        b=c.block_count,
        r=r,
        k=k,
        balanced_vr=balanced,
        linear_dimension=d,
        degenerate=degenerate,
        linear=not degenerate and d <= 1,
        distinct_block_count=len(distinct),
    )


def natural_polarity_holds(c: Configuration) -> bool:
    """Whether ``x in B_y <=> y in B_x`` under the identity point/block indexing."""
    if c.point_count != c.block_count:
        raise ValueError("natural polarity needs as many blocks as points")
    return all((j in c.blocks[i]) == (i in c.blocks[j]) for i in range(c.point_count) for j in range(c.point_count))


def is_isomorphic(c1: Configuration, c2: Configuration) -> dict[str, list[int]] | None:
    """Point and block bijections carrying c1 to c2 (block multiplicities respected)."""
    if (c1.point_count, c1.block_count) != (c2.point_count, c2.block_count):
        return None
    m = graphs.graph_isomorphic(levi_graph(c1), levi_graph(c2), _side_colors(c1), _side_colors(c2))
    if m is None:
        return None
    v = c1.point_count
    return {"points": m[:v], "blocks": [j - v for j in m[v:]]}


def automorphism_group(c: Configuration) -> Group:
    """Side-preserving automorphisms of the Levi graph (points then blocks)."""
    lg = levi_graph(c)
    gens = graphs.automorphism_generators(lg, _side_colors(c))
    return Group(lg.vertex_count, gens, "Aut(config)")


def automorphism_order(c: Configuration) -> int:
    return automorphism_group(c).element_count


def find_polarity(c: Configuration) -> dict[str, list[int]] | None:
    """An involutory incidence-preserving swap of points and blocks, or None.

    The side-swapping Levi automorphisms form one coset ``σH`` of the
    side-preserving group H; H is enumerated until an involution turns up.
    """
    if c.point_count != c.block_count:
        return None
    lg = levi_graph(c)
    sigma = graphs.graph_isomorphic(lg, lg, _side_colors(c), _side_colors(c, swap=True))
    if sigma is None:
        return None
    sigma = Perm(sigma)
    h_group = automorphism_group(c)
    if h_group.element_count > POLARITY_ENUMERATION_CAP:
        raise BoundExceeded(f"automorphism group of order {h_group.element_count} too large to scan for polarities")
    v = c.point_count
    for h in h_group.chain.elements():
        tau = compose(sigma, h)
        if compose(tau, tau).is_identity():
            return {"point_to_block": [tau(i) - v for i in range(v)], "block_to_point": [tau(v + j) for j in range(v)]}
    return None


def deficiency_graph(c: Configuration) -> Multigraph:
    """Points joined when no block contains both."""
    counts = pair_counts(c)
    n = c.point_count
    return Multigraph(n, tuple((x, y) for x in range(n) for y in range(x + 1, n) if counts[x][y] == 0))


def _block_lookup(c: Configuration) -> dict[frozenset[int], int]:
    lookup: dict[frozenset[int], int] = {}
    for j, b in enumerate(c.blocks):
        lookup.setdefault(b, j)
    return lookup


def pentagonal_check(c: Configuration) -> PentagonalReport:
    """For every x, the points never in a block with x must form exactly one block."""
    counts = pair_counts(c)
    lookup = _block_lookup(c)
    opposite = []
    for x in range(c.point_count):
        zero = frozenset(y for y in range(c.point_count) if y != x and counts[x][y] == 0)
        if not zero:
            return PentagonalReport(False, failure_witness=(x, "every point is collinear with it"))
        if zero not in lookup:
            return PentagonalReport(False, failure_witness=(x, f"its {len(zero)} non-collinear points are not a block"))
        opposite.append(lookup[zero])
    return PentagonalReport(True, opposite_line=tuple(opposite))


def generalized_pentagonal_check(c: Configuration, d: int) -> GeneralizedPentagonalReport:
    """Concurrence counts with each x lie in {d-1, d} and the count-(d-1) points form one block."""
    if d < 1:
        raise ValueError("d must be at least 1")
    counts = pair_counts(c)
    lookup = _block_lookup(c)
    s = summarize(c)
    formula = None
    if s.balanced_vr:
        formula = s.v * d == d + s.r * s.r
    opposite = []
    for x in range(c.point_count):
        others = [y for y in range(c.point_count) if y != x]
        bad = [y for y in others if counts[x][y] not in (d - 1, d)]
        if bad:
            return GeneralizedPentagonalReport(
                d, False, failure_witness=(x, f"point {bad[0]} meets it {counts[x][bad[0]]} times"), count_formula=formula
            )
        low = frozenset(y for y in others if counts[x][y] == d - 1)
        if low not in lookup:
            return GeneralizedPentagonalReport(d, False, failure_witness=(x, "count-(d-1) points are not a block"), count_formula=formula)
        opposite.append(lookup[low])
    return GeneralizedPentagonalReport(d, True, tuple(opposite), count_formula=formula)


def remove_point_and_opposite(c: Configuration, x: int) -> Configuration:
    """Delete x, its opposite line and the points on that line; drop emptied blocks."""
    report = pentagonal_check(c)
    if not report.holds:
        raise ValueError("configuration is not pentagonal")
    opp = report.opposite_line[x]
    removed = set(c.blocks[opp]) | {x}
    keep = [y for y in range(c.point_count) if y not in removed]
    index = {y: i for i, y in enumerate(keep)}
    blocks = []
    for j, b in enumerate(c.blocks):
        if j == opp:
            continue
        nb = frozenset(index[y] for y in b if y in index)
        if nb:
            blocks.append(nb)
    labels = tuple(c.labels[y] for y in keep) if c.labels else tuple(str(y) for y in keep)
    return Configuration(len(keep), tuple(blocks), labels)


def moore_graph_check(g: Multigraph) -> bool:
    r = g.regular_degree()
    if r is None or not g.is_simple():
        return False
    return g.vertex_count == r * r + 1 and graphs.girth(g) == 5 and graphs.diameter(g) == 2


# ---------------------------------------------------------------------------
# JSON


def to_json(c: Configuration) -> str:
    record = {
        "points": c.point_count,
        "labels": list(c.labels) if c.labels else [str(i) for i in range(c.point_count)],
        "blocks": [sorted(b) for b in c.blocks],
    }
    return json.dumps(record)


def from_json(text: str | dict) -> Configuration:
    try:
        record = json.loads(text) if isinstance(text, str) else text
        n = int(record["points"])
        blocks = tuple(frozenset(int(x) for x in b) for b in record["blocks"])
        labels = record.get("labels")
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed configuration JSON: {exc}") from None
    if labels is not None and len(labels) != n:
        raise ValueError("labels length does not match point count")
    return Configuration(n, blocks, tuple(str(s) for s in labels) if labels else None)


def block_multiplicities(c: Configuration) -> Counter:
    return Counter(c.blocks)
