"""Finite multigraphs, the named graphs used throughout, and symmetry search."""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import search
from .errors import BoundExceeded
from .perm import Group, Perm, is_prime, orbits

AUT_VERTEX_BOUND = 512


@dataclass(frozen=True)
class Multigraph:
    """Undirected graph with parallel edges and loops.

    ``edges`` is stored normalised (``u <= v``) and sorted, so two graphs with
    the same edge multiset compare equal.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside {self.vertex_count} vertices")
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.vertex_count:
                raise ValueError("one label per vertex required")

    @cached_property
    def multiplicity(self) -> list[dict[int, int]]:
        """``multiplicity[u][v]`` = number of u-v edges (loops counted once)."""
        adj: list[dict[int, int]] = [dict() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u][v] = adj[u].get(v, 0) + 1
            if u != v:
                adj[v][u] = adj[v].get(u, 0) + 1
        return adj

    @cached_property
    def adjacency(self) -> list[tuple[tuple[int, int], ...]]:
        return [tuple(sorted(row.items())) for row in self.multiplicity]

    def neighbors(self, v: int) -> frozenset[int]:
        """Distinct neighbours; a loop puts ``v`` in its own neighbourhood."""
        return frozenset(self.multiplicity[v])

    def degree(self, v: int) -> int:
        row = self.multiplicity[v]
        return sum(row.values()) + row.get(v, 0)

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.vertex_count)]

    def regular_degree(self) -> int | None:
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_simple(self) -> bool:
        return all(u != v for u, v in self.edges) and len(set(self.edges)) == len(self.edges)


def _graph(n: int, edges: Iterable[tuple[int, int]], labels=None) -> Multigraph:
    return Multigraph(n, tuple(edges), labels)


def simplify(g: Multigraph) -> Multigraph:
    """Collapse parallel edges (loops are kept, once)."""
    return _graph(g.vertex_count, set(g.edges), g.labels)


def relabel(g: Multigraph, perm: Sequence[int]) -> Multigraph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return _graph(g.vertex_count, ((perm[u], perm[v]) for u, v in g.edges))


# ---------------------------------------------------------------------------
# constructions


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return _graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return _graph(n, ((i, i + 1) for i in range(n - 1)))


def generalized_petersen(n: int, k: int) -> Multigraph:
    """Outer vertices ``0..n-1``, inner ``n..2n-1``."""
    if not (n >= 3 and 0 < k < n / 2):
        raise ValueError(f"generalized Petersen graph needs 0 < k < n/2, got n={n}, k={k}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return _graph(2 * n, edges)


def rook(m: int, n: int) -> Multigraph:
    """K_m x K_n; vertex ``i*n + j`` is cell (i, j)."""
    if m < 1 or n < 1:
        raise ValueError("rook graph needs positive dimensions")
    edges = []
    for a in range(m * n):
        for b in range(a + 1, m * n):
            if a // n == b // n or a % n == b % n:
                edges.append((a, b))
    return _graph(m * n, edges)


def circulant(n: int, connection: Iterable[int]) -> Multigraph:
    conn = {s % n for s in connection}
    if n < 1 or 0 in conn:
        raise ValueError("circulant connection set must avoid 0 mod n")
    edges = {(min(i, (i + s) % n), max(i, (i + s) % n)) for i in range(n) for s in conn}
    return _graph(n, edges)


def bipartite_circulant(n: int, connection: Iterable[int]) -> Multigraph:
    """Parts ``u_i = i`` and ``w_j = n + j`` with ``u_i ~ w_j`` iff ``j - i`` in the set."""
    conn = sorted({s % n for s in connection})
    return _graph(2 * n, ((i, n + (i + s) % n) for i in range(n) for s in conn))


def paley(q: int) -> Multigraph:
    if not (is_prime(q) and q % 4 == 1):
        raise ValueError(f"Paley graph needs a prime q = 1 mod 4, got {q}")
    squares = {(x * x) % q for x in range(1, q)}
    return circulant(q, squares)


def hoffman_singleton() -> Multigraph:
    """Pentagons P_h and pentagrams Q_i; ``P_{h,j} ~ Q_{i, hi+j}``."""

    def P(h, j):
        return 5 * h + j % 5

    def Q(i, j):
        return 25 + 5 * i + j % 5

    edges = set()
    for h in range(5):
        for j in range(5):
            edges.add((P(h, j), P(h, j + 1)))
            edges.add((Q(h, j), Q(h, j + 2)))
            for i in range(5):
                edges.add((P(h, j), Q(i, h * i + j)))
    return _graph(50, {(min(e), max(e)) for e in edges})


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return _graph(offset, edges)


def kronecker_cover(g: Multigraph) -> Multigraph:
    """Tensor product with K_2: ``(v, 0) = v`` and ``(v, 1) = n + v``.

    A loop at ``v`` becomes the single edge ``(v,0)-(v,1)``.
    """
    n = g.vertex_count
    edges = []
    for u, v in g.edges:
        edges.append((u, n + v))
        if u != v:
            edges.append((v, n + u))
    labels = None
    if g.labels is not None:
        labels = tuple(f"{lab}.0" for lab in g.labels) + tuple(f"{lab}.1" for lab in g.labels)
    return _graph(2 * n, edges, labels)


# ---------------------------------------------------------------------------
# structure


def connected_components(g: Multigraph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.multiplicity[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_bipartite(g: Multigraph) -> tuple[bool, tuple[list[int], list[int]] | None]:
    """Two-colouring with the least vertex of each component on side 0."""
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.multiplicity[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False, None
    return True, ([v for v in range(g.vertex_count) if side[v] == 0], [v for v in range(g.vertex_count) if side[v] == 1])


def girth(g: Multigraph) -> float:
    """Shortest cycle length; loops give 1, parallel edges 2, forests ``inf``."""
    if any(u == v for u, v in g.edges):
        return 1
    if len(set(g.edges)) < len(g.edges):
        return 2
    best = math.inf
    for s in range(g.vertex_count):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.multiplicity[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def distances_from(g: Multigraph, s: int) -> list[float]:
    dist = [math.inf] * g.vertex_count
    dist[s] = 0
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in g.multiplicity[x]:
            if dist[y] == math.inf:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def diameter(g: Multigraph) -> float:
    return max((max(distances_from(g, s)) for s in range(g.vertex_count)), default=0)


def has_four_cycle(g: Multigraph) -> bool:
    """True iff four distinct vertices u-a-w-b-u form a cycle."""
    nbrs = [g.neighbors(v) for v in range(g.vertex_count)]
    for u in range(g.vertex_count):
        for w in range(u + 1, g.vertex_count):
            if len(nbrs[u] & nbrs[w] - {u, w}) >= 2:
                return True
    return False


def quotient_by_partition(g: Multigraph, parts: Sequence[Sequence[int]]) -> Multigraph:
    """Simple quotient: part i ~ part j iff some edge crosses; loop iff an internal edge."""
    where = {}
    for i, part in enumerate(parts):
        for v in part:
            if v in where:
                raise ValueError(f"vertex {v} in two parts")
            where[v] = i
    if sorted(where) != list(range(g.vertex_count)):
        raise ValueError("parts do not cover the vertex set")
    edges = {(min(where[u], where[v]), max(where[u], where[v])) for u, v in g.edges}
    return _graph(len(parts), edges)


# ---------------------------------------------------------------------------
# isomorphism and automorphisms


def _check_bound(g: Multigraph) -> None:
    if g.vertex_count > AUT_VERTEX_BOUND:
        raise BoundExceeded(f"{g.vertex_count} vertices exceeds the search bound {AUT_VERTEX_BOUND}")


def graph_isomorphic(
    g1: Multigraph, g2: Multigraph, colors1: Sequence[int] | None = None, colors2: Sequence[int] | None = None
) -> list[int] | None:
    """Vertex map ``g1 -> g2`` preserving edge multiplicities (and colours), or None."""
    _check_bound(g1)
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    c1 = list(colors1) if colors1 is not None else [0] * g1.vertex_count
    c2 = list(colors2) if colors2 is not None else [0] * g2.vertex_count
    return search.find_isomorphism(g1.adjacency, c1, g2.adjacency, c2)


@dataclass(frozen=True)
class AutGroupReport:
    generators: tuple[Perm, ...]
    order: int
    vertex_transitive: bool
    arc_transitive: bool

    def group(self, n: int, name: str = "") -> Group:
        return Group(n, self.generators, name)


def arcs(g: Multigraph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.vertex_count) for v in sorted(g.multiplicity[u]) if u != v]


def automorphism_generators(g: Multigraph, colors: Sequence[int] | None = None) -> list[Perm]:
    _check_bound(g)
    c = list(colors) if colors is not None else [0] * g.vertex_count
    n = g.vertex_count
    return [Perm(p) for p in search.PathSearch(g.adjacency, c).automorphisms()] or [Perm.identity(n)]


def automorphism_group(g: Multigraph, colors: Sequence[int] | None = None) -> AutGroupReport:
    gens = automorphism_generators(g, colors)
    order = Group(g.vertex_count, gens).element_count
    vt = len(orbits(gens, range(g.vertex_count))) == 1
    arc_list = arcs(g)
    index = {a: i for i, a in enumerate(arc_list)}
    arc_gens = [Perm(index[(p(u), p(v))] for u, v in arc_list) for p in gens] if arc_list else []
    at = bool(arc_list) and len(orbits(arc_gens, range(len(arc_list)))) == 1
    return AutGroupReport(tuple(gens), order, vt, at)


def is_automorphism(g: Multigraph, p: Perm) -> bool:
    return Counter(relabel(g, p.images).edges) == Counter(g.edges)


# ---------------------------------------------------------------------------
# text formats


def to_text(g: Multigraph) -> str:
    lines = [f"vertices {g.vertex_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Multigraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2 or rows[0][0] != "vertices":
        raise ValueError("graph text must start with 'vertices N'")
    try:
        n = int(rows[0][1])
        edges = []
        for r in rows[1:]:
            if len(r) != 2:
                raise ValueError(f"bad edge line: {' '.join(r)!r}")
            edges.append((int(r[0]), int(r[1])))
    except ValueError as exc:
        raise ValueError(f"malformed graph text: {exc}") from None
    return Multigraph(n, tuple(edges))


def to_dot(g: Multigraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        lab = g.labels[v] if g.labels else str(v)
        out.append(f'  {v} [label="{lab}"];')
    out += [f"  {u} -- {v};" for u, v in g.edges]
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# random inputs for property checks


def random_graph(n: int, density: float, rng) -> Multigraph:
    return _graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density))


def random_bipartite(n1: int, n2: int, density: float, rng) -> Multigraph:
    return _graph(n1 + n2, ((u, n1 + v) for u in range(n1) for v in range(n2) if rng.random() < density))


def has_twins(g: Multigraph) -> bool:
    """Two distinct vertices with the same neighbourhood."""
    seen = set()
    for v in range(g.vertex_count):
        nb = g.neighbors(v)
        if nb in seen:
            return True
        seen.add(nb)
    return False
