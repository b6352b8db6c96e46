"""Colour refinement and individualisation search on multigraphs.

Graphs are given as adjacency lists of ``(neighbour, multiplicity)`` pairs.
Refinement is 1-dimensional Weisfeiler-Leman with canonical re-ranking, so
the colour names and the refinement trace depend only on the isomorphism type
of the coloured graph.  The search walks the leftmost root-to-leaf path once
and then looks, at each level, for leaves in sibling subtrees that match that
first leaf.  Every match is an automorphism (or isomorphism); the collected
automorphisms form a strong generating set for the vertex-colour-preserving
group.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

Adjacency = Sequence[Sequence[tuple[int, int]]]


def refine(adj: Adjacency, colors: Sequence[int]) -> tuple[list[int], int]:
    """Stable colouring refining ``colors`` plus a hash of the refinement trace."""
    n = len(adj)
    ncol = len(set(colors))
    trace = []
    colors = list(colors)
    while True:
        sigs = [(colors[v], tuple(sorted([(colors[u], m) for u, m in adj[v]]))) for v in range(n)]
        counts = Counter(sigs)
        uniq = sorted(counts)
        trace.append(hash(tuple((s, counts[s]) for s in uniq)))
        rank = {s: i for i, s in enumerate(uniq)}
        colors = [rank[s] for s in sigs]
        if len(uniq) == ncol:
            return colors, hash(tuple(trace))
        ncol = len(uniq)


def individualize(colors: Sequence[int], v: int) -> list[int]:
    out = [2 * c for c in colors]
    out[v] += 1
    return out


def target_cell(colors: Sequence[int]) -> tuple[int, list[int]] | None:
    """Smallest non-singleton cell, ties to the lowest colour; None if discrete."""
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        members = cells[c]
        if len(members) > 1 and (best is None or len(members) < len(cells[best])):
            best = c
    if best is None:
        return None
    return best, cells[best]


def _adj_maps(adj: Adjacency) -> list[dict[int, int]]:
    return [dict(row) for row in adj]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


class PathSearch:
    """Leftmost search path of a coloured multigraph."""

    def __init__(self, adj: Adjacency, colors: Sequence[int]):
        self.adj = adj
        self.maps = _adj_maps(adj)
        self.root, self.root_trace = refine(adj, colors)
        # per level: (cell colour, trace after individualising, cell, chosen vertex, node colouring)
        self.path: list[tuple[int, int, list[int], int, list[int]]] = []
        node = self.root
        while (tc := target_cell(node)) is not None:
            col, cell = tc
            v = cell[0]
            child, tr = refine(adj, individualize(node, v))
            self.path.append((col, tr, cell, v, node))
            node = child
        self.leaf = node

    def _leaf_map(self, other_leaf: Sequence[int]) -> list[int]:
        by_color = {c: v for v, c in enumerate(other_leaf)}
        return [by_color[c] for c in self.leaf]

    def _is_iso(self, perm: Sequence[int], other_maps: list[dict[int, int]]) -> bool:
        for v, row in enumerate(self.adj):
            target = other_maps[perm[v]]
            if len(target) != len(row):
                return False
            for u, m in row:
                if target.get(perm[u]) != m:
                    return False
        return True

    def match(self, adj: Adjacency, maps: list[dict[int, int]], node: Sequence[int], level: int) -> list[int] | None:
        """A leaf below ``node`` (a node of ``adj``'s tree) isomorphic to our first leaf."""
        if level == len(self.path):
            if target_cell(node) is not None:
                return None
            perm = self._leaf_map(node)
            return perm if self._is_iso(perm, maps) else None
        col, tr, cell, _, _ = self.path[level]
        members = [v for v, c in enumerate(node) if c == col]
        if len(members) != len(cell):
            return None
        for u in members:
            child, tru = refine(adj, individualize(node, u))
            if tru != tr:
                continue
            found = self.match(adj, maps, child, level + 1)
            if found is not None:
                return found
        return None

    def automorphisms(self) -> list[list[int]]:
        """Strong generating set (as image lists) of the colour-preserving automorphisms."""
        n = len(self.adj)
        gens: list[list[int]] = []
        for level in reversed(range(len(self.path))):
            _, tr, cell, v, node = self.path[level]
            uf = _UnionFind(n)
            for g in gens:
                for x in range(n):
                    uf.union(x, g[x])
            failed: list[int] = []
            for w in cell:
                if w == v or uf.find(w) == uf.find(v) or any(uf.find(w) == uf.find(f) for f in failed):
                    continue
                child, trw = refine(self.adj, individualize(node, w))
                perm = self.match(self.adj, self.maps, child, level + 1) if trw == tr else None
                if perm is None:
                    failed.append(w)
                    continue
                gens.append(perm)
                for x in range(n):
                    uf.union(x, perm[x])
        return gens


def find_isomorphism(
    adj1: Adjacency, colors1: Sequence[int], adj2: Adjacency, colors2: Sequence[int]
) -> list[int] | None:
    """Colour-preserving isomorphism from graph 1 to graph 2 as an image list."""
    if len(adj1) != len(adj2):
        return None
    if sorted(colors1) != sorted(colors2) or set(colors1) != set(colors2):
        return None
    s1 = PathSearch(adj1, colors1)
    root2, tr2 = refine(adj2, colors2)
    if tr2 != s1.root_trace:
        return None
    return s1.match(adj2, _adj_maps(adj2), root2, 0)
