"""Patches of uniform hyperbolic tilings in the Poincaré disk.

A tiling ``{p, q}`` here has valency ``p`` and ``q``-gonal faces.  Around
each vertex the ``p`` neighbours sit on one hyperbolic circle whose radius is
the edge length; in the disk model that circle is a Euclidean circle, just
not centred at the vertex (except at the origin).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property

from .errors import BoundExceeded

MAX_DEPTH = 6
DEDUP_TOL = 1e-9
CONCYCLIC_TOL = 1e-6


@dataclass(frozen=True)
class TilingSpec:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 3 or self.q < 3 or (self.p - 2) * (self.q - 2) <= 4:
            raise ValueError(f"{{{self.p},{self.q}}} is not a hyperbolic tiling")


def edge_length(spec: TilingSpec) -> float:
    """From the right triangle with angles π/2, π/p, π/q: cosh(L/2) = cos(π/q) / sin(π/p)."""
    return 2 * math.acosh(math.cos(math.pi / spec.q) / math.sin(math.pi / spec.p))


def inradius(spec: TilingSpec) -> float:
    """Face centre to edge midpoint: cosh = cos(π/p) / sin(π/q)."""
    return math.acosh(math.cos(math.pi / spec.p) / math.sin(math.pi / spec.q))


def hypotenuse_residual(spec: TilingSpec) -> float:
    """|cosh(L/2) cosh(inradius) - cot(π/p) cot(π/q)|; zero for a consistent triangle."""
    lhs = math.cosh(edge_length(spec) / 2) * math.cosh(inradius(spec))
    rhs = 1 / (math.tan(math.pi / spec.p) * math.tan(math.pi / spec.q))
    return abs(lhs - rhs)


def disk_distance(z: complex, w: complex) -> float:
    return 2 * math.atanh(abs(z - w) / abs(1 - z.conjugate() * w))


def _to(v: complex, z: complex) -> complex:
    """Möbius isometry sending 0 to v, applied to z."""
    return (z + v) / (1 + v.conjugate() * z)


def _from(v: complex, z: complex) -> complex:
    return (z - v) / (1 - v.conjugate() * z)


def rotate_about(v: complex, angle: float, z: complex) -> complex:
    return _to(v, cmath.exp(1j * angle) * _from(v, z))


@dataclass(frozen=True)
class EuclideanCircle:
    center: tuple[float, float]
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    def _radial(self) -> tuple[float, complex]:
        c = complex(*self.center)
        return abs(c), (c / abs(c) if abs(c) > 1e-15 else 1 + 0j)

    def hyperbolic_radius(self) -> float:
        """Half the hyperbolic length of the diameter on the ray through the centre."""
        m, _ = self._radial()
        return math.atanh(m + self.radius) - math.atanh(m - self.radius)

    def hyperbolic_center(self) -> complex:
        m, u = self._radial()
        return u * math.tanh((math.atanh(m + self.radius) + math.atanh(m - self.radius)) / 2)


def circle_through(z1: complex, z2: complex, z3: complex) -> tuple[complex, float]:
    """Euclidean circumcircle of three points."""
    a = z2 - z1
    b = z3 - z1
    det = 2 * (a.real * b.imag - a.imag * b.real)
    if abs(det) < 1e-15:
        raise ValueError("points are collinear")
    aa, bb = abs(a) ** 2, abs(b) ** 2
    c = complex(b.imag * aa - a.imag * bb, a.real * bb - b.real * aa) / det
    return z1 + c, abs(c)


class _PointIndex:
    """Spatial hash for deduplicating vertex positions."""

    def __init__(self, cell: float = 1e-6):
        self.cell = cell
        self.buckets: dict[tuple[int, int], list[int]] = {}
        self.points: list[complex] = []

    def _key(self, z: complex) -> tuple[int, int]:
        return int(math.floor(z.real / self.cell)), int(math.floor(z.imag / self.cell))

    def find(self, z: complex) -> int | None:
        kx, ky = self._key(z)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for i in self.buckets.get((kx + dx, ky + dy), ()):
                    if abs(self.points[i] - z) < DEDUP_TOL:
                        return i
        return None

    def add(self, z: complex) -> int:
        i = len(self.points)
        self.points.append(z)
        self.buckets.setdefault(self._key(z), []).append(i)
        return i


@dataclass(frozen=True)
class TilingPatch:
    spec: TilingSpec
    positions: tuple[complex, ...]
    edges: tuple[tuple[int, int], ...]
    interior_mask: tuple[bool, ...]
    depth_of: tuple[int, ...]
    neighbor_ring: tuple[tuple[int, ...] | None, ...]   # cyclic neighbour order of interior vertices

    @property
    def vertex_positions(self) -> list[tuple[float, float]]:
        return [(z.real, z.imag) for z in self.positions]

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.positions]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return [sorted(a) for a in adj]

    def interior_vertices(self) -> list[int]:
        return [v for v, inside in enumerate(self.interior_mask) if inside]


def build_patch(spec: TilingSpec, depth: int) -> TilingPatch:
    """Breadth-first patch: every vertex within ``depth`` edges of the origin."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > MAX_DEPTH:
        raise BoundExceeded(f"depth {depth} exceeds {MAX_DEPTH}")
    p = spec.p
    r0 = math.tanh(edge_length(spec) / 2)
    index = _PointIndex()
    index.add(0j)
    depth_of = [0]
    parent = [None]
    frontier = [0]
    rings: dict[int, list[complex]] = {}

    def ring_of(v: int) -> list[complex]:
        if v not in rings:
            z = index.points[v]
            if v == 0:
                rings[v] = [r0 * cmath.exp(2j * math.pi * k / p) for k in range(p)]
            else:
                u = index.points[parent[v]]
                rings[v] = [rotate_about(z, 2 * math.pi * k / p, u) for k in range(p)]
        return rings[v]

    for level in range(depth):
        nxt = []
        for v in frontier:
            for w in ring_of(v):
                if index.find(w) is None:
                    i = index.add(w)
                    depth_of.append(level + 1)
                    parent.append(v)
                    nxt.append(i)
        frontier = nxt

    n = len(index.points)
    ring_ids: list[tuple[int, ...] | None] = []
    edges = set()
    for v in range(n):
        ids = [index.find(w) for w in ring_of(v)]
        if any(i is None for i in ids):
            ring_ids.append(None)
            continue
        ring_ids.append(tuple(ids))
        edges.update((min(v, i), max(v, i)) for i in ids)
    mask = tuple(r is not None for r in ring_ids)
    return TilingPatch(spec, tuple(index.points), tuple(sorted(edges)), mask, tuple(depth_of), tuple(ring_ids))


def neighbor_circle(patch: TilingPatch, v: int) -> EuclideanCircle:
    """Euclidean circle through the neighbours of an interior vertex."""
    if not patch.interior_mask[v]:
        raise ValueError(f"vertex {v} is not interior")
    ring = [patch.positions[i] for i in patch.neighbor_ring[v]]
    p = len(ring)
    c, r = circle_through(ring[0], ring[p // 3], ring[(2 * p) // 3])
    residual = max(abs(abs(z - c) - r) for z in ring)
    if residual > CONCYCLIC_TOL:
        raise ArithmeticError(f"neighbours of {v} are not concyclic (residual {residual:.3g})")
    return EuclideanCircle((c.real, c.imag), r)


def concyclic_residual(patch: TilingPatch, v: int) -> float:
    circ = neighbor_circle(patch, v)
    c = complex(*circ.center)
    return max(abs(abs(patch.positions[i] - c) - circ.radius) for i in patch.neighbor_ring[v])


def geodesic_circle(z1: complex, z2: complex) -> tuple[complex, float] | None:
    """Circle orthogonal to the unit circle through z1, z2; None for a diameter."""
    if abs((z1.conjugate() * z2).imag) < 1e-12:
        return None
    anchor, other = (z1, z2) if abs(z1) >= abs(z2) else (z2, z1)
    return circle_through(anchor, other, anchor / abs(anchor) ** 2)


def render_svg(
    patch: TilingPatch | None,
    *,
    show_circles: bool = True,
    show_edges: bool = True,
    show_vertices: bool = True,
    edge_width: float = 1.0,
    circle_width: float = 0.8,
    size: int = 800,
) -> str:
    """SVG 1.1 drawing: disk boundary, geodesic edges, neighbour circles."""
    half = size / 2
    scale = half * 0.96

    def pt(z: complex) -> str:
        return f"{half + scale * z.real:.6f} {half - scale * z.imag:.6f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<circle class="boundary" cx="{half}" cy="{half}" r="{scale:.6f}" fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    if patch is not None:
        if show_edges:
            out.append(f'<g stroke="#234" stroke-width="{edge_width}" fill="none">')
            for u, v in patch.edges:
                z1, z2 = patch.positions[u], patch.positions[v]
                geo = geodesic_circle(z1, z2)
                if geo is None:
                    out.append(f'<path class="edge" d="M {pt(z1)} L {pt(z2)}"/>')
                    continue
                c, r = geo
                cross = ((z1 - c).conjugate() * (z2 - c)).imag
                sweep = 0 if cross > 0 else 1
                out.append(f'<path class="edge" d="M {pt(z1)} A {scale * r:.6f} {scale * r:.6f} 0 0 {sweep} {pt(z2)}"/>')
            out.append("</g>")
        if show_circles:
            out.append(f'<g stroke="#c33" stroke-width="{circle_width}" fill="none">')
            for v in patch.interior_vertices():
                circ = neighbor_circle(patch, v)
                cx, cy = pt(complex(*circ.center)).split()
                out.append(f'<circle class="neighbor-circle" cx="{cx}" cy="{cy}" r="{scale * circ.radius:.6f}"/>')
            out.append("</g>")
        if show_vertices:
            out.append('<g fill="black">')
            for z in patch.positions:
                cx, cy = pt(z).split()
                out.append(f'<circle class="vertex" cx="{cx}" cy="{cy}" r="{max(0.6, 3 * (1 - abs(z) ** 2)):.4f}"/>')
            out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def patch_to_json(patch: TilingPatch) -> dict:
    def fmt(x: float) -> float:
        return float(f"{x:.12g}")

    return {
        "p": patch.spec.p,
        "q": patch.spec.q,
        "edge_length": fmt(edge_length(patch.spec)),
        "vertices": [[fmt(z.real), fmt(z.imag)] for z in patch.positions],
        "edges": [list(e) for e in patch.edges],
        "interior": [int(m) for m in patch.interior_mask],
    }
