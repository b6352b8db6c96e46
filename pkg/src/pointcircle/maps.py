"""Regular maps as coset geometries of a rotary pair.

Type ``{p, q}`` means vertex valency ``p`` and face size ``q`` throughout
(this is *not* the Schläfli ordering).  For a rotary pair ``(x, y)`` of a
finite group ``G`` with ``z = (x y)^-1``: vertices are the left cosets of
``⟨y⟩``, edges those of ``⟨x⟩`` and faces those of ``⟨z⟩``; two cells are
incident when their cosets intersect.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .errors import BoundExceeded
from .graphs import Multigraph, quotient_by_partition
from .perm import Group, Perm, YpGroupHandle, build_yp_group, compose, orbits

PAIR_SEARCH_CAP = 10**5


@dataclass(frozen=True)
class RotaryPair:
    group: Group
    x: Perm
    y: Perm

    def __post_init__(self):
        if self.x.order() != 2:
            raise ValueError("x must be an involution")
        if Group(self.group.domain_size, (self.x, self.y)).element_count != self.group.element_count:
            raise ValueError("x and y do not generate the group")

    @property
    def z(self) -> Perm:
        return compose(self.x, self.y).inverse()

    @property
    def p(self) -> int:
        return self.y.order()

    @property
    def q(self) -> int:
        return self.z.order()


def iter_rotary_pairs(g: Group, p: int, q: int) -> Iterator[RotaryPair]:
    """Rotary pairs of type ``{p, q}`` in lexicographic order of ``(x, y)`` images."""
    if g.element_count > PAIR_SEARCH_CAP:
        raise BoundExceeded(f"group order {g.element_count} exceeds rotary-pair search cap {PAIR_SEARCH_CAP}")
    elems = g.elements()
    xs = [e for e in elems if e.order() == 2]
    ys = [e for e in elems if e.order() == p]
    full = g.element_count
    for x in xs:
        for y in ys:
            if compose(x, y).order() != q:
                continue
            if Group(g.domain_size, (x, y)).element_count == full:
                yield RotaryPair(g, x, y)


def find_rotary_pairs(g: Group, p: int, q: int) -> list[RotaryPair]:
    return list(iter_rotary_pairs(g, p, q))


def first_rotary_pair(g: Group, p: int, q: int) -> RotaryPair:
    for pair in iter_rotary_pairs(g, p, q):
        return pair
    raise ValueError(f"{g.name or 'group'} has no rotary pair of type {{{p},{q}}}")


def _cosets(elems: list[Perm], index: dict[Perm, int], gen: Perm) -> tuple[list[frozenset[int]], list[int]]:
    owner = [-1] * len(elems)
    cosets = []
    for i, e in enumerate(elems):
        if owner[i] >= 0:
            continue
        members = []
        h = e
        while True:
            j = index[h]
            if owner[j] >= 0:
                break
            owner[j] = len(cosets)
            members.append(j)
            h = compose(h, gen)
        cosets.append(frozenset(members))
    return cosets, owner


@dataclass(frozen=True, eq=False)
class RegularMap:
    pair: RotaryPair
    name: str = ""
    yp: YpGroupHandle | None = field(default=None, repr=False)
    translation_basis: tuple[Perm, Perm] | None = field(default=None, repr=False)

    @cached_property
    def elements(self) -> list[Perm]:
        return self.pair.group.elements()

    @cached_property
    def index(self) -> dict[Perm, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def _vertices(self):
        return _cosets(self.elements, self.index, self.pair.y)

    @cached_property
    def _edges(self):
        return _cosets(self.elements, self.index, self.pair.x)

    @cached_property
    def _faces(self):
        return _cosets(self.elements, self.index, self.pair.z)

    @property
    def vertices(self) -> list[frozenset[int]]:
        return self._vertices[0]

    @property
    def edges(self) -> list[frozenset[int]]:
        return self._edges[0]

    @property
    def faces(self) -> list[frozenset[int]]:
        return self._faces[0]

    @property
    def vertex_of(self) -> list[int]:
        return self._vertices[1]

    def incidence(self, kind_a: str, kind_b: str) -> set[tuple[int, int]]:
        """Cell pairs of the two kinds ('vertex', 'edge', 'face') whose cosets meet."""
        owners = {"vertex": self._vertices[1], "edge": self._edges[1], "face": self._faces[1]}
        oa, ob = owners[kind_a], owners[kind_b]
        return {(oa[i], ob[i]) for i in range(len(self.elements))}

    @property
    def type_pq(self) -> tuple[int, int]:
        return self.pair.p, self.pair.q

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        v, e, f = self.counts
        return v - e + f

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    @property
    def orientable(self) -> bool:
        return True

    def vertex_action(self, h: Perm) -> Perm:
        """Left multiplication by ``h`` on vertex cosets."""
        if not self.pair.group.contains(h):
            raise ValueError("element is not in the map's group")
        reps = [min(c) for c in self.vertices]
        return Perm(self.vertex_of[self.index[compose(h, self.elements[r])]] for r in reps)


def build_map(pair: RotaryPair, name: str = "", yp: YpGroupHandle | None = None) -> RegularMap:
    return RegularMap(pair, name, yp)


def underlying_graph(m: RegularMap) -> Multigraph:
    """One edge per edge coset, joining the vertex cosets at its two darts."""
    x = m.pair.x
    vof = m.vertex_of
    edges = []
    for coset in m.edges:
        g = min(coset)
        edges.append((vof[g], vof[m.index[compose(m.elements[g], x)]]))
    return Multigraph(len(m.vertices), tuple(edges))


def dual_map(m: RegularMap) -> RegularMap:
    """Rotary pair ``(x, x y)``: vertices and faces trade places."""
    pair = RotaryPair(m.pair.group, m.pair.x, compose(m.pair.x, m.pair.y))
    name = m.name[:-5] if m.name.endswith("-dual") else (m.name + "-dual" if m.name else "")
    return RegularMap(pair, name, m.yp, m.translation_basis)


def vertex_orbits(m: RegularMap, h: Perm) -> list[list[int]]:
    return orbits([m.vertex_action(h)], range(len(m.vertices)))


def pgonal_quotient(m: RegularMap, h: Perm) -> Multigraph:
    return quotient_by_partition(underlying_graph(m), vertex_orbits(m, h))


def translation_subgroup(handle: YpGroupHandle) -> list[Perm]:
    """Elements of order dividing p: the normal Sylow p-subgroup C_p x C_p."""
    return [e for e in handle.group.elements() if e.order() in (1, handle.p)]


def _conj(g: Perm, e: Perm) -> Perm:
    return compose(g.inverse(), compose(e, g))


def recover_translation_basis(pair: RotaryPair, handle: YpGroupHandle) -> tuple[Perm, Perm]:
    """Translations ``(a, b)`` read off the map itself.

    Of the p + 1 cyclic subgroups of the translation subgroup, exactly two
    are swapped by conjugation with both x and y; these hold ``ab`` and
    ``ab^-1``.  ``a`` spans one of the two lines that x normalises and y
    swaps, and ``b = y^-1 a y``.
    """
    p = handle.p
    lines: dict[frozenset[Perm], Perm] = {}
    for e in translation_subgroup(handle):
        if e.order() == p:
            line = frozenset(e**k for k in range(1, p))
            lines[line] = min(line)

    def line_of(e: Perm) -> frozenset[Perm]:
        return next(ln for ln in lines if e in ln)

    x, y = pair.x, pair.y
    axes = sorted(
        gen for ln, gen in lines.items() if line_of(_conj(x, gen)) == ln and line_of(_conj(y, gen)) != ln
    )
    if len(axes) != 2:
        raise AssertionError(f"expected two reflection axes among translations, found {len(axes)}")
    a = axes[0]
    b = _conj(y, a)
    swapped = []
    for ln, gen in lines.items():
        image = line_of(_conj(x, gen))
        if image != ln and image == line_of(_conj(y, gen)):
            swapped.append(ln)
    if {line_of(compose(a, b)), line_of(compose(a, b.inverse()))} != set(swapped):
        raise AssertionError("ab and ab^-1 are not the two lines swapped by x and y")
    return a, b


def build_yp_map(p: int, pair: RotaryPair | None = None) -> RegularMap:
    """Regular ``{4, 2p}`` map on (C_p x C_p) ⋊ D_4, by default the lexicographically least pair."""
    handle = build_yp_group(p)
    if pair is None:
        pair = first_rotary_pair(handle.group, 4, 2 * p)
    if (pair.p, pair.q) != (4, 2 * p):
        raise ValueError("rotary pair is not of type {4, 2p}")
    return RegularMap(pair, f"yp-map:{p}", handle, recover_translation_basis(pair, handle))


def pgonal_elements(m: RegularMap) -> dict[str, Perm]:
    """The two p-gonal automorphisms ``ab`` and ``ab^-1`` of a Y_p map."""
    if m.translation_basis is None:
        raise ValueError("not a Y_p map")
    a, b = m.translation_basis
    return {"ab": compose(a, b), "ab^-1": compose(a, b.inverse())}


def map_to_json(m: RegularMap) -> str:
    g = underlying_graph(m)
    v, e, f = m.counts
    p, q = m.type_pq
    record = {
        "name": m.name,
        "group": m.pair.group.name,
        "group_order": m.pair.group.element_count,
        "p": p,
        "q": q,
        "V": v,
        "E": e,
        "F": f,
        "genus": m.genus,
        "orientable": m.orientable,
        "x": list(m.pair.x.images),
        "y": list(m.pair.y.images),
        "adjacency": [sorted(w for w, mult in row.items() for _ in range(mult)) for row in g.multiplicity],
    }
    return json.dumps(record, indent=1)


def map_from_json(text: str | dict) -> RegularMap:
    """Rebuild a map from ``map_to_json`` output: ``x`` and ``y`` generate the group."""
    try:
        record = json.loads(text) if isinstance(text, str) else text
        x, y = Perm(record["x"]), Perm(record["y"])
        name = str(record.get("name", ""))
        group = Group(x.degree, (x, y), str(record.get("group", "")))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed map JSON: {exc}") from None
    return RegularMap(RotaryPair(group, x, y), name)
