"""Named objects: graphs, regular maps and configurations, all built offline."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Union

from . import configs, graphs, maps
from .configs import Configuration
from .graphs import Multigraph
from .maps import RegularMap
from .perm import build_gl23, build_psl27, build_s5, is_prime

Built = Union[Multigraph, RegularMap, Configuration]

YP_MAX = 50


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str   # graph | map | configuration
    provenance: str


@lru_cache(maxsize=None)
def klein_map() -> RegularMap:
    return maps.build_map(maps.first_rotary_pair(build_psl27(), 3, 7), "klein-map")


@lru_cache(maxsize=None)
def bring_map() -> RegularMap:
    return maps.build_map(maps.first_rotary_pair(build_s5(), 4, 5), "bring-map")


@lru_cache(maxsize=None)
def bolza_map() -> RegularMap:
    return maps.build_map(maps.first_rotary_pair(build_gl23(), 3, 8), "bolza-map")


@lru_cache(maxsize=None)
def yp_map(p: int) -> RegularMap:
    return maps.build_yp_map(p)


def _map_config(m: RegularMap, component: bool = False) -> Configuration:
    c = configs.neighborhood_geometry(maps.underlying_graph(m))
    return configs.split_components(c)[0] if component else c


_FIXED: dict[str, tuple[str, str, Callable[[], Built]]] = {
    "pentagon": ("graph", "5-cycle, smallest Moore graph", lambda: graphs.cycle(5)),
    "petersen": ("graph", "Petersen graph, degree-3 Moore graph", lambda: graphs.generalized_petersen(5, 2)),
    "desargues-graph": ("graph", "Desargues graph GP(10,3)", lambda: graphs.generalized_petersen(10, 3)),
    "dodecahedron": ("graph", "dodecahedral graph GP(10,2)", lambda: graphs.generalized_petersen(10, 2)),
    "moebius-kantor": ("graph", "Möbius-Kantor graph GP(8,3)", lambda: graphs.generalized_petersen(8, 3)),
    "hoffman-singleton": ("graph", "Hoffman-Singleton graph, degree-7 Moore graph", graphs.hoffman_singleton),
    "rook-3x3": ("graph", "K3 x K3, collinearity graph of GQ(2,1)", lambda: graphs.rook(3, 3)),
    "paley-13": ("graph", "Paley graph on 13 vertices", lambda: graphs.paley(13)),
    "paley-13-cover": ("graph", "Kronecker cover of Paley(13), 6-regular on 26 vertices", lambda: graphs.kronecker_cover(graphs.paley(13))),
    "klein-map": ("map", "Klein quartic, {3,7} map from PSL(2,7)", klein_map),
    "klein-dual-map": ("map", "Klein quartic, dual {7,3} map", lambda: maps.dual_map(klein_map())),
    "bring-map": ("map", "Bring's curve, {4,5} map from S5", bring_map),
    "bring-dual-map": ("map", "Bring's curve, dual {5,4} map", lambda: maps.dual_map(bring_map())),
    "bolza-map": ("map", "Bolza curve, {3,8} map from GL(2,3)", bolza_map),
    "bolza-dual-map": ("map", "Bolza curve, dual {8,3} map", lambda: maps.dual_map(bolza_map())),
    "pentagon-geometry": ("configuration", "pentagonal geometry of the 5-cycle", lambda: configs.neighborhood_geometry(graphs.cycle(5))),
    "desargues-configuration": ("configuration", "Desargues 10_3 from the Petersen graph", lambda: configs.neighborhood_geometry(graphs.generalized_petersen(5, 2))),
    "hoffman-singleton-geometry": ("configuration", "pentagonal (7,7) geometry on 50 points", lambda: configs.neighborhood_geometry(graphs.hoffman_singleton())),
    "klein-56-3": ("configuration", "56_3 point-circle configuration on the Klein quartic", lambda: _map_config(klein_map())),
    "klein-dual-24-7": ("configuration", "24_7 configuration from the dual Klein map", lambda: _map_config(maps.dual_map(klein_map()))),
    "bring-30-4": ("configuration", "30_4 configuration on Bring's curve", lambda: _map_config(bring_map())),
    "bring-dual-12-5": ("configuration", "12_5 component from the dual Bring map", lambda: _map_config(maps.dual_map(bring_map()), True)),
    "bolza-8-3": ("configuration", "Möbius-Kantor 8_3 component on the Bolza curve", lambda: _map_config(bolza_map(), True)),
    "bolza-dual-6-4": ("configuration", "degenerate 6_4 from the dual Bolza map", lambda: _map_config(maps.dual_map(bolza_map()))),
    "gq21-geometry": ("configuration", "neighbourhood geometry of the GQ(2,1) grid", lambda: configs.neighborhood_geometry(graphs.rook(3, 3))),
    "paley-13-geometry": ("configuration", "13-point component of the Paley(13) cover", lambda: configs.split_components(configs.neighborhood_geometry(graphs.kronecker_cover(graphs.paley(13))))[0]),
}

_PARAMETRIC = {
    "yp-map": ("map", "{4,2p} map on the genus (p-1)^2 surface Y_p"),
    "yp-dual-map": ("map", "dual {2p,4} map on Y_p"),
    "yp-config": ("configuration", "p^2_4 component configuration on Y_p"),
}


def entries() -> list[CatalogEntry]:
    out = [CatalogEntry(name, kind, prov) for name, (kind, prov, _) in _FIXED.items()]
    out += [CatalogEntry(f"{name}:p", kind, prov) for name, (kind, prov) in _PARAMETRIC.items()]
    return out


class UnknownName(KeyError):
    pass


def _yp_param(name: str) -> tuple[str, int]:
    base, _, arg = name.partition(":")
    try:
        p = int(arg)
    except ValueError:
        raise UnknownName(f"{name!r}: expected {base}:p with an odd prime p") from None
    if p < 3 or not is_prime(p) or p > YP_MAX:
        raise UnknownName(f"{name!r}: p must be an odd prime <= {YP_MAX}")
    return base, p


def build(name: str) -> Built:
    if name in _FIXED:
        return _FIXED[name][2]()
    base = name.partition(":")[0]
    if base in _PARAMETRIC:
        base, p = _yp_param(name)
        m = yp_map(p)
        if base == "yp-map":
            return m
        if base == "yp-dual-map":
            return maps.dual_map(m)
        return _map_config(m, True)
    raise UnknownName(f"unknown catalog name {name!r}")


def kind_of(name: str) -> str:
    if name in _FIXED:
        return _FIXED[name][0]
    base = name.partition(":")[0]
    if base in _PARAMETRIC:
        return _PARAMETRIC[base][0]
    raise UnknownName(f"unknown catalog name {name!r}")


def catalog_graphs() -> dict[str, Multigraph]:
    """Every catalog graph plus the underlying graphs of the catalog maps (p = 3, 5)."""
    out = {}
    for name, (kind, _, fn) in _FIXED.items():
        if kind == "graph":
            out[name] = fn()
        elif kind == "map":
            out[name] = maps.underlying_graph(fn())
    for p in (3, 5):
        out[f"yp-map:{p}"] = maps.underlying_graph(yp_map(p))
        out[f"yp-dual-map:{p}"] = maps.underlying_graph(maps.dual_map(yp_map(p)))
    return out
