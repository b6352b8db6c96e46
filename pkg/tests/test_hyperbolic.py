import cmath
import math
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, strategies as st

from pointcircle import hyperbolic as hy
from pointcircle.errors import BoundExceeded

SPECS = [hy.TilingSpec(7, 3), hy.TilingSpec(4, 6), hy.TilingSpec(5, 4), hy.TilingSpec(3, 8)]


def test_rejects_non_hyperbolic():
    for p, q in [(3, 6), (4, 4), (6, 3), (3, 3), (2, 9)]:
        with pytest.raises(ValueError):
            hy.TilingSpec(p, q)


def test_edge_length_closed_forms():
    assert math.cosh(hy.edge_length(hy.TilingSpec(4, 5)) / 2) == pytest.approx(math.cos(math.pi / 5) * math.sqrt(2), abs=1e-14)
    for s in SPECS:
        a, b = math.pi / s.p, math.pi / s.q
        assert math.cosh(hy.edge_length(s) / 2) == pytest.approx((math.cos(b)) / math.sin(a), rel=1e-14)
        assert hy.hypotenuse_residual(s) < 1e-12


def test_disk_distance_along_radius():
    for r in (0.1, 0.5, 0.9):
        assert hy.disk_distance(0j, r) == pytest.approx(math.log((1 + r) / (1 - r)), rel=1e-13)


@given(st.complex_numbers(max_magnitude=0.8), st.complex_numbers(max_magnitude=0.8), st.complex_numbers(max_magnitude=0.8))
def test_mobius_is_isometry(v, z, w):
    d = hy.disk_distance(z, w)
    assert hy.disk_distance(hy._to(v, z), hy._to(v, w)) == pytest.approx(d, abs=1e-8)
    assert hy.disk_distance(hy.rotate_about(v, 1.1, z), hy.rotate_about(v, 1.1, w)) == pytest.approx(d, abs=1e-8)


def test_origin_ring():
    s = hy.TilingSpec(7, 3)
    patch = hy.build_patch(s, 1)
    assert len(patch.positions) == 8 and len(patch.edges) == 7
    assert patch.interior_vertices() == [0]
    assert hy.build_patch(s, 0).edges == ()


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_patch_invariants(spec):
    patch = hy.build_patch(spec, 3)
    L = hy.edge_length(spec)
    for u, v in patch.edges:
        assert abs(hy.disk_distance(patch.positions[u], patch.positions[v]) - L) < 1e-9
    interior = patch.interior_vertices()
    assert interior
    radii = []
    for v in interior:
        assert len(patch.neighbor_ring[v]) == spec.p
        assert hy.concyclic_residual(patch, v) < 1e-6
        circ = hy.neighbor_circle(patch, v)
        radii.append(circ.hyperbolic_radius())
        # the hyperbolic centre of the circle is the vertex itself
        assert abs(circ.hyperbolic_center() - patch.positions[v]) < 1e-9
    assert max(radii) - min(radii) < 1e-9
    assert abs(radii[0] - L) < 1e-9


def test_patch_counts_and_determinism():
    a = hy.build_patch(hy.TilingSpec(7, 3), 3)
    b = hy.build_patch(hy.TilingSpec(7, 3), 3)
    assert a == b
    assert (len(a.positions), len(a.edges), len(a.interior_vertices())) == (85, 140, 29)
    c = hy.build_patch(hy.TilingSpec(4, 6), 3)
    assert (len(c.positions), len(c.edges), len(c.interior_vertices())) == (49, 52, 17)


def test_interior_vertices_have_full_degree():
    patch = hy.build_patch(hy.TilingSpec(5, 4), 3)
    for v in patch.interior_vertices():
        assert len(patch.adjacency[v]) == 5


def test_depth_bounds():
    with pytest.raises(BoundExceeded):
        hy.build_patch(hy.TilingSpec(7, 3), hy.MAX_DEPTH + 1)
    with pytest.raises(ValueError):
        hy.build_patch(hy.TilingSpec(7, 3), -1)


def test_neighbor_circle_requires_interior():
    patch = hy.build_patch(hy.TilingSpec(7, 3), 2)
    boundary = next(v for v in range(len(patch.positions)) if not patch.interior_mask[v])
    with pytest.raises(ValueError):
        hy.neighbor_circle(patch, boundary)


def test_euclidean_circle_radius_from_centre():
    # a circle centred at the origin of Euclidean radius t has hyperbolic radius 2 atanh t
    assert hy.EuclideanCircle((0.0, 0.0), 0.5).hyperbolic_radius() == pytest.approx(2 * math.atanh(0.5))
    with pytest.raises(ValueError):
        hy.EuclideanCircle((0.0, 0.0), 0.0)


@given(st.floats(0.05, 2 * math.pi), st.floats(0.05, 2 * math.pi), st.floats(0.1, 0.9), st.floats(0.1, 0.9))
def test_geodesic_circle_is_orthogonal(t1, t2, r1, r2):
    z1, z2 = r1 * cmath.exp(1j * t1), r2 * cmath.exp(1j * t2)
    geo = hy.geodesic_circle(z1, z2)
    if geo is None:
        assert abs((z1.conjugate() * z2).imag) < 1e-12
        return
    c, r = geo
    assert abs(abs(c) ** 2 - (r * r + 1)) < 1e-9 * max(1.0, abs(c) ** 2)
    assert abs(abs(z1 - c) - r) < 1e-9 * max(1.0, r)
    assert abs(abs(z2 - c) - r) < 1e-9 * max(1.0, r)


def test_diameter_has_no_circle():
    assert hy.geodesic_circle(0.3 + 0j, -0.5 + 0j) is None


def test_svg_parses_with_counts():
    patch = hy.build_patch(hy.TilingSpec(7, 3), 2)
    root = ET.fromstring(hy.render_svg(patch))
    classes = [el.get("class") for el in root.iter()]
    assert classes.count("neighbor-circle") == len(patch.interior_vertices())
    assert classes.count("edge") == len(patch.edges)
    assert classes.count("vertex") == len(patch.positions)
    assert classes.count("boundary") == 1
    bare = ET.fromstring(hy.render_svg(patch, show_circles=False, show_vertices=False))
    assert [el.get("class") for el in bare.iter()].count("neighbor-circle") == 0
    assert ET.fromstring(hy.render_svg(None)) is not None


def test_patch_json():
    patch = hy.build_patch(hy.TilingSpec(4, 6), 1)
    rec = hy.patch_to_json(patch)
    assert rec["p"] == 4 and len(rec["vertices"]) == 5 and len(rec["edges"]) == 4
    assert rec["interior"] == [1, 0, 0, 0, 0]
