import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from conftest import nx_automorphism_count
from pointcircle import catalog, configs, graphs, maps
from pointcircle.configs import Configuration, neighborhood_geometry, summarize

FANO = Configuration(7, tuple(frozenset(b) for b in [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]))


def brute_force_automorphisms(c):
    blocks = Counter(c.blocks)
    return sum(
        1
        for p in itertools.permutations(range(c.point_count))
        if Counter(frozenset(p[x] for x in b) for b in c.blocks) == blocks
    )


def brute_force_polarity(c):
    """Search point->block bijections directly."""
    n = c.point_count
    for sigma in itertools.permutations(range(n)):
        # point x -> block sigma[x]; block j -> point tau[j]
        tau = [0] * n
        for x, j in enumerate(sigma):
            tau[j] = x
        # incidence preserved: x in B_j <=> tau[j] in B_sigma[x]; involution is automatic
        if all((x in c.blocks[j]) == (tau[j] in c.blocks[sigma[x]]) for x in range(n) for j in range(n)):
            return True
    return False


def test_fano_summary_and_symmetry():
    s = summarize(FANO)
    assert (s.v, s.b, s.r, s.k, s.linear_dimension, s.linear) == (7, 7, 3, 3, 1, True)
    assert configs.automorphism_order(FANO) == 168 == brute_force_automorphisms(FANO)
    assert configs.find_polarity(FANO) is not None
    assert brute_force_polarity(FANO)


def test_polarity_result_is_involutory_and_incidence_preserving():
    c = catalog.build("yp-config:3")
    pol = configs.find_polarity(c)
    p2b, b2p = pol["point_to_block"], pol["block_to_point"]
    n = c.point_count
    assert all(b2p[p2b[x]] == x for x in range(n))
    assert all((x in c.blocks[j]) == (b2p[j] in c.blocks[p2b[x]]) for x in range(n) for j in range(n))
    assert brute_force_polarity(c)


def test_polarity_absent():
    # point degrees (3, 2, 2) against block sizes (3, 3, 1): not even self-dual
    c = Configuration(3, (frozenset({0, 1, 2}), frozenset({0, 1, 2}), frozenset({0})))
    assert configs.find_polarity(c) is None
    assert not brute_force_polarity(c)


def test_desargues_configuration():
    c = neighborhood_geometry(graphs.generalized_petersen(5, 2))
    s = summarize(c)
    assert (s.v, s.r, s.k, s.linear) == (10, 3, 3, True)
    assert configs.automorphism_order(c) == 120
    assert configs.automorphism_order(c) * 2 == nx_automorphism_count(configs.levi_graph(c))
    assert configs.pentagonal_check(c).holds


def test_klein_56_3():
    c = catalog.build("klein-56-3")
    s = summarize(c)
    assert (s.v, s.r, s.linear) == (56, 3, True)
    assert configs.natural_polarity_holds(c)
    rep = configs.pentagonal_check(c)
    assert not rep.holds and "49" in rep.failure_witness[1]


def test_klein_dual_profile():
    c = catalog.build("klein-dual-24-7")
    assert summarize(c).linear_dimension == 2
    for x in range(c.point_count):
        assert Counter(configs.concurrence_counts(c, x).values()) == {0: 2, 2: 21}


def test_bolza_dual_degenerate_repeats():
    c = catalog.build("bolza-dual-6-4")
    assert sorted(configs.block_multiplicities(c).values()) == [2, 2, 2]
    s = summarize(c)
    assert s.distinct_block_count == 3 and s.linear_dimension == 2


def test_degenerate_single_block():
    c = neighborhood_geometry(graphs.Multigraph(4, ((0, 2), (0, 3), (1, 2), (1, 3))))
    comps = configs.split_components(c)
    assert len(comps) == 2
    s = summarize(comps[0])
    assert s.degenerate and s.linear_dimension is None and not s.linear


def test_empty_neighbourhood_rejected():
    with pytest.raises(ValueError):
        neighborhood_geometry(graphs.Multigraph(2, ()))


@pytest.mark.parametrize("g, params", [
    (graphs.cycle(5), (5, 2)),
    (graphs.generalized_petersen(5, 2), (10, 3)),
    (graphs.hoffman_singleton(), (50, 7)),
])
def test_moore_pentagonal_and_recovery(g, params):
    assert configs.moore_graph_check(g)
    c = neighborhood_geometry(g)
    s = summarize(c)
    assert (s.v, s.r) == params and s.k == s.r and s.b == s.v
    assert configs.pentagonal_check(c).holds
    d = configs.deficiency_graph(c)
    assert configs.is_isomorphic(neighborhood_geometry(d), c) is not None


def test_deficiency_graph_of_moore_geometry_is_the_graph():
    g = graphs.generalized_petersen(5, 2)
    assert graphs.graph_isomorphic(configs.deficiency_graph(neighborhood_geometry(g)), g) is not None


def test_non_moore():
    assert not configs.moore_graph_check(graphs.cycle(6))
    assert not configs.moore_graph_check(graphs.generalized_petersen(10, 2))


def test_removal():
    hosi = neighborhood_geometry(graphs.hoffman_singleton())
    r = configs.remove_point_and_opposite(hosi, 0)
    s = summarize(r)
    assert (s.v, s.k, s.r) == (42, 6, 7)
    assert configs.pentagonal_check(r).holds
    des = configs.remove_point_and_opposite(neighborhood_geometry(graphs.generalized_petersen(5, 2)), 0)
    ds = summarize(des)
    assert (ds.v, ds.k, ds.r) == (6, 2, 3) and configs.pentagonal_check(des).holds
    with pytest.raises(ValueError):
        configs.remove_point_and_opposite(catalog.build("klein-56-3"), 0)


def test_generalized_pentagonal():
    c = catalog.build("yp-config:3")
    rep = configs.generalized_pentagonal_check(c, 2)
    assert rep.holds and rep.count_formula
    assert not configs.generalized_pentagonal_check(c, 3).holds
    assert configs.is_isomorphic(c, neighborhood_geometry(graphs.rook(3, 3))) is not None
    paley = catalog.build("paley-13-geometry")
    rep = configs.generalized_pentagonal_check(paley, 3)
    assert rep.holds and rep.count_formula
    with pytest.raises(ValueError):
        configs.generalized_pentagonal_check(c, 0)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_yp_components(p):
    m = catalog.yp_map(p)
    comps = configs.split_components(neighborhood_geometry(maps.underlying_graph(m)))
    assert len(comps) == 2
    c = comps[0]
    s = summarize(c)
    assert (s.v, s.r, s.k, s.linear_dimension) == (p * p, 4, 4, 2)
    assert configs.automorphism_order(c) == 8 * p * p
    assert configs.find_polarity(c) is not None
    assert configs.is_isomorphic(comps[0], configs.dual(comps[1])) is not None


def test_bring_dual_antipodes():
    c = catalog.build("bring-dual-12-5")
    assert graphs.connected_components(configs.deficiency_graph(c)) and configs.deficiency_graph(c).regular_degree() == 1


def test_json_round_trip():
    c = catalog.build("bolza-8-3")
    back = configs.from_json(configs.to_json(c))
    assert back == c
    with pytest.raises(ValueError):
        configs.from_json('{"points": 3}')
    with pytest.raises(ValueError):
        configs.from_json({"points": 2, "labels": ["a"], "blocks": [[0]]})


def sample_graph(seed, bipartite):
    rng = random.Random(seed)
    while True:
        if bipartite:
            g = graphs.random_bipartite(rng.randint(2, 7), rng.randint(2, 7), 0.5, rng)
        else:
            g = graphs.random_graph(rng.randint(3, 12), 0.4, rng)
        if len(graphs.connected_components(g)) == 1 and not graphs.has_twins(g):
            return g


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_structural_identities_random(seed):
    g = sample_graph(seed, seed % 2 == 1)
    c = neighborhood_geometry(g)
    assert summarize(c).linear == (not graphs.has_four_cycle(g))
    assert graphs.graph_isomorphic(configs.levi_graph(c), graphs.kronecker_cover(g)) is not None
    assert configs.natural_polarity_holds(c)
    if graphs.is_bipartite(g)[0]:
        a, b = configs.split_components(c)
        assert configs.is_isomorphic(a, configs.dual(b)) is not None


def test_levi_is_kronecker_for_multigraph():
    g = graphs.Multigraph(3, ((0, 1), (0, 1), (1, 2), (2, 2)))
    c = neighborhood_geometry(g)
    assert graphs.graph_isomorphic(configs.levi_graph(c), graphs.kronecker_cover(graphs.simplify(g))) is not None


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_isomorphism_invariant_under_relabelling(seed):
    rng = random.Random(seed)
    c = neighborhood_geometry(sample_graph(seed, False))
    perm = rng.sample(range(c.point_count), c.point_count)
    blocks = tuple(frozenset(perm[x] for x in b) for b in c.blocks)
    shuffled = list(blocks)
    rng.shuffle(shuffled)
    c2 = Configuration(c.point_count, tuple(shuffled))
    m = configs.is_isomorphic(c, c2)
    assert m is not None
    assert all(frozenset(m["points"][x] for x in b) == c2.blocks[m["blocks"][j]] for j, b in enumerate(c.blocks))
    assert configs.automorphism_order(c) == configs.automorphism_order(c2)


def test_concurrence_bounds():
    with pytest.raises(ValueError):
        configs.concurrence_counts(FANO, 7)
