import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pointcircle.perm import (
    Group,
    Perm,
    StabilizerChain,
    build_gl23,
    build_psl27,
    build_s5,
    build_yp_group,
    closure,
    compose,
    group_order,
    is_prime,
    matrix_perm_gl23,
    order_of,
    orbits,
)

perms = st.integers(min_value=1, max_value=7).flatmap(lambda n: st.permutations(range(n)).map(Perm))


def test_compose_applies_right_factor_first():
    f = Perm([1, 2, 0])
    g = Perm([1, 0, 2])
    assert compose(f, g)(0) == f(g(0)) == 2
    assert (f * g).images == tuple(f(g(i)) for i in range(3))


def test_s3_multiplication_table_against_brute_force():
    elems = [Perm(p) for p in itertools.permutations(range(3))]
    for f in elems:
        for g in elems:
            assert compose(f, g).images == tuple(f.images[g.images[i]] for i in range(3))


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Perm([0, 0, 1])


def test_cycles_and_order():
    p = Perm.from_cycles(6, [(0, 1, 2), (3, 4)])
    assert p.order() == 6 == order_of(p)
    assert sorted(map(tuple, p.cycles())) == [(0, 1, 2), (3, 4), (5,)]
    assert (p ** 6).is_identity()
    assert (p ** -1) == p.inverse()


@given(perms)
def test_inverse_is_two_sided(p):
    assert compose(p, p.inverse()).is_identity()
    assert compose(p.inverse(), p).is_identity()


@given(perms)
def test_power_matches_repeated_product(p):
    q = Perm.identity(p.degree)
    for k in range(5):
        assert p ** k == q
        q = compose(q, p)


@pytest.mark.parametrize(
    "build, order",
    [(build_psl27, 168), (build_s5, 120), (build_gl23, 48)],
)
def test_named_group_orders_match_closure(build, order):
    g = build()
    assert g.element_count == order
    assert len(closure(g.generators, g.domain_size)) == order


def test_gl23_order_by_matrix_enumeration():
    mats = [((a, b), (c, d)) for a, b, c, d in itertools.product(range(3), repeat=4) if (a * d - b * c) % 3]
    assert len(mats) == 48
    images = {matrix_perm_gl23(m) for m in mats}
    assert len(images) == 48
    g = build_gl23()
    assert all(g.contains(p) for p in images)


def test_psl27_orbits_and_membership():
    g = build_psl27()
    assert g.orbits() == [list(range(8))]
    assert not g.contains(Perm.from_cycles(8, [(0, 1)]))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_yp_group_order_and_relations(p):
    h = build_yp_group(p)
    a, b, s, t = h.a, h.b, h.s, h.t
    assert h.group.element_count == 8 * p * p
    assert compose(a, b) == compose(b, a)
    assert compose(compose(t.inverse(), a), t) == b
    assert compose(compose(t.inverse(), b), t) == a.inverse()
    assert compose(compose(s.inverse(), a), s) == a.inverse()
    assert compose(compose(s, b), s) == b
    assert compose(s, t).order() == 2
    if p <= 5:
        assert len(closure(h.group.generators, h.group.domain_size)) == 8 * p * p


def test_elements_sorted_and_complete():
    g = Group(4, (Perm([1, 2, 3, 0]), Perm([1, 0, 2, 3])))
    e = g.elements()
    assert e == sorted(set(e)) and len(e) == 24
    assert set(e) == {Perm(p) for p in itertools.permutations(range(4))}


def test_group_order_cap():
    from pointcircle.errors import BoundExceeded

    with pytest.raises(BoundExceeded):
        group_order(build_s5(), cap=100)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.permutations(range(6)).map(Perm), min_size=1, max_size=3))
def test_chain_order_matches_closure(gens):
    chain = StabilizerChain(6, gens)
    elements = closure(gens, 6)
    assert chain.order() == len(elements)
    assert all(chain.contains(e) for e in elements)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.permutations(range(7)).map(Perm), min_size=1, max_size=3))
def test_orbits_partition_domain(gens):
    parts = orbits(gens, range(7))
    flat = sorted(x for part in parts for x in part)
    assert flat == list(range(7))
    for part in parts:
        for g in gens:
            assert {g(x) for x in part} == set(part)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
