import random
from itertools import product

import pytest

from digitop.errors import BadLevel, CapExceeded, DomainMismatch
from digitop.hspace import fixture
from digitop.image import complete, cycle, enumerate_images, make_image
from digitop.maps import (
    DigitalMap,
    compose,
    constant_map,
    cross_map,
    enumerate_continuous_maps,
    identity_map,
    is_continuous,
    left_mult,
    np_adjacent,
    np_product,
    pair_map,
    product_map,
    random_continuous_map,
    right_mult,
)
from oracles import continuous_tables

K2 = complete(2)
C5 = cycle(5)


def small_images(max_n):
    for n in range(1, max_n + 1):
        yield from enumerate_images(n)


def test_continuity_examples():
    W = fixture("five_twist_image")
    assert is_continuous(identity_map(W))
    assert is_continuous(fixture("rho"))
    assert not is_continuous(DigitalMap(C5, C5, [0, 3, 2, 3, 4]))


def test_np1_product_of_edges():
    prod = np_product((K2, K2), 1)
    r = prod.rank
    assert prod.carrier.adjacent(r((0, 0)), r((0, 1)))
    assert prod.carrier.adjacent(r((0, 0)), r((1, 0)))
    assert not prod.carrier.adjacent(r((0, 0)), r((1, 1)))


def test_np2_product_of_edges_is_complete():
    assert np_product((K2, K2), 2).carrier == complete(4)


def test_np2_cycle_product():
    prod = np_product((C5, C5), 2)
    assert prod.carrier.adjacent(prod.rank((0, 0)), prod.rank((1, 1)))
    assert not prod.carrier.adjacent(prod.rank((0, 0)), prod.rank((1, 2)))


def test_product_levels():
    with pytest.raises(BadLevel):
        np_product((K2, K2), 3)
    with pytest.raises(BadLevel):
        np_product((), 1)


def test_codec_round_trip():
    prod = np_product((C5, K2, cycle(3)), 2)
    for r in range(prod.carrier.n):
        assert prod.rank(prod.unrank(r)) == r
    assert prod.rank((1, 0, 2)) == 1 * 6 + 0 * 3 + 2


def test_np_rule_matches_carrier_everywhere():
    for X in small_images(3):
        for Y in small_images(2):
            for u in (1, 2):
                prod = np_product((X, Y), u)
                for s in prod.tuples():
                    for t in prod.tuples():
                        assert prod.carrier.adjacent(prod.rank(s), prod.rank(t)) == np_adjacent((X, Y), u, s, t)


def test_np1_adjacent_implies_np2_adjacent():
    for X in small_images(4):
        for s in product(range(X.n), repeat=2):
            for t in product(range(X.n), repeat=2):
                if np_adjacent((X, X), 1, s, t):
                    assert np_adjacent((X, X), 2, s, t)


def test_compose():
    rho = fixture("rho")
    assert compose(identity_map(rho.codomain), rho) == rho
    assert compose(rho, rho) == rho
    c = constant_map(rho.codomain, rho.codomain, 2)
    assert compose(c, rho) == constant_map(rho.domain, rho.codomain, 2)
    with pytest.raises(DomainMismatch):
        compose(identity_map(K2), rho)


def test_identity_and_constants():
    K1 = make_image(1)
    assert identity_map(K1) == constant_map(K1, K1, 0)
    W = fixture("five_twist_image")
    assert constant_map(W, W, 0).values == (0,) * 6
    for X in small_images(5):
        assert is_continuous(identity_map(X))


def test_pair_map_examples():
    _, ok = pair_map(identity_map(C5), constant_map(C5, C5, 0), 1)
    assert ok
    _, ok = pair_map(identity_map(K2), identity_map(K2), 1)
    assert not ok
    _, ok = pair_map(identity_map(K2), identity_map(K2), 2)
    assert ok


def test_cross_map_examples():
    W = fixture("five_twist_image")
    rho = fixture("rho")
    for cat in (1, 2):
        ident = identity_map(W)
        assert cross_map(ident, ident, cat) == identity_map(np_product((W, W), cat).carrier)
        c = constant_map(W, W, 3)
        assert cross_map(c, c, cat).is_constant()
    assert is_continuous(cross_map(rho, identity_map(W), 1))


def test_slices():
    mu = fixture("five_twist_mu")
    tau = fixture("five_twist_tau")
    assert left_mult(mu.image, mu.mu, 0) == fixture("rho")
    assert left_mult(tau.image, tau.mu, 0) == identity_map(tau.image)
    assert right_mult(tau.image, tau.mu, 0) == identity_map(tau.image)
    for x in range(6):
        assert left_mult(mu.image, mu.mu, x).values == mu.mu[x]


def test_enumeration_examples(backend):
    K1 = make_image(1)
    assert len(list(enumerate_continuous_maps(K1, C5))) == 5
    assert len(list(enumerate_continuous_maps(K2, K2))) == 4
    C4 = cycle(4)
    assert sorted(m.values for m in enumerate_continuous_maps(C4, C4)) == sorted(continuous_tables(C4, C4))


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_continuous_maps(make_image(9), K2))


def test_enumeration_matches_brute_force_on_small_pairs(backend):
    for X in small_images(3):
        for Y in small_images(3):
            assert [m.values for m in enumerate_continuous_maps(X, Y)] == continuous_tables(X, Y)


def test_composition_preserves_continuity():
    rng = random.Random(3)
    imgs = list(small_images(4))
    for _ in range(300):
        X, Y, Z = (rng.choice(imgs) for _ in range(3))
        f = random_continuous_map(X, Y, rng)
        g = random_continuous_map(Y, Z, rng)
        assert is_continuous(f) and is_continuous(g)
        assert is_continuous(compose(g, f))


def test_np2_pairs_always_continuous():
    for X in small_images(3):
        for Y in small_images(3):
            maps = list(enumerate_continuous_maps(X, Y))
            for f in maps:
                for g in maps:
                    assert pair_map(f, g, 2)[1]


def test_cross_maps_continuous_in_both_categories():
    for X in small_images(3):
        maps = list(enumerate_continuous_maps(X, X))
        for f in maps:
            for g in maps:
                for cat in (1, 2):
                    assert is_continuous(cross_map(f, g, cat))


def test_triple_product_map():
    f = identity_map(K2)
    m = product_map((f, f, f), 2)
    assert m.domain.n == 8 and is_continuous(m)
