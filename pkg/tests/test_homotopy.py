import random
from itertools import product

import pytest

from digitop.errors import DomainMismatch, NotPointed
from digitop.homotopy import (
    HomotopyCertificate,
    Status,
    check_certificate,
    homotopic,
    homotopy_class,
    homotopy_equivalent,
    is_contractible,
    is_irreducible,
    is_rigid,
    pointed_homotopic,
    single_step_homotopic,
)
from digitop.hspace import fixture
from digitop.image import complete, cycle, disjoint_union, enumerate_images, is_connected, make_image
from digitop.maps import (
    DigitalMap,
    compose,
    constant_map,
    enumerate_continuous_maps,
    identity_map,
    random_continuous_map,
)
from oracles import continuous_tables, homotopy_classes

C5 = cycle(5)
K1 = make_image(1)
K2 = complete(2)
ROT = DigitalMap(C5, C5, [(k + 1) % 5 for k in range(5)])


def small_images(max_n):
    for n in range(1, max_n + 1):
        yield from enumerate_images(n)


def test_single_step_examples():
    ident = identity_map(C5)
    assert single_step_homotopic(ident, ROT, 1)
    assert not single_step_homotopic(ident, ROT, 2)
    for cat in (1, 2):
        assert single_step_homotopic(ROT, ROT, cat)


def test_single_step_mismatch():
    with pytest.raises(DomainMismatch):
        single_step_homotopic(identity_map(C5), identity_map(K2), 1)


def test_rho_to_identity_in_two_steps(backend):
    rho = fixture("rho")
    ident = identity_map(rho.domain)
    v = homotopic(rho, ident, 1)
    assert v.yes and v.certificate.steps == 2
    assert check_certificate(v.certificate, rho, ident) == []


def test_rotation_not_np2_homotopic(backend):
    v = homotopic(ROT, identity_map(C5), 2)
    assert v.no


def test_trivial_homotopy():
    v = homotopic(identity_map(K1), identity_map(K1), 1)
    assert v.yes and v.certificate.steps == 0


def test_pointed_examples(backend):
    rho = fixture("rho")
    assert pointed_homotopic(rho, identity_map(rho.domain), 1, 0, 0).no
    v = pointed_homotopic(identity_map(K2), constant_map(K2, K2, 0), 1, 0, 0)
    assert v.yes and v.certificate.steps == 1
    assert all(m(0) == 0 for m in v.certificate.chain)
    assert pointed_homotopic(rho, rho, 2, 0, 0).yes
    with pytest.raises(NotPointed):
        pointed_homotopic(ROT, identity_map(C5), 1, 0, 0)


def test_class_examples():
    assert homotopy_class(identity_map(K1), 1).members == {identity_map(K1)}
    assert homotopy_class(identity_map(C5), 2).members == {identity_map(C5)}
    C4 = cycle(4)
    cls = homotopy_class(identity_map(C4), 1)
    oracle = homotopy_classes(C4, C4, 1)
    want = {t for t in oracle if oracle[t] == oracle[(0, 1, 2, 3)]}
    assert {m.values for m in cls.members} == want


def test_class_budget():
    cls = homotopy_class(identity_map(cycle(4)), 1, budget=3)
    assert cls.status is Status.INCONCLUSIVE and cls.members is None


def test_contractible_examples(backend):
    assert is_contractible(K2, 1).yes and is_contractible(K2, 2).yes
    assert is_contractible(C5, 1).no
    v = is_contractible(cycle(4), 1)
    assert v.yes and v.certificate.end.is_constant()
    assert is_contractible(cycle(4), 2).no
    assert is_contractible(disjoint_union(K1, K1), 1).no


def test_irreducible_examples(backend):
    assert is_irreducible(C5, 1).yes
    v = is_irreducible(fixture("five_twist_image"), 1)
    assert v.no and not v.witness.is_surjective()
    assert v.certificate.start == identity_map(fixture("five_twist_image"))
    assert is_irreducible(K2, 1).no


def test_rigid_examples(backend):
    assert is_rigid(C5, 2).yes
    v = is_rigid(C5, 1)
    assert v.no and v.witness != identity_map(C5)
    assert homotopic(v.witness, identity_map(C5), 1).yes
    assert is_rigid(K1, 1).yes


def test_equivalence_examples():
    v = homotopy_equivalent(K2, K1, 2)
    assert v.yes
    f, g = v.witness
    assert f.domain == K2 and g.domain == K1
    assert homotopy_equivalent(C5, K1, 1).no
    assert homotopy_equivalent(C5, C5, 1).yes
    assert homotopy_equivalent(fixture("five_twist_image"), C5, 1).yes


def test_pointed_equivalence():
    assert homotopy_equivalent(K2, K1, 1, pointed=(1, 0)).yes


def test_budget_gives_inconclusive():
    W = fixture("five_twist_image")
    v = homotopic(fixture("rho"), identity_map(W), 1, budget=2)
    assert v.inconclusive and v.explored == v.budget


def test_single_step_relations_exhaustive():
    for X in small_images(3):
        for Y in small_images(3):
            maps = list(enumerate_continuous_maps(X, Y))
            for f, g in product(maps, repeat=2):
                for cat in (1, 2):
                    assert single_step_homotopic(f, g, cat) == single_step_homotopic(g, f, cat)
                if single_step_homotopic(f, g, 2):
                    assert single_step_homotopic(f, g, 1)


@pytest.mark.parametrize("cat", [1, 2])
def test_homotopic_matches_closure_oracle(cat, backend):
    for X in small_images(3):
        for Y in small_images(3):
            oracle = homotopy_classes(X, Y, cat)
            maps = continuous_tables(X, Y)
            for f, g in product(maps, repeat=2):
                v = homotopic(DigitalMap(X, Y, f), DigitalMap(X, Y, g), cat)
                assert v.yes == (oracle[f] == oracle[g])
                assert v.status is not Status.INCONCLUSIVE


@pytest.mark.parametrize("cat", [1, 2])
def test_pointed_matches_closure_oracle(cat):
    for X in small_images(3):
        for Y in small_images(3):
            base = (0, Y.n - 1)
            oracle = homotopy_classes(X, Y, cat, base)
            maps = list(oracle)
            for f, g in product(maps, repeat=2):
                v = pointed_homotopic(DigitalMap(X, Y, f), DigitalMap(X, Y, g), cat, *base)
                assert v.yes == (oracle[f] == oracle[g])
                if v.yes:
                    assert homotopic(DigitalMap(X, Y, f), DigitalMap(X, Y, g), cat).yes


def test_transitivity_by_concatenation():
    rng = random.Random(11)
    C4 = cycle(4)
    maps = list(enumerate_continuous_maps(C4, C4))
    for _ in range(40):
        f, g, h = (rng.choice(maps) for _ in range(3))
        a, b = homotopic(f, g, 1), homotopic(g, h, 1)
        if a.yes and b.yes:
            chain = a.certificate.chain + b.certificate.chain[1:]
            assert check_certificate(HomotopyCertificate(chain, 1), f, h) == []
            assert homotopic(f, h, 1).yes


def test_composition_respects_homotopy():
    rng = random.Random(5)
    imgs = [X for X in small_images(4) if is_connected(X)]
    for _ in range(60):
        X, Y = rng.choice(imgs), rng.choice(imgs)
        f, g = random_continuous_map(X, Y, rng), random_continuous_map(X, Y, rng)
        v = homotopic(f, g, 1)
        if not v.yes:
            continue
        h = random_continuous_map(Y, X, rng)
        # push the certificate through h
        pushed = tuple(compose(h, m) for m in v.certificate.chain)
        assert check_certificate(HomotopyCertificate(pushed, 1), compose(h, f), compose(h, g)) == []
        k = random_continuous_map(Y, X, rng)
        pulled = tuple(compose(m, k) for m in v.certificate.chain)
        assert check_certificate(HomotopyCertificate(pulled, 1), compose(f, k), compose(g, k)) == []


def test_checker_rejects_bad_chains():
    ident = identity_map(C5)
    bad = HomotopyCertificate((ident, ROT), 2)
    assert check_certificate(bad)
    jump = DigitalMap(C5, C5, [(k + 2) % 5 for k in range(5)])
    assert check_certificate(HomotopyCertificate((ident, jump), 1))
    assert check_certificate(HomotopyCertificate((ident, ROT), 1, (0, 0)))
    assert check_certificate(HomotopyCertificate((ident, ROT), 1), ident, ident)


def test_irreducible_implies_rigid_in_np2():
    for X in small_images(5):
        if is_irreducible(X, 2).yes:
            assert is_rigid(X, 2).yes
