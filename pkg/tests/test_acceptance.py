"""End-to-end acceptance checks, one test per requirement.

Run alone with ``pytest -v tests/test_acceptance.py``; each test prints a
single PASS/FAIL line.
"""

import random
from itertools import chain, combinations, islice, product

import pytest

from conftest import AUDIT
from digitop.group import (
    DigitalTopologicalGroup,
    cayley_graph,
    cayley_reconstruction_check,
    classify_np2_group_image,
    cyclic_group,
    enumerate_groups,
    generates,
    is_digital_topological_group,
)
from digitop.homotopy import (
    check_certificate,
    homotopic,
    homotopy_equivalent,
    is_contractible,
    is_irreducible,
    is_rigid,
    pointed_homotopic,
)
from digitop.hspace import (
    MagmaStructure,
    associator_probe,
    decompose_np2,
    fixture,
    magma_point_extension,
    search_hspace_multiplications,
    verify_hspace,
)
from digitop.image import complete, cycle, disjoint_union, enumerate_images, is_connected, make_image
from digitop.maps import DigitalMap, identity_map, left_mult, np_product, random_continuous_map, table_from_map
from oracles import continuous_tables, homotopy_classes

C5 = cycle(5)
# structures examined per contractible image; their tables are too many to list
SAMPLE = 20


@pytest.fixture
def report(request):
    """Print one PASS/FAIL line for the running test."""
    outcome = {}
    yield outcome
    status = "PASS" if outcome.get("ok") else "FAIL"
    print(f"\n[{status}] {request.node.name} {outcome.get('detail', '')}")


def images_up_to(n):
    for k in range(1, n + 1):
        yield from enumerate_images(k)


def labeled_images(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield make_image(n, [p for k, p in enumerate(pairs) if (mask >> k) & 1])


def test_01_five_twist_unpointed_hspace(report):
    H = fixture("five_twist_mu")
    r = verify_hspace(H.image, 0, H.mu, 1)
    assert r.is_hspace.yes and r.unital is False and r.pointed.no
    assert left_mult(H.image, H.mu, 0).values == fixture("rho").values
    report.update(ok=True)


def test_02_five_twist_pointed_hspace(report):
    H = fixture("five_twist_tau")
    r = verify_hspace(H.image, 0, H.mu, 1)
    assert r.is_hspace.yes and r.unital and r.pointed.yes
    first, second = associator_probe(H, fixture("d1"), fixture("d4"))
    assert first.values == fixture("rho").values
    assert second.values == identity_map(H.image).values
    assert pointed_homotopic(fixture("rho"), identity_map(H.image), 1, 0, 0).no
    report.update(ok=True)


def test_03_c5_dichotomy(report):
    assert is_irreducible(C5, 1).yes
    v = is_rigid(C5, 1)
    assert v.no
    rotations = {tuple((k + s) % 5 for k in range(5)) for s in (1, 4)}
    assert v.witness.values in rotations
    assert is_rigid(C5, 2).yes
    assert is_contractible(C5, 1).no
    report.update(ok=True)


def test_04_np2_irreducible_implies_rigid(report):
    checked = 0
    bad = []
    for X in images_up_to(5):
        if not is_connected(X):
            continue
        v = is_irreducible(X, 2)
        assert not v.inconclusive
        if v.yes:
            checked += 1
            if not is_rigid(X, 2).yes:
                bad.append(X.edges)
    assert not bad, bad
    report.update(ok=True, detail=f"irreducible={checked}")


def test_05_connected_np2_hspaces_are_contractible(report):
    sampled = empty = 0
    for X in images_up_to(4):
        if not is_connected(X):
            continue
        contractible = is_contractible(X, 2)
        assert not contractible.inconclusive
        for e in range(X.n):
            if contractible.yes:
                found = list(islice(search_hspace_multiplications(X, e, 2), SAMPLE))
                assert found
                for H in found:
                    assert H.verify(pointed=False).is_hspace.yes
                sampled += len(found)
            else:
                assert list(search_hspace_multiplications(X, e, 2)) == [], X.edges
                empty += 1
    report.update(ok=True, detail=f"sampled={sampled} empty_searches={empty}")


@pytest.mark.slow
def test_06_np2_decomposition_round_trip(report):
    total = 0
    for X in images_up_to(4):
        if not is_irreducible(X, 2).yes:
            continue
        for e in range(X.n):
            for H in search_hspace_multiplications(X, e, 2):
                d = decompose_np2(H)
                assert d.reconstruct(X.n) == H.mu
                total += 1
    report.update(ok=True, detail=f"structures={total}")


def random_magma(rng, cat):
    n = rng.randint(1, 4)
    Z = make_image(n, [p for p in combinations(range(n), 2) if rng.random() < 0.5])
    prod = np_product((Z, Z), cat)
    return MagmaStructure(Z, table_from_map(Z, random_continuous_map(prod.carrier, Z, rng)), cat)


def test_07_magma_point_extension(report):
    rng = random.Random(2024)
    for k in range(50):
        M = random_magma(rng, 1 + k % 2)
        assert M.is_continuous()
        H = magma_point_extension(M)
        r = verify_hspace(H.image, H.basepoint, H.mu, H.category, pointed=False)
        assert r.is_hspace.yes and r.unital
    report.update(ok=True)


def test_08_cayley_graphs(report):
    G4 = cyclic_group(4)
    assert cayley_graph(G4, {1, 2}) == complete(4)
    assert cayley_graph(G4, {1}) == cycle(4)
    failures = []
    pairs = 0
    for n in range(1, 7):
        for G in enumerate_groups(n):
            for S in chain.from_iterable(combinations(range(n), k) for k in range(n + 1)):
                pairs += 1
                img = cayley_graph(G, S)
                sym = set(S) | {G.inv[s] for s in S}
                assert is_connected(img) == generates(G, sym)
                assert cayley_reconstruction_check(DigitalTopologicalGroup(img, G, 1))
                c = is_digital_topological_group(img, G, 1)
                if not c:
                    failures.append((n, S, c.note, c.witness))
    report.update(ok=not failures, detail=f"pairs={pairs} non_topological={len(failures)}")
    assert not failures, f"{len(failures)} Cayley graphs fail, first {failures[0]}"


def test_09_np2_group_images_are_equal_cluster_graphs(report):
    K3, K2 = complete(3), complete(2)
    assert classify_np2_group_image(disjoint_union(K3, K3))
    assert not classify_np2_group_image(disjoint_union(K3, K2))
    assert not classify_np2_group_image(C5)
    found = 0
    for n in range(1, 5):
        for G in enumerate_groups(n):
            for img in labeled_images(n):
                if is_digital_topological_group(img, G, 2):
                    found += 1
                    assert classify_np2_group_image(img), (n, img.edges)
    report.update(ok=True, detail=f"np2_groups={found}")


@pytest.mark.parametrize("cat", [1, 2])
def test_10_homotopic_matches_oracle(cat, report):
    pairs = 0
    for X in images_up_to(3):
        for Y in images_up_to(3):
            oracle = homotopy_classes(X, Y, cat)
            maps = continuous_tables(X, Y)
            for f, g in product(maps, repeat=2):
                v = homotopic(DigitalMap(X, Y, f), DigitalMap(X, Y, g), cat)
                assert not v.inconclusive
                assert v.yes == (oracle[f] == oracle[g])
                pairs += 1
    report.update(ok=True, detail=f"pairs={pairs}")


def test_11_certificate_audit(report):
    # fresh YES verdicts of every certified kind, on top of the suite so far
    rng = random.Random(7)
    imgs = [X for X in images_up_to(4) if is_connected(X)]
    for _ in range(40):
        X, Y = rng.choice(imgs), rng.choice(imgs)
        f, g = random_continuous_map(X, Y, rng), random_continuous_map(X, Y, rng)
        for cat in (1, 2):
            v = homotopic(f, g, cat)
            for cert in v.certificates:
                assert check_certificate(cert, f, g) == []
    for X in imgs:
        for cat in (1, 2):
            is_contractible(X, cat)
            homotopy_equivalent(X, complete(1), cat)
    fixture("five_twist_tau").verify()
    assert AUDIT["checked"] > 0 and AUDIT["certificates"] > 0
    assert AUDIT["failures"] == []
    report.update(ok=True, detail=f"verdicts={AUDIT['checked']} certificates={AUDIT['certificates']}")
