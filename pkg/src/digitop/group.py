"""Finite groups, Cayley graphs and digital topological groups."""

from dataclasses import dataclass

from .errors import BadSubset, NoIdentity, NoInverse, NotAssociative, SizeMismatch, StructureViolation
from .hspace import HSpaceStructure
from .image import DigitalImage, components, make_image
from .maps import DigitalMap, check_category, continuity_violation, multiplication_map, np_product


@dataclass(frozen=True)
class GroupStructure:
    n: int
    mul: tuple
    identity: int
    inv: tuple

    def __call__(self, a, b):
        return self.mul[a][b]


def make_group(table):
    """Validate a multiplication table; raises on the first violated axiom."""
    mul = tuple(tuple(int(v) for v in row) for row in table)
    n = len(mul)
    if n == 0 or any(len(row) != n for row in mul):
        raise SizeMismatch("group table must be square and nonempty")
    if any(not 0 <= v < n for row in mul for v in row):
        raise SizeMismatch("table value out of range")
    ident = next((e for e in range(n) if all(mul[e][a] == a == mul[a][e] for a in range(n))), None)
    if ident is None:
        raise NoIdentity("no two-sided identity")
    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")
    inv = []
    for a in range(n):
        b = next((b for b in range(n) if mul[a][b] == ident == mul[b][a]), None)
        if b is None:
            raise NoInverse(f"element {a} has no inverse")
        inv.append(b)
    return GroupStructure(n, mul, ident, tuple(inv))


def cyclic_group(n):
    return make_group([[(a + b) % n for b in range(n)] for a in range(n)])


def direct_product(G, H):
    """Pairs ``(g, h)`` encoded as ``g * H.n + h``."""
    m = H.n
    table = [
        [G.mul[a // m][b // m] * m + H.mul[a % m][b % m] for b in range(G.n * m)] for a in range(G.n * m)
    ]
    return make_group(table)


def dihedral_group(m):
    """Symmetries of an m-gon: ``r^k`` is ``k``, ``s r^k`` is ``m + k``."""
    def mul(a, b):
        fa, ka = divmod(a, m)
        fb, kb = divmod(b, m)
        k = (kb + ka) % m if not fb else (kb - ka) % m
        return ((fa + fb) % 2) * m + k

    return make_group([[mul(a, b) for b in range(2 * m)] for a in range(2 * m)])


def quaternion_group():
    """``Q8`` as ``(-1)^s i^a j^b`` encoded ``4 s + 2 a + b``."""
    units = {}
    names = [(1, "1"), (1, "i"), (1, "j"), (1, "k"), (-1, "1"), (-1, "i"), (-1, "j"), (-1, "k")]
    rule = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    for idx, key in enumerate(names):
        units[key] = idx

    def mul(a, b):
        sa, ua = names[a]
        sb, ub = names[b]
        s, u = rule[(ua, ub)]
        return units[(sa * sb * s, u)]

    return make_group([[mul(a, b) for b in range(8)] for a in range(8)])


def _element_orders(mul, ident):
    out = []
    for a in range(len(mul)):
        k, x = 1, a
        while x != ident:
            x = mul[x][a]
            k += 1
        out.append(k)
    return out


def _signature(G):
    n = G.n
    abelian = all(G.mul[a][b] == G.mul[b][a] for a in range(n) for b in range(n))
    return tuple(sorted(_element_orders(G.mul, G.identity))), abelian


def isomorphism(G, H):
    """A bijection ``phi`` with ``phi(ab) = phi(a) phi(b)``, as a tuple, or None."""
    if G.n != H.n:
        return None
    n = G.n
    og = _element_orders(G.mul, G.identity)
    oh = _element_orders(H.mul, H.identity)
    if sorted(og) != sorted(oh):
        return None
    phi = [None] * n
    used = [False] * n

    def consistent(a):
        # products involving the newly placed element a
        for b in range(n):
            if phi[b] is None:
                continue
            for x, y in ((a, b), (b, a)):
                c = G.mul[x][y]
                if phi[c] is not None and phi[c] != H.mul[phi[x]][phi[y]]:
                    return False
        return True

    def extend(a):
        if a == n:
            return True
        if phi[a] is not None:
            return extend(a + 1)
        for w in range(n):
            if used[w] or oh[w] != og[a]:
                continue
            phi[a] = w
            used[w] = True
            if consistent(a) and extend(a + 1):
                return True
            phi[a] = None
            used[w] = False
        return False

    phi[G.identity] = H.identity
    used[H.identity] = True
    return tuple(phi) if extend(0) else None


def enumerate_groups(n):
    """One table per isomorphism class of groups of order ``n``, identity 0.

    Latin-square backtracking; each new cell is checked against every
    associativity triple that reads it, so dead branches die early.
    Duplicates are dropped by isomorphism tests inside signature buckets.
    """
    if n < 1:
        raise SizeMismatch("group order must be positive")
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]
    T = [[None] * n for _ in range(n)]
    for a in range(n):
        T[0][a] = a
        T[a][0] = a
    row_used = [1 << a for a in range(n)]
    col_used = [1 << b for b in range(n)]
    buckets = {}
    found = []

    def agree(x, y):
        return x is None or y is None or x == y

    def cell_ok(a, b):
        ab = T[a][b]
        for x in range(n):
            bx = T[b][x]
            if bx is not None and not agree(T[ab][x], T[a][bx]):
                return False
            xa = T[x][a]
            if xa is not None and not agree(T[xa][b], T[x][ab]):
                return False
            for y in range(n):
                if T[x][y] == a:
                    yb = T[y][b]
                    if yb is not None and not agree(ab, T[x][yb]):
                        return False
                if T[x][y] == b:
                    ax = T[a][x]
                    if ax is not None and not agree(T[ax][y], ab):
                        return False
        return True

    def extend(k):
        if k == len(cells):
            G = make_group(T)
            reps = buckets.setdefault(_signature(G), [])
            if not any(isomorphism(G, R) for R in reps):
                reps.append(G)
                found.append(G)
            return
        a, b = cells[k]
        free = ~(row_used[a] | col_used[b])
        for c in range(n):
            if not (free >> c) & 1:
                continue
            T[a][b] = c
            row_used[a] |= 1 << c
            col_used[b] |= 1 << c
            if cell_ok(a, b):
                extend(k + 1)
            row_used[a] &= ~(1 << c)
            col_used[b] &= ~(1 << c)
            T[a][b] = None

    extend(0)
    return found


def _check_subset(G, S):
    S = frozenset(int(s) for s in S)
    if any(not 0 <= s < G.n for s in S):
        raise BadSubset(f"subset {sorted(S)} not contained in a group of order {G.n}")
    return S


def cayley_graph(G, S):
    """``a ~ b`` iff ``a b^-1`` or ``b a^-1`` lies in ``S``; loops always present."""
    S = _check_subset(G, S)
    edges = [
        (a, b)
        for a in range(G.n)
        for b in range(a + 1, G.n)
        if G.mul[a][G.inv[b]] in S or G.mul[b][G.inv[a]] in S
    ]
    return make_image(G.n, edges)


@dataclass(frozen=True)
class DigitalTopologicalGroup:
    image: DigitalImage
    group: GroupStructure
    category: int


@dataclass(frozen=True)
class Check:
    ok: bool
    witness: object = None
    note: str = ""

    def __bool__(self):
        return self.ok


def is_digital_topological_group(img, G, cat):
    """Continuous multiplication on ``NP_cat(X, X)`` plus continuous inversion.

    A failing check carries the offending edge as ``witness``: a pair of
    product points for the multiplication, or a pair of vertices for
    inversion.
    """
    check_category(cat)
    if img.n != G.n:
        raise SizeMismatch(f"image has {img.n} vertices, group has order {G.n}")
    bad = continuity_violation(multiplication_map(img, G.mul, cat))
    if bad is not None:
        prod = np_product((img, img), cat)
        return Check(False, (prod.unrank(bad[0]), prod.unrank(bad[1])), "multiplication")
    bad = continuity_violation(DigitalMap(img, img, G.inv))
    if bad is not None:
        return Check(False, bad, "inversion")
    if cat == 1:
        for x in range(G.n):
            nu = [G.mul[y][x] for y in range(G.n)]
            if any(img.adjacent(a, b) != img.adjacent(nu[a], nu[b]) for a in range(G.n) for b in range(G.n)):
                raise AssertionError(f"right multiplication by {x} is not an automorphism")
    return Check(True)


def as_topological_group(img, G, cat):
    c = is_digital_topological_group(img, G, cat)
    if not c:
        raise StructureViolation(f"not a digital topological group: {c.note} fails at {c.witness}")
    return DigitalTopologicalGroup(img, G, cat)


def identity_neighborhood(dtg):
    e = dtg.group.identity
    return frozenset(dtg.image.adj[e])


def cayley_reconstruction_check(dtg):
    """The image equals, label for label, the Cayley graph on the identity's neighbours."""
    return cayley_graph(dtg.group, identity_neighborhood(dtg)) == dtg.image


def generates(G, S):
    """Closure of ``{e} + S`` under multiplication is the whole group."""
    S = _check_subset(G, S)
    reached = {G.identity} | set(S)
    frontier = list(reached)
    while frontier:
        nxt = []
        for a in frontier:
            for s in S:
                c = G.mul[a][s]
                if c not in reached:
                    reached.add(c)
                    nxt.append(c)
        frontier = nxt
    return len(reached) == G.n


@dataclass(frozen=True)
class ClusterReport:
    ok: bool
    connected: bool
    cluster_sizes: tuple

    def __bool__(self):
        return self.ok


def classify_np2_group_image(img):
    """Accept exactly the cluster graphs whose clusters all have one size.

    ``connected`` describes the image; an accepted connected image is complete.
    """
    blocks = components(img).blocks
    sizes = tuple(sorted(len(b) for b in blocks))
    complete = all(all(img.nbr[v] & sum(1 << u for u in b) == sum(1 << u for u in b) for v in b) for b in blocks)
    ok = complete and len(set(sizes)) == 1
    return ClusterReport(ok, len(blocks) == 1, sizes)


def hspace_from_group(dtg):
    return HSpaceStructure(dtg.image, dtg.group.identity, dtg.group.mul, dtg.category)


__all__ = [
    "Check",
    "ClusterReport",
    "DigitalTopologicalGroup",
    "GroupStructure",
    "as_topological_group",
    "cayley_graph",
    "cayley_reconstruction_check",
    "classify_np2_group_image",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "enumerate_groups",
    "generates",
    "hspace_from_group",
    "identity_neighborhood",
    "is_digital_topological_group",
    "isomorphism",
    "make_group",
    "quaternion_group",
]
