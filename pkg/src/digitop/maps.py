"""Continuous maps, normal product images and map combinators."""

from functools import lru_cache
from itertools import product

from . import kernels
from .errors import BadLevel, CapExceeded, DomainMismatch, VertexOutOfRange
from .image import DigitalImage

CATEGORIES = (1, 2)
MAP_ENUMERATION_CAP = 8


def check_category(cat):
    if cat not in CATEGORIES:
        raise BadLevel(f"category must be 1 or 2, got {cat!r}")
    return cat


class DigitalMap:
    """Total function between digital images, stored as a value table."""

    __slots__ = ("domain", "codomain", "values")

    def __init__(self, domain, codomain, values):
        values = tuple(values)
        if len(values) != domain.n:
            raise DomainMismatch(f"table has {len(values)} entries, domain has {domain.n} vertices")
        for v in values:
            if not 0 <= v < codomain.n:
                raise VertexOutOfRange(f"value {v} outside codomain of {codomain.n} vertices")
        self.domain = domain
        self.codomain = codomain
        self.values = values

    def __call__(self, x):
        return self.values[x]

    def __eq__(self, other):
        return (
            isinstance(other, DigitalMap)
            and self.values == other.values
            and self.domain == other.domain
            and self.codomain == other.codomain
        )

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"DigitalMap({list(self.values)})"

    def is_surjective(self):
        return len(set(self.values)) == self.codomain.n

    def is_injective(self):
        return len(set(self.values)) == self.domain.n

    def is_constant(self):
        return len(set(self.values)) == 1

    def is_pointed(self, base_dom, base_cod):
        return self.values[base_dom] == base_cod


class ProductImage:
    """``NP_u`` product of factor images with a mixed-radix codec.

    The last factor varies fastest: for two factors of sizes ``(n, m)`` the
    tuple ``(a, b)`` has rank ``a * m + b``.
    """

    def __init__(self, factors, u, carrier):
        self.factors = tuple(factors)
        self.u = u
        self.carrier = carrier
        self.radices = tuple(f.n for f in factors)

    def rank(self, coords):
        r = 0
        for c, size in zip(coords, self.radices):
            r = r * size + c
        return r

    def unrank(self, r):
        coords = []
        for size in reversed(self.radices):
            r, c = divmod(r, size)
            coords.append(c)
        return tuple(reversed(coords))

    def tuples(self):
        return product(*(range(s) for s in self.radices))

    def __repr__(self):
        return f"ProductImage(NP{self.u}, radices={self.radices})"


def np_adjacent(factors, u, s, t):
    """The normal-product rule: coordinates adjacent in at most ``u`` positions and equal elsewhere."""
    moved = 0
    for img, a, b in zip(factors, s, t):
        if a == b:
            continue
        if not img.adjacent(a, b):
            return False
        moved += 1
    return moved <= u


@lru_cache(maxsize=256)
def _np_product(factors, u):
    radices = [f.n for f in factors]
    total = 1
    for r in radices:
        total *= r
    proto = ProductImage(factors, u, None)
    nbr = [0] * total
    for s in product(*(range(r) for r in radices)):
        rs = proto.rank(s)
        choices = [[b for b in range(f.n) if f.adjacent(a, b)] for f, a in zip(factors, s)]
        m = 0
        for t in product(*choices):
            if sum(1 for a, b in zip(s, t) if a != b) <= u:
                m |= 1 << proto.rank(t)
        nbr[rs] = m
    carrier = DigitalImage(nbr, name=f"NP{u}(" + ",".join(f.name or f"n{f.n}" for f in factors) + ")")
    return ProductImage(factors, u, carrier)


def np_product(factors, u):
    factors = tuple(factors)
    if not factors:
        raise BadLevel("a product needs at least one factor")
    if not 1 <= u <= len(factors):
        raise BadLevel(f"level u={u} outside 1..{len(factors)}")
    return _np_product(factors, u)


def continuity_violation(f):
    """First domain edge whose image is not an adjacency, or None."""
    edges = f.domain.edges
    i = kernels.backend(f.codomain.n).first_violation(f.values, edges, f.codomain.nbr)
    return None if i < 0 else edges[i]


def is_continuous(f):
    return continuity_violation(f) is None


def compose(g, f):
    """``g o f``."""
    if f.codomain != g.domain:
        raise DomainMismatch("codomain of f differs from domain of g")
    gv = g.values
    return DigitalMap(f.domain, g.codomain, [gv[y] for y in f.values])


def identity_map(img):
    return DigitalMap(img, img, range(img.n))


def constant_map(dom, cod, c):
    cod.check_vertex(c)
    return DigitalMap(dom, cod, [c] * dom.n)


def pair_map(f, g, cat):
    """``x -> (f(x), g(x))`` into ``NP_cat(Y, Y)``, with its continuity flag."""
    check_category(cat)
    if f.domain != g.domain or f.codomain != g.codomain:
        raise DomainMismatch("pair_map needs maps with a common domain and codomain")
    prod = np_product((f.codomain, f.codomain), cat)
    h = DigitalMap(f.domain, prod.carrier, [prod.rank((a, b)) for a, b in zip(f.values, g.values)])
    return h, is_continuous(h)


def cross_map(f1, f2, cat):
    """``(x1, x2) -> (f1(x1), f2(x2))`` between ``NP_cat`` products."""
    return product_map((f1, f2), cat)


def product_map(maps, cat):
    """Cross product of any number of maps, ``NP_cat`` on both sides."""
    check_category(cat)
    maps = tuple(maps)
    u = min(cat, len(maps))
    src = np_product(tuple(m.domain for m in maps), u)
    dst = np_product(tuple(m.codomain for m in maps), u)
    values = [dst.rank(tuple(m.values[c] for m, c in zip(maps, t))) for t in src.tuples()]
    return DigitalMap(src.carrier, dst.carrier, values)


def _check_table(img, mu):
    if len(mu) != img.n or any(len(row) != img.n for row in mu):
        raise DomainMismatch(f"multiplication table must be {img.n}x{img.n}")


def left_mult(img, mu, x):
    """``y -> mu(x, y)``."""
    _check_table(img, mu)
    img.check_vertex(x)
    return DigitalMap(img, img, mu[x])


def right_mult(img, mu, x):
    """``y -> mu(y, x)``."""
    _check_table(img, mu)
    img.check_vertex(x)
    return DigitalMap(img, img, [mu[y][x] for y in range(img.n)])


def multiplication_map(img, mu, cat):
    """``mu`` as a map out of the carrier of ``NP_cat(X, X)``."""
    check_category(cat)
    _check_table(img, mu)
    prod = np_product((img, img), cat)
    return DigitalMap(prod.carrier, img, [v for row in mu for v in row])


def table_from_map(img, m):
    """Inverse of ``multiplication_map``."""
    n = img.n
    return tuple(tuple(m.values[a * n + b] for b in range(n)) for a in range(n))


def _back_lists(dom, order):
    pos = {v: k for k, v in enumerate(order)}
    return [tuple(u for u in dom.adj[v] if pos[u] < pos[v]) for v in order]


def homomorphism_tables(dom, cod, cand=None, order=None):
    """Raw value tables of continuous maps ``dom -> cod``, restricted per vertex by ``cand`` masks."""
    full = (1 << cod.n) - 1
    if cand is None:
        cand = [full] * dom.n
    if order is None:
        order = list(range(dom.n))
    return kernels.backend(cod.n).homomorphisms(order, _back_lists(dom, order), cod.nbr, cand)


def enumerate_continuous_maps(X, Y, cap=MAP_ENUMERATION_CAP):
    """Every continuous map ``X -> Y`` once, lexicographic in vertex index."""
    if X.n > cap:
        raise CapExceeded(f"map enumeration capped at |X|={cap}, got {X.n}")
    for values in homomorphism_tables(X, Y):
        yield DigitalMap(X, Y, values)


def random_continuous_map(X, Y, rng):
    """A random continuous map, by backtracking with shuffled candidate values.

    Always succeeds: constant maps are continuous.
    """
    values = [None] * X.n
    order = list(range(X.n))

    def extend(k):
        if k == X.n:
            return True
        v = order[k]
        allowed = (1 << Y.n) - 1
        for u in X.adj[v]:
            if values[u] is not None:
                allowed &= Y.nbr[values[u]]
        choices = [y for y in range(Y.n) if (allowed >> y) & 1]
        rng.shuffle(choices)
        for y in choices:
            values[v] = y
            if extend(k + 1):
                return True
        values[v] = None
        return False

    extend(0)
    return DigitalMap(X, Y, values)
