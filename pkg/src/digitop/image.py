"""Digital images as finite reflexive graphs.

Vertices are the integers ``0..n-1``.  Adjacency is stored as closed
neighbourhood bitmasks: bit ``b`` of ``nbr[a]`` is set iff ``a ~ b``, and bit
``a`` of ``nbr[a]`` is always set.
"""

from dataclasses import dataclass
from itertools import combinations, permutations

from . import kernels
from .errors import CapExceeded, EdgeOutOfRange, VertexOutOfRange, ZeroVertices

ENUMERATION_CAP = 7


class DigitalImage:
    """Immutable finite reflexive symmetric graph ``(X, kappa)``."""

    __slots__ = ("n", "nbr", "edges", "adj", "name")

    def __init__(self, nbr, name=None):
        n = len(nbr)
        if n == 0:
            raise ZeroVertices("a digital image needs at least one vertex")
        masks = [m | (1 << a) for a, m in enumerate(nbr)]
        for a in range(n):
            for b in range(n):
                if (masks[a] >> b) & 1:
                    masks[b] |= 1 << a
        self.n = n
        self.nbr = tuple(masks)
        self.edges = tuple((a, b) for a in range(n) for b in range(a + 1, n) if (masks[a] >> b) & 1)
        self.adj = tuple(tuple(b for b in range(n) if b != a and (masks[a] >> b) & 1) for a in range(n))
        self.name = name

    def adjacent(self, a, b):
        return bool((self.nbr[a] >> b) & 1)

    def degree(self, v):
        """Non-loop degree."""
        return len(self.adj[v])

    def vertices(self):
        return range(self.n)

    def check_vertex(self, v):
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in image of {self.n} vertices")

    def induced(self, vertices):
        """Induced subimage on ``vertices``; returns ``(image, labels)`` with ``labels[k]`` the old index."""
        labels = tuple(sorted(set(vertices)))
        pos = {v: k for k, v in enumerate(labels)}
        edges = [(pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos]
        return make_image(len(labels), edges), labels

    def __eq__(self, other):
        return isinstance(other, DigitalImage) and self.nbr == other.nbr

    def __hash__(self):
        return hash(self.nbr)

    def __repr__(self):
        label = f"{self.name}, " if self.name else ""
        return f"DigitalImage({label}n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple

    def block_of(self, v):
        for block in self.blocks:
            if v in block:
                return block
        raise VertexOutOfRange(f"vertex {v} not covered")

    def sizes(self):
        return sorted(len(b) for b in self.blocks)


def make_image(n, edges=(), name=None):
    """Image on ``n`` vertices with the given undirected edges; loops and symmetry are added."""
    if n < 1:
        raise ZeroVertices("a digital image needs at least one vertex")
    nbr = [0] * n
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeOutOfRange(f"edge ({a}, {b}) out of range for {n} vertices")
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a
    return DigitalImage(nbr, name=name)


def adjacent(img, a, b):
    img.check_vertex(a)
    img.check_vertex(b)
    return img.adjacent(a, b)


def components(img):
    """Path components, each block sorted, blocks ordered by least vertex."""
    seen = 0
    blocks = []
    for start in range(img.n):
        if (seen >> start) & 1:
            continue
        reach = 1 << start
        frontier = reach
        while frontier:
            grown = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                grown |= img.nbr[low.bit_length() - 1]
            frontier = grown & ~reach
            reach |= grown
        seen |= reach
        blocks.append(tuple(v for v in range(img.n) if (reach >> v) & 1))
    return VertexPartition(tuple(blocks))


def is_connected(img):
    return len(components(img).blocks) == 1


def component_of(img, v):
    return components(img).block_of(v)


def graph_isomorphism(a, b):
    """An adjacency-preserving bijection ``a -> b`` as a tuple, or None."""
    if a.n != b.n or len(a.edges) != len(b.edges):
        return None
    n = a.n

    def signature(img, v):
        return img.degree(v), tuple(sorted(img.degree(u) for u in img.adj[v]))

    sig_a = [signature(a, v) for v in range(n)]
    sig_b = [signature(b, v) for v in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None
    # most constrained first: high degree, then BFS-ish by index
    order = sorted(range(n), key=lambda v: (-a.degree(v), v))
    image = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or sig_b[w] != sig_a[v]:
                continue
            ok = True
            for j in range(k):
                u = order[j]
                if a.adjacent(u, v) != b.adjacent(image[u], w):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            if extend(k + 1):
                return True
            used[w] = False
            image[v] = -1
        return False

    return tuple(image) if extend(0) else None


def _pair_bits(n):
    return {pair: k for k, pair in enumerate(combinations(range(n), 2))}


def enumerate_images(n, cap=ENUMERATION_CAP):
    """One image per isomorphism class of reflexive graphs on ``n`` vertices.

    An upper-triangle edge mask is kept iff it is the numerically least mask
    in its orbit under vertex relabelling.
    """
    if n < 1:
        raise ZeroVertices("n must be at least 1")
    if n > cap:
        raise CapExceeded(f"enumerate_images capped at n={cap}, asked for {n}")
    bits = _pair_bits(n)
    pairs = list(bits)
    perm_bits = []
    for perm in permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        perm_bits.append([bits[tuple(sorted((perm[i], perm[j])))] for i, j in pairs])
    check = kernels.backend(len(pairs)).canonical_checker(perm_bits) if perm_bits else (lambda m: True)
    for mask in range(1 << len(pairs)):
        if check(mask):
            yield make_image(n, [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1])


def cycle(n):
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return make_image(n, [(k, (k + 1) % n) for k in range(n)], name=f"C{n}")


def complete(n):
    return make_image(n, list(combinations(range(n), 2)), name=f"K{n}")


def path(n):
    return make_image(n, [(k, k + 1) for k in range(n - 1)], name=f"P{n}")


def discrete(n):
    return make_image(n, [], name=f"D{n}")


def disjoint_union(*images):
    """Vertices of later images are shifted past those of earlier ones."""
    edges = []
    offset = 0
    for img in images:
        edges.extend((a + offset, b + offset) for a, b in img.edges)
        offset += img.n
    return make_image(offset, edges)
