"""Pure-Python hot kernels.

Reference implementation of every routine in ``_ckernels.pyx``; selected
automatically when the extension is not built.  Codomain adjacency is
passed as a list of closed-neighbourhood bitmasks, ``nbr[y]`` having bit
``z`` set iff ``y ~ z``.
"""

NAME = "python"


def homomorphisms(order, back, nbr, cand):
    """Yield every assignment ``v -> value`` compatible with adjacency.

    ``order`` lists the domain vertices in assignment order, ``back[k]`` the
    vertices earlier in ``order`` that are adjacent to ``order[k]``, and
    ``cand[v]`` a mask of values allowed at ``v``.  Values at each level are
    tried in increasing order, so the stream is lexicographic in ``order``.
    """
    n = len(order)
    if n == 0:
        yield ()
        return
    values = [0] * len(cand)
    avail = [0] * n
    k = 0
    m = cand[order[0]]
    avail[0] = m
    while k >= 0:
        m = avail[k]
        if not m:
            k -= 1
            continue
        low = m & -m
        avail[k] = m ^ low
        values[order[k]] = low.bit_length() - 1
        if k == n - 1:
            yield tuple(values)
            continue
        k += 1
        v = order[k]
        m = cand[v]
        for u in back[k]:
            m &= nbr[values[u]]
            if not m:
                break
        avail[k] = m


def first_violation(values, edges, nbr):
    """Index of the first edge ``(a, b)`` with ``values[a] !~ values[b]``, else -1."""
    for i, (a, b) in enumerate(edges):
        if not (nbr[values[a]] >> values[b]) & 1:
            return i
    return -1


def pointwise_adjacent(f, g, nbr):
    for a in range(len(f)):
        if not (nbr[f[a]] >> g[a]) & 1:
            return False
    return True


def np2_step(f, g, edges, nbr):
    """``a ~ b  =>  f(a) ~ g(b)`` over loops and both orientations of each edge."""
    for a in range(len(f)):
        if not (nbr[f[a]] >> g[a]) & 1:
            return False
    for a, b in edges:
        if not (nbr[f[a]] >> g[b]) & 1:
            return False
        if not (nbr[f[b]] >> g[a]) & 1:
            return False
    return True


def one_point_moves(f, dom_adj, nbr, frozen):
    """All continuous maps differing from ``f`` at exactly one vertex by an adjacent value.

    ``dom_adj[v]`` holds the non-loop neighbours of ``v``; vertex ``frozen``
    (or -1) never moves.
    """
    out = []
    for v in range(len(f)):
        if v == frozen:
            continue
        fv = f[v]
        m = nbr[fv]
        for u in dom_adj[v]:
            m &= nbr[f[u]]
        m &= ~(1 << fv)
        while m:
            low = m & -m
            m ^= low
            g = list(f)
            g[v] = low.bit_length() - 1
            out.append(tuple(g))
    return out


def canonical_checker(perm_bits):
    """Return ``check(mask)``: True iff no relabelling maps ``mask`` to a smaller integer.

    ``perm_bits[p][i]`` is the image of bit ``i`` under permutation ``p``.
    """
    tables = [tuple(t) for t in perm_bits]
    nbits = len(tables[0]) if tables else 0

    def check(mask):
        bits = [i for i in range(nbits) if (mask >> i) & 1]
        for table in tables:
            image = 0
            for i in bits:
                image |= 1 << table[i]
            if image < mask:
                return False
        return True

    return check
