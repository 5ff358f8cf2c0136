"""Digital H-spaces: verification, equivalence, transport, reduction, classification, search."""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (
    CapExceeded,
    DiscontinuousMultiplication,
    DomainMismatch,
    MuENotInvertible,
    MultiplicationNotInvertible,
    NotCategory2,
    NotConnected,
    NotHomotopyEquivalence,
    NotIrreducible,
    NotPointed,
    ReductionFailed,
    StructureViolation,
    UnknownFixture,
)
from .homotopy import (
    DEFAULT_BUDGET,
    HomotopyCertificate,
    HomotopyVerdict,
    Status,
    combine,
    homotopic,
    homotopy_class,
    is_irreducible,
    pointed_homotopic,
    record,
    search_class,
)
from .image import component_of, cycle, disjoint_union, is_connected, make_image
from .maps import (
    DigitalMap,
    check_category,
    compose,
    constant_map,
    continuity_violation,
    cross_map,
    enumerate_continuous_maps,
    homomorphism_tables,
    identity_map,
    is_continuous,
    left_mult,
    multiplication_map,
    np_adjacent,
    np_product,
    pair_map,
    right_mult,
)

SEARCH_CAP = {1: 5, 2: 4}


def _freeze_table(mu):
    return tuple(tuple(int(v) for v in row) for row in mu)


@dataclass(frozen=True)
class HSpaceReport:
    is_hspace: HomotopyVerdict
    unital: bool
    pointed: HomotopyVerdict
    left_unit_exact: bool
    right_unit_exact: bool
    left_unit: HomotopyVerdict = None
    right_unit: HomotopyVerdict = None


@dataclass(frozen=True)
class HSpaceStructure:
    """``(X, e, mu)`` in category ``NP_i``; ``mu[a][b]`` is the product of ``a`` and ``b``."""

    image: object
    basepoint: int
    mu: tuple
    category: int
    _report: list = field(default_factory=list, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "mu", _freeze_table(self.mu))
        check_category(self.category)
        self.image.check_vertex(self.basepoint)
        n = self.image.n
        if len(self.mu) != n or any(len(row) != n for row in self.mu):
            raise DomainMismatch(f"multiplication table must be {n}x{n}")
        if any(not 0 <= v < n for row in self.mu for v in row):
            raise DomainMismatch("multiplication value out of range")

    @property
    def n(self):
        return self.image.n

    def mult_map(self):
        return multiplication_map(self.image, self.mu, self.category)

    def left(self, x):
        return left_mult(self.image, self.mu, x)

    def right(self, x):
        return right_mult(self.image, self.mu, x)

    def verify(self, budget=DEFAULT_BUDGET, pointed=True):
        if not self._report:
            self._report.append(verify_hspace(self.image, self.basepoint, self.mu, self.category, budget, pointed))
        return self._report[0]


@dataclass(frozen=True)
class MagmaStructure:
    image: object
    tau: tuple
    category: int

    def __post_init__(self):
        object.__setattr__(self, "tau", _freeze_table(self.tau))
        check_category(self.category)

    def is_continuous(self):
        return is_continuous(multiplication_map(self.image, self.tau, self.category))


@dataclass(frozen=True)
class Np2Decomposition:
    """``X = {e} + Z`` with ``mu`` equal to ``tau`` on ``A``, projections at ``e``, ``e`` elsewhere.

    ``Z`` keeps the vertex labels of ``X``; ``tau`` maps pairs of ``Z`` to ``Z``.
    """

    e: int
    Z: tuple
    A: frozenset
    tau: dict
    z_default: int

    def reconstruct(self, n):
        mu = [[None] * n for _ in range(n)]
        e = self.e
        for a in range(n):
            for b in range(n):
                if (a, b) in self.A:
                    mu[a][b] = self.tau[(a, b)]
                elif b == e:
                    mu[a][b] = a
                elif a == e:
                    mu[a][b] = b
                else:
                    mu[a][b] = e
        return _freeze_table(mu)

    def magma(self, image):
        """The magma ``(Z, tau)`` relabelled onto the induced subimage of ``image``."""
        sub, labels = image.induced(self.Z)
        pos = {v: k for k, v in enumerate(labels)}
        tau = [[pos[self.tau[(a, b)]] for b in labels] for a in labels]
        return MagmaStructure(sub, tau, 2)


# --------------------------------------------------------------------------
# verification


def _discontinuity(img, mu, cat):
    m = multiplication_map(img, mu, cat)
    bad = continuity_violation(m)
    if bad is None:
        return None
    prod = np_product((img, img), cat)
    return prod.unrank(bad[0]), prod.unrank(bad[1])


def _require_multiplication(img, mu, cat):
    bad = _discontinuity(img, mu, cat)
    if bad is not None:
        (a, b), (c, d) = bad
        raise DiscontinuousMultiplication(
            f"({a},{b}) ~ ({c},{d}) in NP{cat} but mu gives {mu[a][b]} !~ {mu[c][d]}", witness=bad
        )


def verify_hspace(X, e, mu, cat, budget=DEFAULT_BUDGET, pointed=True):
    """Check continuity of ``mu`` and decide both unit laws up to homotopy.

    ``left_unit`` decides ``mu(e, -) ~= id`` and ``right_unit`` decides
    ``mu(-, e) ~= id``.  With ``pointed`` the same homotopies are also decided
    with ``e`` held fixed; otherwise ``report.pointed`` is None.
    """
    check_category(cat)
    X.check_vertex(e)
    mu = _freeze_table(mu)
    _require_multiplication(X, mu, cat)
    ident = identity_map(X)
    mu_e = left_mult(X, mu, e)
    nu_e = right_mult(X, mu, e)
    left = homotopic(mu_e, ident, cat, budget)
    right = homotopic(nu_e, ident, cat, budget)
    is_h = combine([left, right])
    left_exact = mu_e == ident
    right_exact = nu_e == ident
    pointed_v = None
    if pointed:
        if is_h.no:
            pointed_v = HomotopyVerdict(Status.NO, budget=budget, note="not an H-space")
        elif mu[e][e] != e:
            pointed_v = HomotopyVerdict(Status.NO, budget=budget, note="mu(e,e) != e, unit laws are not pointed maps")
        else:
            pointed_v = combine(
                [pointed_homotopic(mu_e, ident, cat, e, e, budget), pointed_homotopic(nu_e, ident, cat, e, e, budget)]
            )
    return HSpaceReport(is_h, left_exact and right_exact, pointed_v, left_exact, right_exact, left, right)


def _triple_composites(H):
    X, mu, cat = H.image, H.mu, H.category
    prod = np_product((X, X, X), cat)
    left_first = []
    right_first = []
    for a, b, c in prod.tuples():
        left_first.append(mu[mu[a][b]][c])
        right_first.append(mu[a][mu[b][c]])
    # mu o (mu x id) and mu o (id x mu)
    return prod, DigitalMap(prod.carrier, X, left_first), DigitalMap(prod.carrier, X, right_first)


def is_associative(H):
    _, p, q = _triple_composites(H)
    return p == q


def is_homotopy_associative(H, budget=DEFAULT_BUDGET, pointed=False):
    """Decide ``mu o (id x mu) ~= mu o (mu x id)`` as maps out of ``NP_i(X, X, X)``.

    ``pointed`` asks for a homotopy fixing ``(e, e, e) -> e``.
    """
    _require_multiplication(H.image, H.mu, H.category)
    prod, p, q = _triple_composites(H)
    e = H.basepoint
    if not pointed:
        return homotopic(q, p, H.category, budget)
    base = prod.rank((e, e, e))
    if p.values[base] != e or q.values[base] != e:
        return record(HomotopyVerdict(Status.NO, budget=budget, note="composites do not fix (e,e,e) -> e"))
    return pointed_homotopic(q, p, H.category, base, e, budget)


def associator_probe(H, p, q):
    """``(x -> (x p(x)) q(x),  x -> x (p(x) q(x)))`` for self-maps ``p``, ``q``."""
    X, mu = H.image, H.mu
    for m in (p, q):
        if m.domain != X or m.codomain != X:
            raise DomainMismatch("probe maps must be self-maps of the H-space image")
    first = [mu[mu[x][p(x)]][q(x)] for x in range(X.n)]
    second = [mu[x][mu[p(x)][q(x)]] for x in range(X.n)]
    return DigitalMap(X, X, first), DigitalMap(X, X, second)


# --------------------------------------------------------------------------
# inverses


def _solve_unit(H, side):
    """Table ``x -> y`` with ``mu(x, y) = e`` (side 'right') or ``mu(y, x) = e`` (side 'left')."""
    X, mu, e = H.image, H.mu, H.basepoint
    out = []
    for x in range(X.n):
        row = mu[x] if side == "right" else [mu[y][x] for y in range(X.n)]
        if len(set(row)) != X.n:
            which = "mu_x" if side == "right" else "nu_x"
            raise MultiplicationNotInvertible(f"{which} for x={x} is not a bijection")
        out.append(row.index(e))
    return out


def find_exact_inverses(H, budget=DEFAULT_BUDGET, require_irreducible=True):
    """Left and right inverse maps ``(alpha, beta)``: ``mu(alpha(x), x) = e = mu(x, beta(x))``.

    Needs a connected image; with ``require_irreducible`` the image must
    also be irreducible.  Groups have bijective slices without that, so
    ``require_irreducible=False`` lets them through.
    """
    X = H.image
    if not is_connected(X):
        raise NotConnected("exact inverses are only constructed on connected H-spaces")
    if require_irreducible:
        v = is_irreducible(X, H.category, budget)
        if not v.yes:
            raise NotIrreducible(f"image irreducibility verdict is {v.status.value}")
    alpha = DigitalMap(X, X, _solve_unit(H, "left"))
    beta = DigitalMap(X, X, _solve_unit(H, "right"))
    for name, m in (("alpha", alpha), ("beta", beta)):
        if not is_continuous(m):
            raise StructureViolation(f"{name} is not continuous; slices are bijections but not isomorphisms")
    return alpha, beta


def _homotopy_inverse(H, side, budget):
    X, mu, e, cat = H.image, H.mu, H.basepoint, H.category
    ident = identity_map(X)
    target = constant_map(X, X, e)
    cls = homotopy_class(target, cat, budget)
    candidates = []
    try:
        candidates.append(tuple(_solve_unit(H, side)))
    except MultiplicationNotInvertible:
        pass
    seen = set()
    pair_rejected = 0
    exact_rejected = False
    undecided = False

    def stream():
        yield from candidates
        for m in enumerate_continuous_maps(X, X):
            yield m.values

    for values in stream():
        if values in seen:
            continue
        seen.add(values)
        alpha = DigitalMap(X, X, values)
        if not is_continuous(alpha):
            continue
        pair, ok = pair_map(alpha, ident, cat) if side == "left" else pair_map(ident, alpha, cat)
        if not ok:
            pair_rejected += 1
            if candidates and values == candidates[0]:
                exact_rejected = True
            continue
        if side == "left":
            comp = DigitalMap(X, X, [mu[values[x]][x] for x in range(X.n)])
        else:
            comp = DigitalMap(X, X, [mu[x][values[x]] for x in range(X.n)])
        if cls.status is Status.YES and comp not in cls.members:
            continue
        v = homotopic(comp, target, cat, budget)
        if v.yes:
            return HomotopyVerdict(Status.YES, v.certificates, v.explored, budget, witness=alpha,
                                   note="exact inverse" if comp == target else "homotopy inverse")
        if v.inconclusive:
            undecided = True
    note = f"{pair_rejected} candidates failed NP{cat} pair continuity"
    if exact_rejected:
        note += "; the exact inverse map is among them"
    status = Status.INCONCLUSIVE if undecided else Status.NO
    return HomotopyVerdict(status, (), len(seen), budget, note=note)


def has_left_homotopy_inverse(H, budget=DEFAULT_BUDGET):
    """Search for ``alpha`` with ``(alpha, id)`` continuous and ``mu o (alpha, id) ~= c_e``.

    The exact inverse (when the slices are bijections) is tried first.  In
    NP_1 ``(alpha, id)`` is usually discontinuous, so an exact inverse need
    not qualify; the note reports how many candidates were rejected that way.
    """
    return record(_homotopy_inverse(H, "left", budget))


def has_right_homotopy_inverse(H, budget=DEFAULT_BUDGET):
    return record(_homotopy_inverse(H, "right", budget))


# --------------------------------------------------------------------------
# H-equivalence and transport


def _same_category(H1, H2):
    if H1.category != H2.category:
        raise DomainMismatch("H-spaces live in different categories")


def check_h_equivalence(H1, H2, f, g, budget=DEFAULT_BUDGET, pointed=False):
    """Decide the four H-equivalence conditions for given pointed maps ``f``, ``g``.

    ``f o g ~= id``, ``g o f ~= id``, ``f o mu_X ~= mu_Y o (f x f)`` and
    ``g o mu_Y ~= mu_X o (g x g)``; homotopies are unpointed unless
    ``pointed``.
    """
    _same_category(H1, H2)
    X, Y, cat = H1.image, H2.image, H1.category
    ex, ey = H1.basepoint, H2.basepoint
    if f.domain != X or f.codomain != Y or g.domain != Y or g.codomain != X:
        raise DomainMismatch("f must map X -> Y and g must map Y -> X")
    if f(ex) != ey or g(ey) != ex:
        raise NotPointed("H-equivalence maps must preserve basepoints")
    mx, my = H1.mult_map(), H2.mult_map()
    pairs = [
        (compose(f, g), identity_map(Y), ey, ey),
        (compose(g, f), identity_map(X), ex, ex),
        (compose(f, mx), compose(my, cross_map(f, f, cat)), ex * X.n + ex, ey),
        (compose(g, my), compose(mx, cross_map(g, g, cat)), ey * Y.n + ey, ex),
    ]
    verdicts = []
    for p, q, b_dom, b_cod in pairs:
        if pointed:
            verdicts.append(pointed_homotopic(p, q, cat, b_dom, b_cod, budget))
        else:
            verdicts.append(homotopic(p, q, cat, budget))
        if verdicts[-1].no:
            break
    v = combine(verdicts)
    return record(HomotopyVerdict(v.status, v.certificates, v.explored, budget, witness=(f, g)))


def _pointed_maps(X, Y, x0, y0):
    cand = [(1 << Y.n) - 1] * X.n
    cand[x0] = 1 << y0
    return homomorphism_tables(X, Y, cand)


def h_equivalent(H1, H2, budget=DEFAULT_BUDGET, pointed=False):
    """Search pointed maps ``f``, ``g`` realising an H-equivalence; YES has ``witness=(f, g)``."""
    _same_category(H1, H2)
    X, Y, cat = H1.image, H2.image, H1.category
    ex, ey = H1.basepoint, H2.basepoint
    if H1 == H2:
        return check_h_equivalence(H1, H2, identity_map(X), identity_map(Y), budget, pointed)
    bx = (ex, ex) if pointed else None
    by = (ey, ey) if pointed else None
    cx = homotopy_class(identity_map(X), cat, budget, base=bx)
    cy = homotopy_class(identity_map(Y), cat, budget, base=by)
    if cx.status is not Status.YES or cy.status is not Status.YES:
        return record(HomotopyVerdict(Status.INCONCLUSIVE, (), budget, budget, note="identity class too large"))
    ids_x = {m.values for m in cx.members}
    ids_y = {m.values for m in cy.members}
    gs = list(_pointed_maps(Y, X, ey, ex))
    undecided = False
    explored = cx.explored + cy.explored
    for fv in _pointed_maps(X, Y, ex, ey):
        for gv in gs:
            explored += 1
            if tuple(gv[y] for y in fv) not in ids_x or tuple(fv[x] for x in gv) not in ids_y:
                continue
            v = check_h_equivalence(H1, H2, DigitalMap(X, Y, fv), DigitalMap(Y, X, gv), budget, pointed)
            if v.yes:
                return v
            if v.inconclusive:
                undecided = True
    status = Status.INCONCLUSIVE if undecided else Status.NO
    return record(HomotopyVerdict(status, (), explored, budget))


def transport_structure(HX, f, g, budget=DEFAULT_BUDGET):
    """Structure ``mu_Y = f o mu_X o (g x g)`` on ``Y = codomain(f)`` with basepoint ``f(e_X)``."""
    X, cat, ex = HX.image, HX.category, HX.basepoint
    Y = f.codomain
    if f.domain != X or g.domain != Y or g.codomain != X:
        raise DomainMismatch("need f: X -> Y and g: Y -> X")
    ey = f(ex)
    if g(ey) != ex:
        raise NotPointed("g must send f(e_X) back to e_X")
    for m in (f, g):
        if not is_continuous(m):
            raise NotHomotopyEquivalence(f"{m!r} is not continuous")
    for p, q in ((compose(g, f), identity_map(X)), (compose(f, g), identity_map(Y))):
        v = homotopic(p, q, cat, budget)
        if not v.yes:
            raise NotHomotopyEquivalence(f"round trip verdict {v.status.value}")
    mu = HX.mu
    muy = [[f(mu[g(a)][g(b)]) for b in range(Y.n)] for a in range(Y.n)]
    HY = HSpaceStructure(Y, ey, muy, cat)
    report = HY.verify(budget, pointed=False)
    if report.is_hspace.no:
        raise StructureViolation("transported multiplication is not an H-space")
    if check_h_equivalence(HX, HY, f, g, budget).no:
        raise StructureViolation("transported structure is not H-equivalent to the source")
    return HY


def _retraction(h, n):
    """A power of ``h`` restricting to the identity on its image; returns ``(r, image)``."""
    current = list(range(n))
    k = 0
    img = set(range(n))
    while True:
        nxt = {h[v] for v in img}
        k += 1
        if nxt == img:
            break
        img = nxt
    # h permutes img; take the power that is the identity there, and at least k
    order = 1
    probe = {v: h[v] for v in img}
    while any(probe[v] != v for v in img):
        probe = {v: h[probe[v]] for v in img}
        order += 1
    power = order * max(1, -(-k // order))
    for _ in range(power):
        current = [h[v] for v in current]
    return tuple(current), frozenset(img)


def reduce_to_irreducible(H, budget=DEFAULT_BUDGET):
    """H-equivalent structure on an irreducible image; returns ``(HY, f, g)``.

    Each round finds a non-surjective map homotopic to the identity whose
    eventual image contains the basepoint, takes a power of it that retracts
    onto that image, and transports the structure along retraction and
    inclusion.
    """
    X, e, cat = H.image, H.basepoint, H.category
    F = identity_map(X)
    G = identity_map(X)
    current = H
    while True:
        X = current.image
        e = current.basepoint
        n = X.n

        def keeps_base(t):
            if len(set(t)) == n:
                return False
            return e in _retraction(t, n)[1]

        hit = search_class(identity_map(X), cat, keeps_base, budget)
        if hit.inconclusive:
            raise CapExceeded("identity class exceeds the budget during reduction")
        if hit.no:
            v = is_irreducible(X, cat, budget)
            if v.yes:
                return current, F, G
            raise ReductionFailed("every reducing retraction of this image drops the basepoint")
        r, keep = _retraction(hit.witness.values, n)
        Y, labels = X.induced(keep)
        pos = {v: k for k, v in enumerate(labels)}
        f = DigitalMap(X, Y, [pos[r[x]] for x in range(n)])
        g = DigitalMap(Y, X, labels)
        current = transport_structure(current, f, g, budget)
        F = compose(f, F)
        G = compose(G, g)


def left_unital_reduction(H, budget=DEFAULT_BUDGET):
    """Left-unital irreducible ``(Y, p, tau)`` H-equivalent to a connected ``H``.

    After reducing to an irreducible image, ``p = mu_e(e)`` and
    ``tau = mu o (mu_e^-1 x mu_e^-1)``.  If ``mu(e, x) = mu(x, e)`` throughout,
    the result is unital.
    """
    if not is_connected(H.image):
        raise NotConnected("left-unital reduction needs a connected H-space")
    R, _, _ = reduce_to_irreducible(H, budget)
    Y, e, mu = R.image, R.basepoint, R.mu
    n = Y.n
    row = mu[e]
    if len(set(row)) != n:
        raise MuENotInvertible("mu_e is not a bijection on the irreducible image")
    inv = [0] * n
    for a, b in enumerate(row):
        inv[b] = a
    p = row[e]
    tau = [[mu[inv[a]][inv[b]] for b in range(n)] for a in range(n)]
    if any(tau[p][a] != a for a in range(n)):
        raise StructureViolation("reduced structure is not left-unital")
    if all(mu[e][x] == mu[x][e] for x in range(n)) and any(tau[a][p] != a for a in range(n)):
        raise StructureViolation("commuting unit slices but reduced structure is not unital")
    out = HSpaceStructure(Y, p, tau, R.category)
    if out.verify(budget, pointed=False).is_hspace.no:
        raise StructureViolation("left-unital reduction is not an H-space")
    return out


# --------------------------------------------------------------------------
# constructions and the NP_2 classification


def magma_point_extension(M):
    """``X = Z + {e}`` with ``e`` a new isolated unit; ``mu`` is ``tau`` on ``Z x Z``."""
    Z, tau, cat = M.image, M.tau, M.category
    bad = _discontinuity(Z, tau, cat)
    if bad is not None:
        raise DiscontinuousMultiplication("magma operation is not continuous", witness=bad)
    X = disjoint_union(Z, make_image(1))
    e = Z.n
    mu = [[None] * X.n for _ in range(X.n)]
    for a in range(X.n):
        for b in range(X.n):
            if a < e and b < e:
                mu[a][b] = tau[a][b]
            elif b == e:
                mu[a][b] = a
            else:
                mu[a][b] = b
    H = HSpaceStructure(X, e, mu, cat)
    report = H.verify(pointed=False)
    if not (report.is_hspace.yes and report.unital):
        raise StructureViolation("point extension failed to be a unital H-space")
    return H


@lru_cache(maxsize=1024)
def _irreducible(img, cat, budget):
    return is_irreducible(img, cat, budget)


def decompose_np2(H, budget=DEFAULT_BUDGET, require_irreducible=True):
    """Split an irreducible NP_2 H-space as ``{e} + Z`` with magma ``tau`` and product set ``A``.

    With ``require_irreducible=False`` the image check is skipped and only
    the structural assertions decide: isolated exact unit, ``A`` a union of
    product components, and exact reconstruction.  Point extensions of
    magmas on reducible images pass that way.
    """
    if H.category != 2:
        raise NotCategory2("classification applies to NP_2 H-spaces")
    X, e, mu, n = H.image, H.basepoint, H.mu, H.image.n
    if require_irreducible:
        v = _irreducible(X, 2, budget)
        if not v.yes:
            raise NotIrreducible(f"image irreducibility verdict is {v.status.value}")
    if not H.verify(budget, pointed=False).is_hspace.yes:
        raise StructureViolation("input is not a verified H-space")
    if n == 1:
        return Np2Decomposition(e, (), frozenset(), {}, None)
    if component_of(X, e) != (e,):
        raise StructureViolation("basepoint is not an isolated vertex")
    if any(mu[e][x] != x or mu[x][e] != x for x in range(n)):
        raise StructureViolation("basepoint is not an exact unit")
    Z = tuple(v for v in range(n) if v != e)
    A = frozenset((a, b) for a in Z for b in Z if mu[a][b] != e)
    for a, b in A:
        for c in Z:
            for d in Z:
                if (c, d) not in A and np_adjacent((X, X), 2, (a, b), (c, d)):
                    raise StructureViolation(f"A is not a union of components: ({a},{b}) ~ ({c},{d})")
    z = Z[0]
    tau = {(a, b): (mu[a][b] if (a, b) in A else z) for a in Z for b in Z}
    dec = Np2Decomposition(e, Z, A, tau, z)
    if not dec.magma(X).is_continuous():
        raise StructureViolation("extracted magma is not NP_2-continuous")
    if dec.reconstruct(n) != mu:
        raise StructureViolation("piecewise formula does not reconstruct mu")
    return dec


def search_hspace_multiplications(X, e, cat, budget=DEFAULT_BUDGET, max_vertices=None, fixed=None):
    """Stream every H-space multiplication on ``(X, e)``, in a fixed order.

    The unit slices ``mu(e, -)`` and ``mu(-, e)`` are drawn from the identity's
    homotopy class, so everything produced passes ``verify_hspace``; the
    remaining cells are filled by continuity-pruned backtracking.  ``fixed``
    maps cells ``(a, b)`` to forced values.
    """
    check_category(cat)
    X.check_vertex(e)
    cap = SEARCH_CAP[cat] if max_vertices is None else max_vertices
    n = X.n
    if n > cap:
        raise CapExceeded(f"multiplication search capped at {cap} vertices, got {n}")
    fixed = dict(fixed or {})
    ident = identity_map(X)
    cls = homotopy_class(ident, cat, budget)
    if cls.status is Status.YES:
        slices = sorted(m.values for m in cls.members)
    else:
        slices = [m.values for m in enumerate_continuous_maps(X, X) if homotopic(m, ident, cat, budget).yes]

    def fits(values, cell):
        return all(values[k] == c for k, c in ((k, fixed.get(cell(k))) for k in range(n)) if c is not None)

    rows = [s for s in slices if fits(s, lambda k: (e, k))]
    cols = [s for s in slices if fits(s, lambda k: (k, e))]
    prod = np_product((X, X), cat)
    dom = prod.carrier
    order = [e * n + b for b in range(n)] + [a * n + e for a in range(n) if a != e]
    order += [a * n + b for a in range(n) for b in range(n) if a != e and b != e]
    full = (1 << n) - 1
    base_cand = [full] * (n * n)
    for (a, b), c in fixed.items():
        base_cand[a * n + b] = 1 << c
    for row in rows:
        for col in cols:
            if row[e] != col[e]:
                continue
            cand = list(base_cand)
            for b in range(n):
                cand[e * n + b] = 1 << row[b]
                cand[b * n + e] = 1 << col[b]
            for values in homomorphism_tables(dom, X, cand, order):
                yield HSpaceStructure(X, e, [values[a * n:(a + 1) * n] for a in range(n)], cat)


# --------------------------------------------------------------------------
# fixtures

FIVE_TWIST_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 5), (5, 0)]
BAR_X4 = 5


def _five_twist_image():
    return make_image(6, FIVE_TWIST_EDGES, name="W")


def _five_twist_table(unit_at_x0):
    # x_i -> i for i < 5, bar x_4 -> 5; subscripts mod 5
    mu = [[None] * 6 for _ in range(6)]
    for i in range(5):
        for j in range(5):
            mu[i][j] = (i + j) % 5
        mu[i][BAR_X4] = (i + 4) % 5
        mu[BAR_X4][i] = (i + 4) % 5
    mu[BAR_X4][BAR_X4] = 3
    if unit_at_x0:
        mu[0][BAR_X4] = BAR_X4
        mu[BAR_X4][0] = BAR_X4
    return mu


def _cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def _collapse(W, target_of_5):
    return DigitalMap(W, W, [0, 1, 2, 3, 4, target_of_5])


FIXTURES = (
    "five_twist_mu",
    "five_twist_tau",
    "five_twist_image",
    "rho",
    "d1",
    "d4",
    "z5_cycle_group",
    "disjoint_c5_point",
    "two_point_constant",
    "z4_k4_group",
)


def fixture(name):
    """Named structures from the worked examples; ``bar x_4`` is vertex 5 of W."""
    if name == "five_twist_image":
        return _five_twist_image()
    if name == "five_twist_mu":
        return HSpaceStructure(_five_twist_image(), 0, _five_twist_table(False), 1)
    if name == "five_twist_tau":
        return HSpaceStructure(_five_twist_image(), 0, _five_twist_table(True), 1)
    if name == "rho":
        return _collapse(_five_twist_image(), 4)
    if name in ("d1", "d4"):
        W = _five_twist_image()
        k = int(name[1])
        return DigitalMap(W, W, [0] + [k] * 5)
    if name == "z5_cycle_group":
        return HSpaceStructure(cycle(5), 0, _cyclic_table(5), 1)
    if name == "disjoint_c5_point":
        return magma_point_extension(MagmaStructure(cycle(5), _cyclic_table(5), 1))
    if name == "two_point_constant":
        return HSpaceStructure(make_image(2, [(0, 1)], name="K2"), 0, [[0, 0], [0, 0]], 2)
    if name == "z4_k4_group":
        K4 = make_image(4, [(a, b) for a in range(4) for b in range(a + 1, 4)], name="K4")
        return HSpaceStructure(K4, 0, _cyclic_table(4), 1)
    raise UnknownFixture(name)


__all__ = [
    "FIXTURES",
    "HSpaceReport",
    "HSpaceStructure",
    "HomotopyCertificate",
    "MagmaStructure",
    "Np2Decomposition",
    "associator_probe",
    "check_h_equivalence",
    "decompose_np2",
    "find_exact_inverses",
    "fixture",
    "h_equivalent",
    "has_left_homotopy_inverse",
    "has_right_homotopy_inverse",
    "is_associative",
    "is_homotopy_associative",
    "left_unital_reduction",
    "magma_point_extension",
    "reduce_to_irreducible",
    "search_hspace_multiplications",
    "transport_structure",
    "verify_hspace",
]
