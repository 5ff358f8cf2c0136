"""Exact decision procedures for NP_1 / NP_2 homotopy of continuous maps.

Two maps are homotopic iff they are joined by a chain of single-step
homotopies: restricting a homotopy ``H : X x [0, m] -> Y`` to consecutive
times ``t, t+1`` gives a single step, and single steps concatenate.  So every
decision here is a search of the single-step graph on continuous maps.

Single steps are characterised pointwise:

* NP_1: ``f(a) ~ g(a)`` for every ``a``;
* NP_2: ``a ~ b`` implies ``f(a) ~ g(b)``.

For NP_2 the search only moves one point at a time.  This loses nothing: if
``f`` and ``g`` are one NP_2 step apart, switching the points of ``f`` to their
``g`` values one at a time keeps every intermediate map continuous (a mixed
edge ``a ~ b`` lands on ``g(a) ~ f(b)``) and each switch is itself a step.

A NO verdict always means a whole single-step component was exhausted;
running out of budget gives INCONCLUSIVE instead.
"""

import enum
from dataclasses import dataclass, field

from . import kernels
from .errors import DomainMismatch, NotContinuous, NotPointed
from .image import is_connected, path
from .maps import (
    DigitalMap,
    check_category,
    continuity_violation,
    homomorphism_tables,
    identity_map,
    np_adjacent,
)

DEFAULT_BUDGET = 10**6

# Callables invoked with every verdict returned by the public deciders.
audit_hooks = []


class Status(enum.Enum):
    YES = "YES"
    NO = "NO"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class HomotopyCertificate:
    """Chain of continuous maps, consecutive ones a single step apart."""

    chain: tuple
    category: int
    basepoint: tuple = None

    @property
    def steps(self):
        return len(self.chain) - 1

    @property
    def start(self):
        return self.chain[0]

    @property
    def end(self):
        return self.chain[-1]


@dataclass(frozen=True)
class HomotopyVerdict:
    status: Status
    certificates: tuple = ()
    explored: int = 0
    budget: int = DEFAULT_BUDGET
    witness: object = None
    note: str = ""

    @property
    def certificate(self):
        return self.certificates[0] if self.certificates else None

    @property
    def yes(self):
        return self.status is Status.YES

    @property
    def no(self):
        return self.status is Status.NO

    @property
    def inconclusive(self):
        return self.status is Status.INCONCLUSIVE


@dataclass(frozen=True)
class HomotopyClass:
    status: Status
    members: frozenset = field(default=None)
    explored: int = 0
    budget: int = DEFAULT_BUDGET


def _emit(verdict):
    for hook in audit_hooks:
        hook(verdict)
    return verdict


def combine(verdicts, note=""):
    """Conjunction: NO if any is NO, else INCONCLUSIVE if any is, else YES."""
    verdicts = list(verdicts)
    certs = tuple(c for v in verdicts for c in v.certificates)
    explored = sum(v.explored for v in verdicts)
    budget = max((v.budget for v in verdicts), default=DEFAULT_BUDGET)
    if any(v.no for v in verdicts):
        status = Status.NO
        certs = ()
    elif any(v.inconclusive for v in verdicts):
        status = Status.INCONCLUSIVE
        certs = ()
    else:
        status = Status.YES
    return HomotopyVerdict(status, certs, explored, budget, note=note)


# --------------------------------------------------------------------------
# single steps and the search space


def _check_pair(f, g):
    if f.domain != g.domain or f.codomain != g.codomain:
        raise DomainMismatch("maps must share domain and codomain")


def _require_continuous(*maps):
    for f in maps:
        bad = continuity_violation(f)
        if bad is not None:
            raise NotContinuous(f"map {f!r} breaks adjacency {bad}")


def single_step_homotopic(f, g, cat):
    check_category(cat)
    _check_pair(f, g)
    k = kernels.backend(f.codomain.n)
    if cat == 1:
        return k.pointwise_adjacent(f.values, g.values, f.codomain.nbr)
    return k.np2_step(f.values, g.values, f.domain.edges, f.codomain.nbr)


class _MapSpace:
    """Single-step graph on continuous maps ``dom -> cod``, optionally pointed."""

    def __init__(self, dom, cod, cat, base=None):
        self.dom = dom
        self.cod = cod
        self.cat = check_category(cat)
        self.base = base
        self.kernel = kernels.backend(cod.n)
        self.frozen = -1 if base is None else base[0]
        self.order = list(range(dom.n))
        self.back = [tuple(u for u in dom.adj[v] if u < v) for v in self.order]

    def neighbors(self, f):
        if self.cat == 2:
            return self.kernel.one_point_moves(f, self.dom.adj, self.cod.nbr, self.frozen)
        nbr = self.cod.nbr
        cand = [nbr[y] for y in f]
        if self.base is not None:
            cand[self.base[0]] = 1 << self.base[1]
        return (h for h in self.kernel.homomorphisms(self.order, self.back, nbr, cand) if h != f)

    def wrap(self, table):
        return DigitalMap(self.dom, self.cod, table)

    def certificate(self, tables):
        return HomotopyCertificate(tuple(self.wrap(t) for t in tables), self.cat, self.base)


def _chain_to(parents, node):
    out = []
    while node is not None:
        out.append(node)
        node = parents[node]
    out.reverse()
    return out


def _explore(space, start, budget, is_target=None):
    """Breadth-first search of the component of ``start``.

    Returns ``(status, parents, hit, explored)``; ``status`` is YES when a
    target was reached (``hit``), NO when the component was exhausted, and
    INCONCLUSIVE when ``budget`` maps were visited first.
    """
    parents = {start: None}
    if is_target is not None and is_target(start):
        return Status.YES, parents, start, 1
    if budget <= 1:
        return Status.INCONCLUSIVE, parents, None, budget
    frontier = [start]
    while frontier:
        nxt = []
        for x in sorted(frontier):
            for y in space.neighbors(x):
                if y in parents:
                    continue
                parents[y] = x
                if is_target is not None and is_target(y):
                    return Status.YES, parents, y, len(parents)
                if len(parents) >= budget:
                    return Status.INCONCLUSIVE, parents, None, budget
                nxt.append(y)
        frontier = nxt
    return Status.NO, parents, None, len(parents)


def _connect(space, f, g, budget):
    """Bidirectional search from ``f`` and ``g``; returns ``(status, chain, explored)``."""
    if f == g:
        return Status.YES, [f], 1
    pa = {f: None}
    pb = {g: None}
    fa = [f]
    fb = [g]
    while fa and fb:
        forward = len(fa) <= len(fb)
        own, other, frontier = (pa, pb, fa) if forward else (pb, pa, fb)
        nxt = []
        for x in sorted(frontier):
            for y in space.neighbors(x):
                if y in own:
                    continue
                own[y] = x
                if y in other:
                    left = _chain_to(pa, y)
                    right = _chain_to(pb, y)
                    right.reverse()
                    return Status.YES, left + right[1:], len(pa) + len(pb)
                if len(pa) + len(pb) >= budget:
                    return Status.INCONCLUSIVE, None, budget
                nxt.append(y)
        if forward:
            fa = nxt
        else:
            fb = nxt
    return Status.NO, None, len(pa) + len(pb)


# --------------------------------------------------------------------------
# public deciders


def homotopic(f, g, cat, budget=DEFAULT_BUDGET):
    """Decide ``f ~=_cat g``; YES carries a certificate chain from ``f`` to ``g``."""
    check_category(cat)
    _check_pair(f, g)
    _require_continuous(f, g)
    space = _MapSpace(f.domain, f.codomain, cat)
    status, chain, explored = _connect(space, f.values, g.values, budget)
    certs = (space.certificate(chain),) if status is Status.YES else ()
    return _emit(HomotopyVerdict(status, certs, explored, budget))


def pointed_homotopic(f, g, cat, base_dom, base_cod, budget=DEFAULT_BUDGET):
    """As ``homotopic`` but every stage must send ``base_dom`` to ``base_cod``."""
    check_category(cat)
    _check_pair(f, g)
    f.domain.check_vertex(base_dom)
    f.codomain.check_vertex(base_cod)
    if not (f.is_pointed(base_dom, base_cod) and g.is_pointed(base_dom, base_cod)):
        raise NotPointed(f"maps must send {base_dom} to {base_cod}")
    _require_continuous(f, g)
    space = _MapSpace(f.domain, f.codomain, cat, base=(base_dom, base_cod))
    status, chain, explored = _connect(space, f.values, g.values, budget)
    certs = (space.certificate(chain),) if status is Status.YES else ()
    return _emit(HomotopyVerdict(status, certs, explored, budget))


def _class_search(f, cat, budget, base=None, is_target=None):
    space = _MapSpace(f.domain, f.codomain, cat, base=base)
    return space, _explore(space, f.values, budget, is_target)


def homotopy_class(f, cat, budget=DEFAULT_BUDGET, base=None):
    """All maps homotopic to ``f`` (pointed at ``base=(b_dom, b_cod)`` if given)."""
    check_category(cat)
    _require_continuous(f)
    if base is not None and not f.is_pointed(*base):
        raise NotPointed(f"map must send {base[0]} to {base[1]}")
    space, (status, parents, _, explored) = _class_search(f, cat, budget, base)
    if status is Status.INCONCLUSIVE:
        return HomotopyClass(status, None, explored, budget)
    members = frozenset(space.wrap(t) for t in parents)
    return HomotopyClass(Status.YES, members, explored, budget)


def search_class(f, cat, predicate, budget=DEFAULT_BUDGET, base=None):
    """Look for a map satisfying ``predicate`` (on value tables) in the class of ``f``.

    YES carries the hit as ``witness`` and a chain from ``f`` to it; NO means
    the whole class was searched.
    """
    check_category(cat)
    _require_continuous(f)
    space, (status, parents, hit, explored) = _class_search(f, cat, budget, base, predicate)
    if status is Status.YES:
        cert = space.certificate(_chain_to(parents, hit))
        return _emit(HomotopyVerdict(status, (cert,), explored, budget, witness=space.wrap(hit)))
    return _emit(HomotopyVerdict(status, (), explored, budget))


def record(verdict):
    """Pass a verdict built outside this module through the audit hooks."""
    return _emit(verdict)


def is_contractible(img, cat, budget=DEFAULT_BUDGET):
    """YES iff the identity is homotopic to a constant map; certificate ends at the constant."""
    check_category(cat)
    ident = identity_map(img)
    space = _MapSpace(img, img, cat)
    if is_connected(img):
        # constants on a connected image are mutually one step apart
        status, chain, explored = _connect(space, ident.values, (0,) * img.n, budget)
    else:
        status, parents, hit, explored = _explore(space, ident.values, budget, lambda t: len(set(t)) == 1)
        chain = _chain_to(parents, hit) if status is Status.YES else None
    certs = (space.certificate(chain),) if status is Status.YES else ()
    witness = space.wrap(chain[-1]) if chain else None
    return _emit(HomotopyVerdict(status, certs, explored, budget, witness=witness))


def is_irreducible(img, cat, budget=DEFAULT_BUDGET):
    """YES iff every map homotopic to the identity is surjective.

    NO carries the non-surjective witness and a chain from the identity to it.
    """
    check_category(cat)
    ident = identity_map(img)
    n = img.n
    space, (status, parents, hit, explored) = _class_search(ident, cat, budget, is_target=lambda t: len(set(t)) < n)
    if status is Status.YES:
        cert = space.certificate(_chain_to(parents, hit))
        return _emit(HomotopyVerdict(Status.NO, (cert,), explored, budget, witness=space.wrap(hit)))
    if status is Status.NO:
        return _emit(HomotopyVerdict(Status.YES, (), explored, budget, note=f"class of id has {explored} maps"))
    return _emit(HomotopyVerdict(Status.INCONCLUSIVE, (), explored, budget))


def is_rigid(img, cat, budget=DEFAULT_BUDGET):
    """YES iff the identity's homotopy class is just the identity.

    Only the identity's single-step neighbours need inspecting.
    """
    check_category(cat)
    space = _MapSpace(img, img, cat)
    ident = tuple(range(img.n))
    other = next(iter(space.neighbors(ident)), None)
    if other is None:
        return _emit(HomotopyVerdict(Status.YES, (), 1, budget))
    cert = space.certificate([ident, other])
    return _emit(HomotopyVerdict(Status.NO, (cert,), 2, budget, witness=space.wrap(other)))


def _maps_between(X, Y, base=None):
    cand = None
    if base is not None:
        cand = [(1 << Y.n) - 1] * X.n
        cand[base[0]] = 1 << base[1]
    return homomorphism_tables(X, Y, cand)


def homotopy_equivalent(X, Y, cat, budget=DEFAULT_BUDGET, pointed=None):
    """Search for ``f: X -> Y``, ``g: Y -> X`` with ``g o f ~= id`` and ``f o g ~= id``.

    ``pointed=(x0, y0)`` restricts to pointed maps and pointed homotopies.
    YES carries ``witness=(f, g)`` and the two round-trip certificates.
    """
    check_category(cat)
    base_x = base_y = None
    if pointed is not None:
        x0, y0 = pointed
        X.check_vertex(x0)
        Y.check_vertex(y0)
        base_x, base_y = (x0, x0), (y0, y0)
    idx, idy = identity_map(X), identity_map(Y)
    if X == Y and (pointed is None or pointed[0] == pointed[1]):
        cert = HomotopyCertificate((idx,), cat, base_x)
        return _emit(HomotopyVerdict(Status.YES, (cert, cert), 1, budget, witness=(idx, idx)))
    sx, (st_x, par_x, _, ex_x) = _class_search(idx, cat, budget, base_x)
    if st_x is Status.INCONCLUSIVE:
        return _emit(HomotopyVerdict(Status.INCONCLUSIVE, (), budget, budget, note="class of id_X too large"))
    sy, (st_y, par_y, _, ex_y) = _class_search(idy, cat, budget - ex_x, base_y)
    if st_y is Status.INCONCLUSIVE:
        return _emit(HomotopyVerdict(Status.INCONCLUSIVE, (), budget, budget, note="class of id_Y too large"))
    explored = ex_x + ex_y
    base_f = None if pointed is None else (pointed[0], pointed[1])
    base_g = None if pointed is None else (pointed[1], pointed[0])
    gs = list(_maps_between(Y, X, base_g))
    for f in _maps_between(X, Y, base_f):
        for g in gs:
            explored += 1
            if explored >= budget:
                return _emit(HomotopyVerdict(Status.INCONCLUSIVE, (), budget, budget))
            gf = tuple(g[y] for y in f)
            if gf not in par_x:
                continue
            fg = tuple(f[x] for x in g)
            if fg not in par_y:
                continue
            # chains run from id to the round trip
            c1 = sx.certificate(_chain_to(par_x, gf))
            c2 = sy.certificate(_chain_to(par_y, fg))
            witness = (DigitalMap(X, Y, f), DigitalMap(Y, X, g))
            return _emit(HomotopyVerdict(Status.YES, (c1, c2), explored, budget, witness=witness))
    return _emit(HomotopyVerdict(Status.NO, (), explored, budget))


# --------------------------------------------------------------------------
# independent certificate checking


def _literally_continuous(f):
    X, Y = f.domain, f.codomain
    return all(Y.adjacent(f.values[a], f.values[b]) for a in range(X.n) for b in range(X.n) if X.adjacent(a, b))


def check_certificate(cert, start=None, end=None):
    """Re-verify a certificate from the definitions, independently of the search.

    The chain is assembled into ``H : X x [0, m] -> Y`` and checked for
    continuity against the literal ``NP_cat`` rule on ``X x [0, m]``; each
    chain map is checked for continuity pair by pair.  Returns a list of
    problems, empty when the certificate is valid.
    """
    problems = []
    chain = cert.chain
    if not chain:
        return ["empty chain"]
    X, Y = chain[0].domain, chain[0].codomain
    for k, h in enumerate(chain):
        if h.domain != X or h.codomain != Y:
            problems.append(f"stage {k}: domain/codomain differ")
            return problems
        if not _literally_continuous(h):
            problems.append(f"stage {k}: not continuous")
        if cert.basepoint is not None and h.values[cert.basepoint[0]] != cert.basepoint[1]:
            problems.append(f"stage {k}: basepoint not preserved")
    if start is not None and chain[0] != start:
        problems.append("chain does not start at the source map")
    if end is not None and chain[-1] != end:
        problems.append("chain does not end at the target map")
    m = len(chain) - 1
    if m == 0:
        return problems
    interval = path(m + 1)
    factors = (X, interval)
    for t in range(m):
        # consecutive times carry every NP adjacency of X x [0, m] between stages
        for s in (t, t + 1):
            for u in (t, t + 1):
                for a in range(X.n):
                    for b in range(X.n):
                        if not np_adjacent(factors, cert.category, (a, s), (b, u)):
                            continue
                        if not Y.adjacent(chain[s].values[a], chain[u].values[b]):
                            problems.append(f"H not continuous between ({a},{s}) and ({b},{u})")
                            return problems
    return problems


def certificate_ok(cert, start=None, end=None):
    return not check_certificate(cert, start, end)


__all__ = [
    "DEFAULT_BUDGET",
    "HomotopyCertificate",
    "HomotopyClass",
    "HomotopyVerdict",
    "Status",
    "audit_hooks",
    "certificate_ok",
    "check_certificate",
    "combine",
    "homotopic",
    "homotopy_class",
    "homotopy_equivalent",
    "is_contractible",
    "is_irreducible",
    "is_rigid",
    "pointed_homotopic",
    "record",
    "search_class",
    "single_step_homotopic",
]
