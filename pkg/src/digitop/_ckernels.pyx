# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts as ``_pykernels``.

Masks are ``uint64``, so the codomain must have at most 64 vertices.  The
dispatcher in ``kernels`` routes larger codomains to the Python fallback.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

NAME = "cython"


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _lowbit(uint64_t m) nogil:
    return __builtin_ctzll(m)


cdef class _HomIter:
    cdef int n
    cdef int ndom
    cdef int k
    cdef bint started
    cdef bint done
    cdef int *order
    cdef int *back_ptr
    cdef int *back_idx
    cdef uint64_t *nbr
    cdef uint64_t *cand
    cdef uint64_t *avail
    cdef int *values

    def __cinit__(self, order, back, nbr, cand):
        cdef int i, j, pos
        self.n = len(order)
        self.ndom = len(cand)
        total = sum(len(b) for b in back)
        self.order = <int *> malloc(max(self.n, 1) * sizeof(int))
        self.back_ptr = <int *> malloc((self.n + 1) * sizeof(int))
        self.back_idx = <int *> malloc(max(total, 1) * sizeof(int))
        self.nbr = <uint64_t *> malloc(max(len(nbr), 1) * sizeof(uint64_t))
        self.cand = <uint64_t *> malloc(max(self.ndom, 1) * sizeof(uint64_t))
        self.avail = <uint64_t *> malloc(max(self.n, 1) * sizeof(uint64_t))
        self.values = <int *> malloc(max(self.ndom, 1) * sizeof(int))
        pos = 0
        for i in range(self.n):
            self.order[i] = order[i]
            self.back_ptr[i] = pos
            for j in back[i]:
                self.back_idx[pos] = j
                pos += 1
        self.back_ptr[self.n] = pos
        for i in range(len(nbr)):
            self.nbr[i] = <uint64_t> nbr[i]
        for i in range(self.ndom):
            self.cand[i] = <uint64_t> cand[i]
            self.values[i] = 0
        self.k = 0
        self.started = False
        self.done = False

    def __dealloc__(self):
        free(self.order)
        free(self.back_ptr)
        free(self.back_idx)
        free(self.nbr)
        free(self.cand)
        free(self.avail)
        free(self.values)

    def __iter__(self):
        return self

    cdef int _advance(self):
        # returns 1 when a full assignment is in self.values, 0 when exhausted
        cdef int k = self.k
        cdef int n = self.n
        cdef int b, v, bit
        cdef uint64_t m, low
        if not self.started:
            self.started = True
            k = 0
            self.avail[0] = self.cand[self.order[0]]
        else:
            k = n - 1
        while k >= 0:
            m = self.avail[k]
            if m == 0:
                k -= 1
                continue
            low = m & (~m + 1)
            self.avail[k] = m ^ low
            bit = _lowbit(low)
            self.values[self.order[k]] = bit
            if k == n - 1:
                self.k = k
                return 1
            k += 1
            v = self.order[k]
            m = self.cand[v]
            for b in range(self.back_ptr[k], self.back_ptr[k + 1]):
                m &= self.nbr[self.values[self.back_idx[b]]]
                if m == 0:
                    break
            self.avail[k] = m
        self.k = -1
        return 0

    def __next__(self):
        cdef int i
        if self.done:
            raise StopIteration
        if self.n == 0:
            self.done = True
            return ()
        if not self._advance():
            self.done = True
            raise StopIteration
        return tuple([self.values[i] for i in range(self.ndom)])


def homomorphisms(order, back, nbr, cand):
    return _HomIter(order, back, nbr, cand)


def first_violation(values, edges, nbr):
    cdef Py_ssize_t i, ne = len(edges)
    cdef int a, b
    cdef uint64_t m
    for i in range(ne):
        a, b = edges[i]
        m = <uint64_t> nbr[values[a]]
        if not (m >> <int> values[b]) & 1:
            return i
    return -1


def pointwise_adjacent(f, g, nbr):
    cdef Py_ssize_t a, n = len(f)
    cdef uint64_t m
    for a in range(n):
        m = <uint64_t> nbr[f[a]]
        if not (m >> <int> g[a]) & 1:
            return False
    return True


def np2_step(f, g, edges, nbr):
    cdef Py_ssize_t a, i, n = len(f), ne = len(edges)
    cdef int x, y
    cdef uint64_t m
    for a in range(n):
        m = <uint64_t> nbr[f[a]]
        if not (m >> <int> g[a]) & 1:
            return False
    for i in range(ne):
        x, y = edges[i]
        m = <uint64_t> nbr[f[x]]
        if not (m >> <int> g[y]) & 1:
            return False
        m = <uint64_t> nbr[f[y]]
        if not (m >> <int> g[x]) & 1:
            return False
    return True


def one_point_moves(f, dom_adj, nbr, int frozen):
    cdef Py_ssize_t v, n = len(f)
    cdef int fv, w
    cdef uint64_t m, low
    out = []
    for v in range(n):
        if v == frozen:
            continue
        fv = f[v]
        m = <uint64_t> nbr[fv]
        for u in dom_adj[v]:
            m &= <uint64_t> nbr[f[u]]
        m &= ~((<uint64_t> 1) << fv)
        while m:
            low = m & (~m + 1)
            m ^= low
            w = _lowbit(low)
            g = list(f)
            g[v] = w
            out.append(tuple(g))
    return out


cdef class CanonicalChecker:
    """Callable testing whether a mask is minimal under a fixed permutation set."""
    cdef int nperm
    cdef int nbits
    cdef int *tab

    def __cinit__(self, perm_bits):
        cdef int p, i
        self.nperm = len(perm_bits)
        self.nbits = len(perm_bits[0]) if self.nperm else 0
        self.tab = <int *> malloc(max(self.nperm * self.nbits, 1) * sizeof(int))
        for p in range(self.nperm):
            row = perm_bits[p]
            for i in range(self.nbits):
                self.tab[p * self.nbits + i] = row[i]

    def __dealloc__(self):
        free(self.tab)

    def __call__(self, mask):
        cdef uint64_t m = <uint64_t> mask
        cdef uint64_t image
        cdef int bits[64]
        cdef int nset = 0
        cdef int p, i
        cdef int *row
        for i in range(self.nbits):
            if (m >> i) & 1:
                bits[nset] = i
                nset += 1
        for p in range(self.nperm):
            row = self.tab + p * self.nbits
            image = 0
            for i in range(nset):
                image |= (<uint64_t> 1) << row[bits[i]]
            if image < m:
                return False
        return True


def canonical_checker(perm_bits):
    return CanonicalChecker(perm_bits)
