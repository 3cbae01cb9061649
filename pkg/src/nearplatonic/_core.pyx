# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: canonical codes and the orderly regular-graph search.

Same algorithms and calling conventions as ``_pycore``.
"""

from libc.stdlib cimport malloc, free


cdef int _trav(int nv, int* off, int* nbr, int* rev, int root, int orient,
               int* bound, bint has_bound, int* out,
               int* label, int* entry, int* order) nogil:
    # Writes the traversal code into out; returns 1 if it was written and is
    # strictly below bound (or no bound was given), else 0.
    cdef int v0 = 0, i, j, x, u, base, deg, e, val, b
    cdef int head = 0, tail = 0, nxt = 1, pos = 1
    cdef bint less = not has_bound
    for i in range(nv):
        label[i] = -1
    while off[v0 + 1] <= root:
        v0 += 1
    label[v0] = 0
    entry[v0] = root - off[v0]
    order[tail] = v0
    tail += 1
    out[0] = nv
    if not less and bound[0] != nv:
        if nv > bound[0]:
            return 0
        less = True
    while head < tail:
        x = order[head]
        head += 1
        base = off[x]
        deg = off[x + 1] - base
        e = entry[x]
        for j in range(deg):
            i = (e + orient * j) % deg
            if i < 0:
                i += deg
            u = nbr[base + i]
            if label[u] < 0:
                label[u] = nxt
                nxt += 1
                order[tail] = u
                tail += 1
                entry[u] = rev[base + i]
            val = label[u] + 1
            if not less:
                b = bound[pos]
                if val > b:
                    return 0
                if val < b:
                    less = True
            out[pos] = val
            pos += 1
        if not less and bound[pos] != 0:
            less = True
        out[pos] = 0
        pos += 1
    return 1 if less else 0


cdef class _Arrays:
    cdef int nv, nd, clen
    cdef int* off
    cdef int* nbr
    cdef int* rev
    cdef int* label
    cdef int* entry
    cdef int* order
    cdef int* best
    cdef int* cur

    def __cinit__(self, off, nbr, rev):
        cdef int i
        self.nv = len(off) - 1
        self.nd = len(nbr)
        self.clen = 1 + self.nd + self.nv
        self.off = <int*> malloc((self.nv + 1) * sizeof(int))
        self.nbr = <int*> malloc((self.nd + 1) * sizeof(int))
        self.rev = <int*> malloc((self.nd + 1) * sizeof(int))
        self.label = <int*> malloc((self.nv + 1) * sizeof(int))
        self.entry = <int*> malloc((self.nv + 1) * sizeof(int))
        self.order = <int*> malloc((self.nv + 1) * sizeof(int))
        self.best = <int*> malloc((self.clen + 1) * sizeof(int))
        self.cur = <int*> malloc((self.clen + 1) * sizeof(int))
        if not (self.off and self.nbr and self.rev and self.label
                and self.entry and self.order and self.best and self.cur):
            raise MemoryError()
        for i in range(self.nv + 1):
            self.off[i] = off[i]
        for i in range(self.nd):
            self.nbr[i] = nbr[i]
            self.rev[i] = rev[i]

    def __dealloc__(self):
        free(self.off); free(self.nbr); free(self.rev); free(self.label)
        free(self.entry); free(self.order); free(self.best); free(self.cur)


def traversal_code(off, nbr, rev, int root, int orient, bound=None):
    """Code of the breadth-first traversal from dart ``root``."""
    cdef _Arrays a = _Arrays(off, nbr, rev)
    cdef int i
    cdef bint has = bound is not None
    if has:
        # a bound shorter than our code still compares correctly because
        # the comparison stops at the first difference; pad defensively
        for i in range(a.clen):
            a.best[i] = bound[i] if i < len(bound) else 0
    if not _trav(a.nv, a.off, a.nbr, a.rev, root, orient, a.best, has,
                 a.cur, a.label, a.entry, a.order):
        return None
    return [a.cur[i] for i in range(a.clen)]


def canonical_code(off, nbr, rev):
    """Lexicographically least traversal code over all roots and orientations."""
    cdef _Arrays a = _Arrays(off, nbr, rev)
    cdef int root, i, o
    cdef bint have = False
    cdef int* tmp
    with nogil:
        for root in range(a.nd):
            for o in range(2):
                if _trav(a.nv, a.off, a.nbr, a.rev, root, 1 - 2 * o,
                         a.best, have, a.cur, a.label, a.entry, a.order):
                    tmp = a.best
                    a.best = a.cur
                    a.cur = tmp
                    have = True
    return [a.best[i] for i in range(a.clen)]


cdef class _Search:
    cdef int k, n, budget, closed, openx, nl, nundo
    cdef int part, nparts, split_depth, branch
    cdef public long leaves
    cdef int* oe
    cdef int* ln
    cdef int* undo
    cdef int* rot
    cdef int* back
    cdef int* nback
    cdef int* used
    # leaf scratch
    cdef int* off
    cdef int* rev
    cdef int* ident
    cdef int* cur
    cdef int* label
    cdef int* entry
    cdef int* order
    cdef list out

    def __cinit__(self, int k, int n, int part=0, int nparts=1,
                  int split_depth=3):
        cdef int i, e, f
        self.k = k
        self.n = n
        e = k * n // 2
        f = 2 - n + e
        self.budget = 2 * e - 3 * f
        self.closed = 0
        self.openx = 0
        self.nl = 0
        self.nundo = 0
        self.part = part
        self.nparts = nparts
        self.split_depth = split_depth
        self.branch = 0
        self.leaves = 0
        self.out = []
        self.oe = <int*> malloc(n * n * sizeof(int))
        self.ln = <int*> malloc(n * n * sizeof(int))
        self.undo = <int*> malloc(8 * (n * k + 8) * sizeof(int))
        self.rot = <int*> malloc(n * k * sizeof(int))
        self.back = <int*> malloc(n * (k + 1) * sizeof(int))
        self.nback = <int*> malloc(n * sizeof(int))
        self.used = <int*> malloc(n * (k + 1) * sizeof(int))
        self.off = <int*> malloc((n + 1) * sizeof(int))
        self.rev = <int*> malloc(n * k * sizeof(int))
        self.ident = <int*> malloc((1 + n * k + n) * sizeof(int))
        self.cur = <int*> malloc((1 + n * k + n) * sizeof(int))
        self.label = <int*> malloc(n * sizeof(int))
        self.entry = <int*> malloc(n * sizeof(int))
        self.order = <int*> malloc(n * sizeof(int))
        if not (self.oe and self.ln and self.undo and self.rot and self.back
                and self.nback and self.used and self.off
                and self.rev and self.ident and self.cur and self.label
                and self.entry and self.order):
            raise MemoryError()
        for i in range(n * n):
            self.oe[i] = i
            self.ln[i] = 1
        for i in range(n):
            self.nback[i] = 0
        for i in range(n + 1):
            self.off[i] = i * k

    def __dealloc__(self):
        free(self.oe); free(self.ln); free(self.undo); free(self.rot)
        free(self.back); free(self.nback); free(self.used)
        free(self.off); free(self.rev); free(self.ident); free(self.cur)
        free(self.label); free(self.entry); free(self.order)

    cdef inline int _ex(self, int s, int e, int length):
        if s // self.n != e % self.n:
            length += 1
        return length - 3 if length > 3 else 0

    cdef bint link(self, int a, int b):
        cdef int s = self.oe[a], e = self.oe[b]
        cdef int la = self.ln[a], lb = self.ln[b], length
        cdef int* u = self.undo + 8 * self.nundo
        u[0] = a; u[1] = b; u[2] = s; u[3] = e
        u[4] = la; u[5] = lb; u[6] = self.closed; u[7] = self.openx
        self.nundo += 1
        if s == b:
            if la < 3:
                return False
            self.openx -= self._ex(s, a, la)
            self.closed += la - 3
        else:
            length = la + lb
            self.openx += (self._ex(s, e, length) - self._ex(s, a, la)
                           - self._ex(b, e, lb))
            self.oe[s] = e
            self.oe[e] = s
            self.ln[s] = length
            self.ln[e] = length
        return self.closed + self.openx <= self.budget

    cdef void unlink(self):
        self.nundo -= 1
        cdef int* u = self.undo + 8 * self.nundo
        cdef int a = u[0], b = u[1], s = u[2], e = u[3]
        self.closed = u[6]
        self.openx = u[7]
        self.oe[s] = a
        self.oe[a] = s
        self.oe[e] = b
        self.oe[b] = e
        self.ln[s] = u[4]
        self.ln[a] = u[4]
        self.ln[e] = u[5]
        self.ln[b] = u[5]

    def run(self):
        cdef int k = self.k, n = self.n, j, links = 0
        cdef bint ok = True
        if (k * n) % 2 or n < k + 1:
            return self.out
        for j in range(k):
            self.rot[j] = j + 1
            self.back[(j + 1) * (k + 1)] = 0
            self.nback[j + 1] = 1
        self.nl = k + 1
        for j in range(k):
            links += 1
            if not self.link(self.rot[(j + k - 1) % k] * n, self.rot[j]):
                ok = False
                break
        if ok:
            self.vertex(1)
        for j in range(links):
            self.unlink()
        return self.out

    cdef bint _canonical_leaf(self):
        cdef int n = self.n, k = self.k, v, i, u, j, p = 0, root, o
        for v in range(n):
            for i in range(k):
                u = self.rot[v * k + i]
                for j in range(k):
                    if self.rot[u * k + j] == v:
                        self.rev[v * k + i] = j
                        break
        self.ident[p] = n
        p += 1
        for v in range(n):
            for i in range(k):
                self.ident[p] = self.rot[v * k + i] + 1
                p += 1
            self.ident[p] = 0
            p += 1
        for root in range(n * k):
            for o in range(2):
                if root == 0 and o == 0:
                    continue
                if _trav(n, self.off, self.rot, self.rev, root, 1 - 2 * o,
                         self.ident, True, self.cur, self.label, self.entry,
                         self.order):
                    return False
        return True

    cdef void vertex(self, int w):
        cdef int n = self.n, k = self.k, i, nb
        if w == self.split_depth:
            self.branch += 1
            if (self.branch - 1) % self.nparts != self.part:
                return
        if w == n:
            self.leaves += 1
            if self._canonical_leaf():
                self.out.append([[self.rot[i * k + j] for j in range(k)]
                                 for i in range(n)])
            return
        if w >= self.nl:
            return
        nb = self.nback[w]
        if nb > k:
            return
        for i in range(nb):
            self.used[w * (k + 1) + i] = 0
        self.used[w * (k + 1)] = 1
        self.rot[w * k] = self.back[w * (k + 1)]
        self.fill(w, 1, nb - 1, k - nb)

    cdef void fill(self, int w, int len_, int nrest, int nfwd):
        # the row rot[w*k:(w+1)*k] is the list under construction
        cdef int n = self.n, k = self.k, a, i, u, j, nb
        cdef int* lst = self.rot + w * k
        cdef int* used = self.used + w * (k + 1)
        cdef bint fresh, dup
        if len_ == k:
            if self.link(lst[k - 1] * n + w, w * n + lst[0]):
                self.vertex(w + 1)
            self.unlink()
            return
        a = lst[len_ - 1] * n + w
        nb = self.nback[w]
        for i in range(1, nb):
            if used[i]:
                continue
            u = self.back[w * (k + 1) + i]
            if self.link(a, w * n + u):
                lst[len_] = u
                used[i] = 1
                self.fill(w, len_ + 1, nrest - 1, nfwd)
                used[i] = 0
            self.unlink()
        if nfwd == 0:
            return
        for u in range(w + 1, self.nl + (1 if self.nl < n else 0)):
            fresh = u == self.nl
            if not fresh:
                if self.nback[u] >= k:
                    continue
                dup = False
                for j in range(len_):
                    if lst[j] == u:
                        dup = True
                        break
                if dup:
                    continue
            if self.link(a, w * n + u):
                lst[len_] = u
                self.back[u * (k + 1) + self.nback[u]] = w
                self.nback[u] += 1
                if fresh:
                    self.nl += 1
                self.fill(w, len_ + 1, nrest, nfwd - 1)
                if fresh:
                    self.nl -= 1
                self.nback[u] -= 1
            self.unlink()


def enumerate_regular(int k, int n, int part=0, int nparts=1):
    """Canonical labelled rotation systems of connected k-regular plane
    graphs on exactly ``n`` vertices, one per isomorphism class."""
    return _Search(k, n, part, nparts).run()
