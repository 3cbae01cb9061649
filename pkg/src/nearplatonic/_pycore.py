"""Pure-Python kernels: canonical codes and the orderly regular-graph search.

A graph is passed to these kernels in flat form.  ``off`` has one entry per
vertex plus a sentinel, ``nbr[off[v]:off[v+1]]`` is the rotation of ``v`` and
``rev[d]`` is the position of the reverse dart inside the neighbour's list.
The dart of ``v`` at position ``i`` has id ``off[v] + i``.

A code is a list of ints: the vertex count, then for every vertex in
traversal order the 1-based labels of its neighbours followed by a 0.
"""

from __future__ import annotations


def traversal_code(off, nbr, rev, root, orient, bound=None):
    """Code of the breadth-first traversal from dart ``root``.

    ``orient`` is +1 to walk rotations forward and -1 to walk them backward.
    With ``bound`` given, returns None unless the result is strictly smaller.
    """
    nv = len(off) - 1
    label = [-1] * nv
    entry = [0] * nv
    v0 = 0
    while off[v0 + 1] <= root:
        v0 += 1
    label[v0] = 0
    entry[v0] = root - off[v0]
    order = [v0]
    nxt = 1
    code = [nv]
    less = bound is None
    if not less and bound[0] != nv:
        if nv > bound[0]:
            return None
        less = True
    pos = 1
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        base = off[x]
        deg = off[x + 1] - base
        e = entry[x]
        for j in range(deg):
            i = (e + orient * j) % deg
            u = nbr[base + i]
            if label[u] < 0:
                label[u] = nxt
                nxt += 1
                order.append(u)
                entry[u] = rev[base + i]
            val = label[u] + 1
            if not less:
                b = bound[pos]
                if val > b:
                    return None
                if val < b:
                    less = True
            code.append(val)
            pos += 1
        if not less:
            if bound[pos] != 0:
                # our list ended first, so we are smaller
                less = True
        code.append(0)
        pos += 1
    if not less:
        return None
    return code


def canonical_code(off, nbr, rev):
    """Lexicographically least traversal code over all roots and orientations."""
    best = None
    for root in range(len(nbr)):
        for orient in (1, -1):
            c = traversal_code(off, nbr, rev, root, orient, best)
            if c is not None:
                best = c
    return best


def _has_smaller_root(off, nbr, rev, ident):
    for root in range(len(nbr)):
        for orient in (1, -1):
            if root == 0 and orient == 1:
                continue
            if traversal_code(off, nbr, rev, root, orient, ident) is not None:
                return True
    return False


def _flat_regular(rot, n, k):
    off = [v * k for v in range(n + 1)]
    nbr = [u for r in rot for u in r]
    rev = [0] * (n * k)
    for v in range(n):
        for i, u in enumerate(rot[v]):
            rev[v * k + i] = rot[u].index(v)
    return off, nbr, rev


class _Search:
    """Builds labelled rotation systems vertex by vertex in code order.

    Vertex ``w``'s list starts with its parent and then takes, in some order,
    the other earlier vertices that listed ``w`` plus forward neighbours
    (already labelled unprocessed vertices or the next fresh label).  Partial
    face walks are tracked as chains of darts; a branch dies when the faces
    it has committed to need more excess than Euler's formula allows.
    """

    def __init__(self, k, n, part=0, nparts=1, split_depth=3):
        self.k = k
        self.n = n
        e = k * n // 2
        f = 2 - n + e
        self.budget = 2 * e - 3 * f
        self.oe = list(range(n * n))
        self.ln = [1] * (n * n)
        self.closed = 0
        self.openx = 0
        self.undo = []
        self.rot = [None] * n
        self.back = [[] for _ in range(n)]
        self.nl = 0
        self.out = []
        self.part = part
        self.nparts = nparts
        self.split_depth = split_depth
        self.branch = 0
        self.leaves = 0

    def _ex(self, s, e, length):
        n = self.n
        if s // n != e % n:
            length += 1
        return length - 3 if length > 3 else 0

    def link(self, a, b):
        """Record that dart ``b`` follows dart ``a`` on a face."""
        oe, ln = self.oe, self.ln
        s = oe[a]
        e = oe[b]
        la = ln[a]
        lb = ln[b]
        self.undo.append((a, b, s, e, la, lb, self.closed, self.openx))
        if s == b:
            if la < 3:
                return False
            self.openx -= self._ex(s, a, la)
            self.closed += la - 3
        else:
            length = la + lb
            self.openx += (self._ex(s, e, length) - self._ex(s, a, la)
                           - self._ex(b, e, lb))
            oe[s] = e
            oe[e] = s
            ln[s] = length
            ln[e] = length
        return self.closed + self.openx <= self.budget

    def unlink(self):
        a, b, s, e, la, lb, self.closed, self.openx = self.undo.pop()
        oe, ln = self.oe, self.ln
        oe[s] = a
        oe[a] = s
        oe[e] = b
        oe[b] = e
        ln[s] = ln[a] = la
        ln[e] = ln[b] = lb

    def run(self):
        k, n = self.k, self.n
        if (k * n) % 2 or n < k + 1:
            return self.out
        self.rot[0] = list(range(1, k + 1))
        self.nl = k + 1
        for u in range(1, k + 1):
            self.back[u].append(0)
        links = 0
        ok = True
        for j in range(k):
            links += 1
            if not self.link(self.rot[0][j - 1] * n, self.rot[0][j]):
                ok = False
                break
        if ok:
            self.vertex(1)
        for _ in range(links):
            self.unlink()
        return self.out

    def vertex(self, w):
        n, k = self.n, self.k
        if w == self.split_depth:
            self.branch += 1
            if (self.branch - 1) % self.nparts != self.part:
                return
        if w == n:
            self.leaves += 1
            rot = self.rot
            ident = [n]
            for r in rot:
                ident.extend(u + 1 for u in r)
                ident.append(0)
            off, nbr, rev = _flat_regular(rot, n, k)
            if not _has_smaller_root(off, nbr, rev, ident):
                self.out.append([list(r) for r in rot])
            return
        if w >= self.nl:
            return
        back = self.back[w]
        if len(back) > k:
            return
        self.fill(w, [back[0]], back[1:], k - len(back))

    def fill(self, w, lst, rest, nfwd):
        n, k = self.n, self.k
        if len(lst) == k:
            if self.link(lst[-1] * n + w, w * n + lst[0]):
                self.rot[w] = list(lst)
                self.vertex(w + 1)
                self.rot[w] = None
            self.unlink()
            return
        a = lst[-1] * n + w
        for i, u in enumerate(rest):
            if self.link(a, w * n + u):
                lst.append(u)
                self.fill(w, lst, rest[:i] + rest[i + 1:], nfwd)
                lst.pop()
            self.unlink()
        if nfwd == 0:
            return
        for u in range(w + 1, self.nl + (self.nl < n)):
            if u < self.nl and (u in lst or len(self.back[u]) >= k):
                continue
            if self.link(a, w * n + u):
                lst.append(u)
                self.back[u].append(w)
                fresh = u == self.nl
                if fresh:
                    self.nl += 1
                self.fill(w, lst, rest, nfwd - 1)
                if fresh:
                    self.nl -= 1
                self.back[u].pop()
                lst.pop()
            self.unlink()


def enumerate_regular(k, n, part=0, nparts=1):
    """Canonical labelled rotation systems of connected k-regular plane
    graphs on exactly ``n`` vertices, one per isomorphism class."""
    return _Search(k, n, part, nparts).run()
