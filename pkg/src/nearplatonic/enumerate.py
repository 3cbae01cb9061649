"""Exhaustive generation of connected simple k-regular plane graphs.

The main engine is an orderly search over rotation systems that builds each
graph in the order its own canonical code would read it and keeps a leaf only
when no other root dart gives a smaller code.  :func:`bruteforce_oracle` is a
slow, independent cross-check: it first enumerates abstract graphs, then
every rotation system on each.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx

from . import core
from .classify import classify_nearly_platonic
from .errors import GraphError, TooLarge
from .planegraph import PlaneGraph, build, canonical_code, graph_from_code

STRATEGIES = ("CanonicalAugmentation", "BruteForceOracle")
ORACLE_LIMITS = {3: 10, 4: 9, 5: 12}
JOBS_ENV = "NEARPLATONIC_JOBS"


def default_parallelism() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class EnumSpec:
    k: int
    max_vertices: int
    strategy: str = "CanonicalAugmentation"
    parallelism: int | None = None
    min_vertices: int = 1

    def __post_init__(self):
        if self.k not in (3, 4, 5):
            raise ValueError(f"k must be 3, 4 or 5, got {self.k}")
        if self.max_vertices < self.k + 1:
            raise ValueError(f"max_vertices must be at least k + 1 = {self.k + 1}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")

    def orders(self) -> list[int]:
        lo = max(self.k + 1, self.min_vertices)
        return [n for n in range(lo, self.max_vertices + 1) if self.k * n % 2 == 0]


def _part(args):
    k, n, part, nparts = args
    return core.enumerate_regular(k, n, part, nparts)


def enumerate_order(k: int, n: int, parallelism: int = 1) -> list[PlaneGraph]:
    """All graphs with exactly ``n`` vertices, sorted by canonical code."""
    if k * n % 2 or n < k + 1:
        return []
    if parallelism <= 1:
        rots = core.enumerate_regular(k, n, 0, 1)
    else:
        nparts = parallelism * 4
        with ProcessPoolExecutor(max_workers=parallelism) as ex:
            chunks = ex.map(_part, [(k, n, p, nparts) for p in range(nparts)])
            rots = [r for chunk in chunks for r in chunk]
    graphs = {}
    for r in rots:
        g = build(r)
        graphs[canonical_code(g)] = g
    return [graphs[c] for c in sorted(graphs)]


def enumerate_k_regular(spec: EnumSpec) -> Iterator[PlaneGraph]:
    """Stream one representative per class, order by order.

    Within one order the graphs are held in memory so they can be emitted
    sorted by canonical code; nothing is kept across orders.
    """
    jobs = spec.parallelism or default_parallelism()
    for n in spec.orders():
        if spec.strategy == "BruteForceOracle":
            codes = sorted(bruteforce_oracle(spec.k, n))
            for c in codes:
                yield graph_from_code(c)
        else:
            yield from enumerate_order(spec.k, n, jobs)


def filter_nearly_platonic(stream: Iterable[PlaneGraph], t_filter: int | None = None):
    """Yield ``(graph, report)`` for every graph that classifies, optionally
    only those with ``t == t_filter``."""
    for g in stream:
        try:
            rep = classify_nearly_platonic(g)
        except GraphError:
            continue
        if t_filter is None or rep.t == t_filter:
            yield g, rep


# brute-force oracle


def _abstract_graphs(k: int, n: int) -> list[list[list[int]]]:
    """Connected simple planar k-regular graphs on ``n`` labelled vertices,
    up to isomorphism."""
    adj = [set() for _ in range(n)]
    found = []
    triangulation = k * n // 2 == 3 * n - 6

    def planar_so_far():
        h = nx.Graph()
        h.add_edges_from((a, b) for a in range(n) for b in adj[a] if a < b)
        return nx.check_planarity(h)[0]

    def feasible(v):
        # every later vertex must still find enough later, non-adjacent partners
        rest = range(v + 1, n)
        free = [u for u in rest if len(adj[u]) < k]
        for u in free:
            room = sum(1 for w in free if w != u and w not in adj[u])
            if k - len(adj[u]) > room:
                return False
        if sum(k - len(adj[u]) for u in rest) % 2:
            return False
        nv = sum(1 for u in range(n) if adj[u])
        ne = sum(len(a) for a in adj) // 2
        if nv >= 3 and ne > 3 * nv - 6:
            return False
        if triangulation:
            # in a triangulation every edge lies on two triangles; vertices up
            # to v have all their edges already
            for a in range(v + 1):
                for b in adj[a]:
                    if b <= v and a < b and len(adj[a] & adj[b]) < 2:
                        return False
        return True

    def complete():
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from((a, b) for a in range(n) for b in adj[a] if a < b)
        if nx.is_connected(h):
            found.append(h)

    def rec(v):
        if v == n:
            complete()
            return
        need = k - len(adj[v])
        if need < 0:
            return
        if need == 0:
            rec(v + 1)
            return
        cands = [u for u in range(v + 1, n) if len(adj[u]) < k]
        # vertices with identical current neighbourhoods are interchangeable,
        # so only prefixes of each class are tried
        classes: dict[frozenset, list[int]] = {}
        for u in cands:
            classes.setdefault(frozenset(adj[u]), []).append(u)
        groups = list(classes.values())

        def choose(i, left, chosen):
            if left == 0:
                for u in chosen:
                    adj[v].add(u)
                    adj[u].add(v)
                # edges to untouched vertices are pendant and keep planarity
                touched = any(len(adj[u]) > 1 for u in chosen)
                if feasible(v) and (not touched or planar_so_far()):
                    rec(v + 1)
                for u in chosen:
                    adj[v].discard(u)
                    adj[u].discard(v)
                return
            if i == len(groups):
                return
            grp = groups[i]
            for m in range(min(left, len(grp)), -1, -1):
                choose(i + 1, left - m, chosen + grp[:m])

        choose(0, need, [])

    rec(0)
    unique: dict[str, list[nx.Graph]] = {}
    out = []
    for h in found:
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=4)
        bucket = unique.setdefault(key, [])
        if any(nx.is_isomorphic(h, o) for o in bucket):
            continue
        bucket.append(h)
        out.append([sorted(h.neighbors(v)) for v in range(n)])
    return out


def _embeddings(adjl: list[list[int]]) -> set[bytes]:
    """Canonical codes of all genus-0 rotation systems on one graph."""
    n = len(adjl)
    ne = sum(map(len, adjl)) // 2
    nf = 2 - n + ne
    total = 2 * ne
    h = nx.Graph((a, b) for a in range(n) for b in adjl[a])
    order = list(nx.bfs_tree(h, 0))
    rot: list = [None] * n
    nxt: dict = {}
    prv: dict = {}
    codes: set[bytes] = set()

    def bound_ok() -> bool:
        # open paths start at darts with a successor but no predecessor
        seen = set()
        excess = 0
        for d in nxt:
            if d in prv:
                continue
            m = 1
            x = d
            while x in nxt:
                seen.add(x)
                x = nxt[x]
                m += 1
            seen.add(x)
            need = m if x[1] == d[0] else m + 1
            excess += max(0, need - 3)
        # whatever is left with a successor lies on a closed face
        closed = in_closed = 0
        for d in nxt:
            if d in seen:
                continue
            x = d
            while x not in seen:
                seen.add(x)
                x = nxt[x]
                in_closed += 1
            closed += 1
        return closed + (total - in_closed - excess) // 3 >= nf

    def rec(i):
        if i == n:
            closed = _count_cycles()
            if closed == nf:
                g = build([list(r) for r in rot])
                codes.add(canonical_code(g))
            return
        v = order[i]
        nb = adjl[v]
        for perm in itertools.permutations(nb[1:]):
            r = [nb[0], *perm]
            rot[v] = r
            links = [((r[j - 1], v), (v, r[j])) for j in range(len(r))]
            for a, b in links:
                nxt[a] = b
                prv[b] = a
            if bound_ok():
                rec(i + 1)
            for a, b in links:
                del nxt[a]
                del prv[b]
        rot[v] = None

    def _count_cycles():
        seen = set()
        c = 0
        for d in nxt:
            if d in seen:
                continue
            x = d
            while x not in seen:
                seen.add(x)
                x = nxt[x]
            c += 1
        return c

    rec(0)
    return codes


def bruteforce_oracle(k: int, n: int) -> set[bytes]:
    """Canonical codes of all k-regular plane graphs on ``n`` vertices, found
    without the orderly search.  Only small orders are allowed."""
    limit = ORACLE_LIMITS.get(k)
    if limit is None or n > limit:
        raise TooLarge(f"oracle limited to n <= {limit} for k = {k}")
    if k * n % 2 or n < k + 1:
        return set()
    codes: set[bytes] = set()
    for adjl in _abstract_graphs(k, n):
        codes |= _embeddings(adjl)
    return codes
