"""Connected plane graphs stored as rotation systems.

Darts are numbered vertex by vertex: the dart leaving ``v`` towards the
``i``-th entry of its rotation has id ``off[v] + i``.  ``sigma`` moves to the
next dart counterclockwise around the same vertex, ``alpha`` flips a dart to
its reverse, and faces are the orbits of ``next(d) = sigma(alpha(d))``.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import networkx as nx

from . import core
from .errors import (
    AsymmetricInput,
    NotConnected,
    NotPlanar,
    NotSimple,
    RotSyntaxError,
    TooLarge,
)

CanonicalCode = bytes


class PlaneGraph:
    """Immutable rotation system of a connected simple plane graph.

    Build instances with :func:`build`, :func:`from_faces` or :func:`parse`;
    the constructor assumes already validated input.
    """

    __slots__ = ("rotations", "off", "nbr", "rev", "vof", "_faces", "_code")

    def __init__(self, rotations: tuple[tuple[int, ...], ...]):
        self.rotations = rotations
        off = [0]
        for r in rotations:
            off.append(off[-1] + len(r))
        self.off = tuple(off)
        self.nbr = tuple(u for r in rotations for u in r)
        pos = [{u: i for i, u in enumerate(r)} for r in rotations]
        self.rev = tuple(pos[u][v] for v, r in enumerate(rotations) for u in r)
        self.vof = tuple(v for v, r in enumerate(rotations) for _ in r)
        self._faces = None
        self._code = None

    # basic counts
    @property
    def n(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return len(self.nbr) // 2

    @property
    def num_darts(self) -> int:
        return len(self.nbr)

    @property
    def num_faces(self) -> int:
        return 2 - self.n + self.num_edges

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def degrees(self) -> list[int]:
        return [len(r) for r in self.rotations]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotations[u]

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges as ``(u, v)`` with ``u < v``."""
        return sorted((v, u) for v, r in enumerate(self.rotations) for u in r if v < u)

    # darts
    def tail(self, d: int) -> int:
        return self.vof[d]

    def head(self, d: int) -> int:
        return self.nbr[d]

    def dart(self, u: int, v: int) -> int:
        """Id of the dart from ``u`` to ``v``."""
        return self.off[u] + self.rotations[u].index(v)

    def alpha(self, d: int) -> int:
        return self.off[self.nbr[d]] + self.rev[d]

    def sigma(self, d: int) -> int:
        v = self.tail(d)
        i = d - self.off[v]
        return self.off[v] + (i + 1) % len(self.rotations[v])

    def sigma_inv(self, d: int) -> int:
        v = self.tail(d)
        i = d - self.off[v]
        return self.off[v] + (i - 1) % len(self.rotations[v])

    def face_next(self, d: int) -> int:
        return self.sigma(self.alpha(d))

    def vertex_of(self) -> list[int]:
        return list(self.vof)

    def alpha_array(self) -> list[int]:
        off, rev = self.off, self.rev
        return [off[u] + rev[d] for d, u in enumerate(self.nbr)]

    def sigma_array(self) -> list[int]:
        out = []
        for v, r in enumerate(self.rotations):
            b = self.off[v]
            out.extend(b + (i + 1) % len(r) for i in range(len(r)))
        return out

    @property
    def faces(self) -> "FaceSet":
        if self._faces is None:
            self._faces = trace_faces(self)
        return self._faces

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def as_dict(self) -> dict[int, list[int]]:
        return {v: list(r) for v, r in enumerate(self.rotations)}

    def __eq__(self, other):
        return isinstance(other, PlaneGraph) and self.rotations == other.rotations

    def __hash__(self):
        return hash(self.rotations)

    def __repr__(self):
        return f"PlaneGraph(n={self.n}, edges={self.num_edges})"


@dataclass(frozen=True)
class Face:
    """One face: its dart walk and the tails of those darts."""

    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[Face, ...]
    dart_to_face: tuple[int, ...]

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def __getitem__(self, i):
        return self.faces[i]

    def sizes(self) -> list[int]:
        return [f.size for f in self.faces]


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    cut_vertices: frozenset
    bridges: frozenset
    blocks: tuple
    min_degree: int
    max_degree: int


# construction


def _normalize(rotations) -> list[list[int]]:
    if isinstance(rotations, Mapping):
        n = len(rotations)
        if set(rotations) != set(range(n)):
            raise AsymmetricInput("vertex ids must be 0..n-1")
        return [list(rotations[v]) for v in range(n)]
    return [list(r) for r in rotations]


def _euler_faces(rot: list[list[int]]) -> int:
    off = [0]
    for r in rot:
        off.append(off[-1] + len(r))
    pos = [{u: i for i, u in enumerate(r)} for r in rot]
    seen = [False] * off[-1]
    faces = 0
    for v, r in enumerate(rot):
        for i in range(len(r)):
            d = off[v] + i
            if seen[d]:
                continue
            faces += 1
            x, j = v, i
            while not seen[off[x] + j]:
                seen[off[x] + j] = True
                u = rot[x][j]
                j = (pos[u][x] + 1) % len(rot[u])
                x = u
    return faces


def build(rotations: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]) -> PlaneGraph:
    """Validate per-vertex cyclic neighbour lists and return a PlaneGraph.

    Raises:
        NotSimple: a loop or a repeated neighbour.
        AsymmetricInput: ``u`` lists ``v`` but ``v`` does not list ``u``.
        NotConnected: empty rotation or more than one component.
        NotPlanar: the rotation system does not have Euler genus 0.
    """
    rot = _normalize(rotations)
    n = len(rot)
    if n == 0:
        raise NotConnected("empty graph")
    for v, r in enumerate(rot):
        for u in r:
            if not isinstance(u, int) or not 0 <= u < n:
                raise AsymmetricInput(f"vertex {v} lists unknown vertex {u!r}")
            if u == v:
                raise NotSimple(f"loop at vertex {v}")
        if len(set(r)) != len(r):
            raise NotSimple(f"parallel edges at vertex {v}")
    for v, r in enumerate(rot):
        for u in r:
            if v not in rot[u]:
                raise AsymmetricInput(f"{v} lists {u} but not conversely")
    for v, r in enumerate(rot):
        if not r:
            raise NotConnected(f"vertex {v} is isolated")
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for u in rot[x]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != n:
        raise NotConnected(f"{n - len(seen)} vertices unreachable from 0")
    e = sum(len(r) for r in rot) // 2
    f = _euler_faces(rot)
    if n - e + f != 2:
        raise NotPlanar(f"V - E + F = {n - e + f}")
    return PlaneGraph(tuple(tuple(r) for r in rot))


def from_faces(faces: Iterable[Sequence[int]], n: int | None = None) -> PlaneGraph:
    """Build a plane graph from its face boundaries.

    Every face is a cyclic vertex sequence and every directed edge must occur
    in exactly one face, i.e. all faces are oriented consistently.  For a
    face passing ``a, v, b`` the rotation at ``v`` has ``b`` right after ``a``.
    """
    succ: dict[int, dict[int, int]] = {}
    for face in faces:
        face = list(face)
        m = len(face)
        for i in range(m):
            a, v, b = face[i - 1], face[i], face[(i + 1) % m]
            s = succ.setdefault(v, {})
            if a in s:
                raise AsymmetricInput(f"directed edge {a}->{v} used twice")
            s[a] = b
    if n is None:
        n = max(succ) + 1
    rot = []
    for v in range(n):
        s = succ.get(v, {})
        if not s:
            rot.append([])
            continue
        start = min(s)
        cyc = [start]
        x = s[start]
        while x != start:
            cyc.append(x)
            if len(cyc) > len(s):
                raise NotPlanar(f"rotation at {v} is not a single cycle")
            x = s[x]
        if len(cyc) != len(s):
            raise NotPlanar(f"rotation at {v} is not a single cycle")
        rot.append(cyc)
    return build(rot)


# faces and structure


def trace_faces(g: PlaneGraph) -> FaceSet:
    """Faces as orbits of the face successor, in order of their least dart."""
    nd = g.num_darts
    alpha = g.alpha_array()
    sigma = g.sigma_array()
    vof = g.vertex_of()
    d2f = [-1] * nd
    faces = []
    for d in range(nd):
        if d2f[d] >= 0:
            continue
        walk = []
        x = d
        while d2f[x] < 0:
            d2f[x] = len(faces)
            walk.append(x)
            x = sigma[alpha[x]]
        faces.append(Face(tuple(walk), tuple(vof[y] for y in walk)))
    return FaceSet(tuple(faces), tuple(d2f))


def structure(g: PlaneGraph) -> StructureReport:
    """Cut vertices, bridges and blocks of the underlying graph."""
    G = g.to_networkx()
    degs = g.degrees()
    blocks = sorted((frozenset(b) for b in nx.biconnected_components(G)),
                    key=lambda b: (len(b) < 3, sorted(b)))
    return StructureReport(
        connected=nx.is_connected(G),
        cut_vertices=frozenset(nx.articulation_points(G)),
        bridges=frozenset(tuple(sorted(e)) for e in nx.bridges(G)),
        blocks=tuple(blocks),
        min_degree=min(degs),
        max_degree=max(degs),
    )


def is_two_connected(g: PlaneGraph) -> bool:
    if g.n < 3:
        return False
    return nx.is_biconnected(g.to_networkx())


# canonical form and isomorphism


def code_sequence(g: PlaneGraph) -> list[int]:
    """Canonical code as a list of small integers."""
    return core.canonical_code(g.off, g.nbr, g.rev)


def encode_code(seq: Sequence[int]) -> bytes:
    return struct.pack(f">{len(seq)}H", *seq)


def decode_code(code: bytes) -> list[int]:
    return list(struct.unpack(f">{len(code) // 2}H", code))


def canonical_code(g: PlaneGraph) -> CanonicalCode:
    """Byte string equal for two graphs iff they are embedding-isomorphic,
    with mirror images identified."""
    if g._code is None:
        g._code = encode_code(code_sequence(g))
    return g._code


def graph_from_code(code: CanonicalCode | Sequence[int]) -> PlaneGraph:
    """Rebuild the graph whose canonical traversal produced ``code``."""
    seq = decode_code(code) if isinstance(code, (bytes, bytearray)) else list(code)
    n = seq[0]
    rot, cur = [], []
    for x in seq[1:]:
        if x == 0:
            rot.append(cur)
            cur = []
        else:
            cur.append(x - 1)
    if len(rot) != n:
        raise RotSyntaxError("code does not describe n vertex lists")
    return build(rot)


def are_isomorphic(g: PlaneGraph, h: PlaneGraph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g) == canonical_code(h)


def are_isomorphic_abstract(g: PlaneGraph, h: PlaneGraph, limit: int = 16) -> bool:
    """Adjacency-preserving bijection search that ignores the embedding."""
    if g.n > limit or h.n > limit:
        raise TooLarge(f"abstract isomorphism limited to {limit} vertices")
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    gadj = [set(r) for r in g.rotations]
    hadj = [set(r) for r in h.rotations]
    # visit g's vertices so that each one after the first has a mapped neighbour
    order, seen = [], set()
    for s in range(n):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for x in queue:
            order.append(x)
            for u in g.rotations[x]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or len(hadj[w]) != len(gadj[v]):
                continue
            ok = True
            for u in gadj[v]:
                if image[u] >= 0 and image[u] not in hadj[w]:
                    ok = False
                    break
            if ok:
                for j in range(i):
                    u = order[j]
                    if u not in gadj[v] and image[u] in hadj[w]:
                        ok = False
                        break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            image[v] = -1
            used[w] = False
        return False

    return extend(0)


def mirror(g: PlaneGraph) -> PlaneGraph:
    """Reverse every rotation, keeping each list's first entry in place."""
    return PlaneGraph(tuple((r[0],) + tuple(reversed(r[1:])) if r else r
                            for r in g.rotations))


def relabel(g: PlaneGraph, perm: Sequence[int]) -> PlaneGraph:
    """Rename vertex ``v`` to ``perm[v]``."""
    n = g.n
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    rot = [None] * n
    for v, r in enumerate(g.rotations):
        rot[perm[v]] = tuple(perm[u] for u in r)
    return PlaneGraph(tuple(rot))


def rotate_lists(g: PlaneGraph, shifts: Sequence[int]) -> PlaneGraph:
    """Same embedding with each rotation list started at another entry."""
    return PlaneGraph(tuple(r[s % len(r):] + r[:s % len(r)]
                            for r, s in zip(g.rotations, shifts)))


# text format


def serialize(g: PlaneGraph) -> str:
    lines = [f"n {g.n}"]
    for v, r in enumerate(g.rotations):
        lines.append(f"v {v}: " + " ".join(map(str, r)) if r else f"v {v}:")
    return "\n".join(lines) + "\n"


def parse(text: str) -> PlaneGraph:
    """Read one graph in ``.rot`` format.  Blank and ``#`` lines are skipped."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise RotSyntaxError("empty input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise RotSyntaxError(f"bad header line {lines[0]!r}")
    n = int(head[1])
    if len(lines) != n + 1:
        raise RotSyntaxError(f"expected {n} vertex lines, got {len(lines) - 1}")
    rot = []
    for i, ln in enumerate(lines[1:]):
        left, sep, right = ln.partition(":")
        parts = left.split()
        if not sep or len(parts) != 2 or parts[0] != "v" or parts[1] != str(i):
            raise RotSyntaxError(f"bad vertex line {ln!r}")
        try:
            rot.append([int(x) for x in right.split()])
        except ValueError:
            raise RotSyntaxError(f"bad neighbour in {ln!r}") from None
    return build(rot)


def parse_many(text: str) -> list[PlaneGraph]:
    """Read graphs separated by blank lines."""
    out, block = [], []
    for ln in text.splitlines() + [""]:
        if ln.strip():
            block.append(ln)
        elif any(not b.lstrip().startswith("#") for b in block):
            out.append(parse("\n".join(block)))
            block = []
        else:
            block = []
    return out
