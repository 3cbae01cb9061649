"""Cut-and-paste operations on plane graphs.

Surgery works on :class:`MarkedGraph`, a dart-level map that tolerates loops
and parallel edges while an operation is half done.  Every public operation
returns a new value; :meth:`MarkedGraph.finalize` turns the result back into
a validated :class:`~nearplatonic.planegraph.PlaneGraph`.

Two dart primitives carry most of the work.  ``splice(a, b)`` swaps the
rotation successors of darts ``a`` and ``b``: it merges two vertices when the
corners after ``a`` and ``b`` lie on one face, and splits a vertex when they
lie on two different faces.  ``insert_edge(a, b)`` adds an edge whose ends sit
in the corners right after ``a`` and ``b``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import (
    Adjacent,
    AlreadyAdjacent,
    BridgeCut,
    Disconnects,
    EmptyArc,
    GraphError,
    IncompatibleMarks,
    NotBarrelStructured,
    NotConnected,
    NotOnBoundary,
    NotOnCommonFace,
    NotOnFace,
    NotPlanar,
    NotSimple,
    NotSimpleAfterGlue,
    TooSmall,
    WrongSpan,
)
from .planegraph import PlaneGraph, build, structure

DEAD = -1


@dataclass(frozen=True)
class MarkedGraph:
    """Relaxed combinatorial map with named dart anchors.

    ``alpha[d] == DEAD`` marks a deleted dart.  ``vof`` carries a vertex label
    per dart; labels survive surgery so callers can keep addressing vertices
    by the ids they started with.
    """

    alpha: tuple
    sigma: tuple
    vof: tuple
    marks: Mapping[str, int] = field(default_factory=dict)

    @classmethod
    def from_plane(cls, g: PlaneGraph, marks: Mapping[str, int] | None = None):
        return cls(tuple(g.alpha_array()), tuple(g.sigma_array()), g.vof,
                   dict(marks or {}))

    # read-only views
    def live(self) -> list[int]:
        return [d for d, a in enumerate(self.alpha) if a != DEAD]

    def sigma_inv(self, d: int) -> int:
        x = d
        while self.sigma[x] != d:
            x = self.sigma[x]
        return x

    def face_next(self, d: int) -> int:
        return self.sigma[self.alpha[d]]

    def head(self, d: int) -> int:
        return self.vof[self.alpha[d]]

    def rotation(self, v: int) -> list[int]:
        """Darts around vertex label ``v``, starting at the smallest id."""
        darts = [d for d in self.live() if self.vof[d] == v]
        if not darts:
            raise KeyError(v)
        start = min(darts)
        out = [start]
        x = self.sigma[start]
        while x != start:
            out.append(x)
            x = self.sigma[x]
        return out

    def vertices(self) -> list[int]:
        return sorted({self.vof[d] for d in self.live()})

    def degree(self, v: int) -> int:
        return sum(1 for d in self.live() if self.vof[d] == v)

    def faces(self) -> list[list[int]]:
        """Face walks as dart lists, ordered by their smallest dart."""
        seen = set()
        out = []
        for d in self.live():
            if d in seen:
                continue
            walk = []
            x = d
            while x not in seen:
                seen.add(x)
                walk.append(x)
                x = self.face_next(x)
            out.append(walk)
        return out

    def face_vertices(self, face: Sequence[int]) -> list[int]:
        return [self.vof[d] for d in face]

    def face_of(self, d: int) -> list[int]:
        walk = [d]
        x = self.face_next(d)
        while x != d:
            walk.append(x)
            x = self.face_next(x)
        return walk

    def dart_between(self, u: int, v: int) -> int:
        for d in self.live():
            if self.vof[d] == u and self.head(d) == v:
                return d
        raise KeyError((u, v))

    def adjacent(self, u: int, v: int) -> bool:
        return any(self.vof[d] == u and self.head(d) == v for d in self.live())

    def is_connected(self) -> bool:
        live = self.live()
        if not live:
            return False
        seen = {live[0]}
        stack = [live[0]]
        while stack:
            d = stack.pop()
            for x in (self.alpha[d], self.sigma[d]):
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return len(seen) == len(live)

    def euler_char(self) -> int:
        live = self.live()
        nv = 0
        seen = set()
        for d in live:
            if d in seen:
                continue
            nv += 1
            x = d
            while x not in seen:
                seen.add(x)
                x = self.sigma[x]
        return nv - len(live) // 2 + len(self.faces())

    def finalize(self) -> PlaneGraph:
        """Check simplicity, connectivity and genus 0; compact vertex ids."""
        live = self.live()
        if not self.is_connected():
            raise NotConnected("surgery result is disconnected")
        if self.euler_char() != 2:
            raise NotPlanar("surgery result is not a plane map")
        labels = self.vertices()
        index = {v: i for i, v in enumerate(labels)}
        rot = [[] for _ in labels]
        seen = set()
        for d in live:
            if d in seen:
                continue
            v = self.vof[d]
            if rot[index[v]]:
                raise NotSimple(f"vertex label {v} names two vertices")
            x = d
            while x not in seen:
                if self.vof[x] != v:
                    raise NotSimple(f"vertex label clash at dart {x}")
                seen.add(x)
                rot[index[v]].append(index[self.head(x)])
                x = self.sigma[x]
        return build(rot)

    def _edit(self) -> "_Edit":
        return _Edit(list(self.alpha), list(self.sigma), list(self.vof), dict(self.marks))


class _Edit:
    """Mutable scratch copy used inside one operation."""

    def __init__(self, alpha, sigma, vof, marks):
        self.alpha = alpha
        self.sigma = sigma
        self.vof = vof
        self.marks = marks

    def freeze(self) -> MarkedGraph:
        return MarkedGraph(tuple(self.alpha), tuple(self.sigma), tuple(self.vof),
                           dict(self.marks))

    def sigma_inv(self, d):
        x = d
        while self.sigma[x] != d:
            x = self.sigma[x]
        return x

    def orbit(self, d):
        out = [d]
        x = self.sigma[d]
        while x != d:
            out.append(x)
            x = self.sigma[x]
        return out

    def fresh_label(self):
        return max(v for v, a in zip(self.vof, self.alpha) if a != DEAD) + 1

    def splice(self, a, b, label=None):
        """Swap successors of ``a`` and ``b`` and fix up vertex labels."""
        merging = b not in self.orbit(a)
        self.sigma[a], self.sigma[b] = self.sigma[b], self.sigma[a]
        if merging:
            keep = self.vof[a]
            for x in self.orbit(a):
                self.vof[x] = keep
        else:
            new = self.fresh_label() if label is None else label
            for x in self.orbit(b):
                self.vof[x] = new

    def insert_edge(self, a, b):
        """New edge with ends right after darts ``a`` and ``b``; returns the
        new dart at ``a``'s vertex."""
        s = len(self.alpha)
        t = s + 1
        self.alpha += [t, s]
        self.sigma += [self.sigma[a], self.sigma[b] if a != b else s]
        self.vof += [self.vof[a], self.vof[b]]
        if a == b:
            # both ends in the same corner: a loop
            self.sigma[t] = self.sigma[s]
            self.sigma[s] = t
            self.sigma[a] = s
        else:
            self.sigma[a] = s
            self.sigma[b] = t
        return s

    def delete_edge(self, d):
        for x in (d, self.alpha[d]):
            p = self.sigma_inv(x)
            self.sigma[p] = self.sigma[x]
        e = self.alpha[d]
        for x in (d, e):
            self.alpha[x] = DEAD
            self.sigma[x] = x

    def double_edge(self, d):
        """Add a parallel copy of edge ``d`` forming a 2-face with it; return
        the new dart that leaves ``d``'s tail."""
        r = self.alpha[d]
        p_before = self.sigma_inv(d)
        p = self.insert_edge(p_before, r)
        return p


def _as_marked(g) -> MarkedGraph:
    if isinstance(g, MarkedGraph):
        return g
    if isinstance(g, PlaneGraph):
        return MarkedGraph.from_plane(g)
    raise TypeError(f"expected a PlaneGraph or MarkedGraph, got {type(g).__name__}")


def _check_plane(e: _Edit, err=Disconnects) -> MarkedGraph:
    mg = e.freeze()
    if not mg.is_connected():
        raise err("operation disconnects the graph")
    if mg.euler_char() != 2:
        raise NotPlanar("operation leaves the plane")
    return mg


def _corner_in_face(mg: MarkedGraph, face: Sequence[int], v: int) -> int:
    """Dart ``a`` at ``v`` whose following corner lies in ``face``."""
    for d in face:
        if mg.head(d) == v:
            return mg.alpha[d]
    raise NotOnFace(f"vertex {v} is not on the face")


def _resolve_face(mg: MarkedGraph, face) -> list[int]:
    faces = mg.faces()
    if face is None:
        if "outer" in mg.marks:
            return mg.face_of(mg.marks["outer"])
        return max(faces, key=len)
    if isinstance(face, int):
        return faces[face]
    return list(face)


# vertex splitting and amalgamation


def split_vertex(g, z: int, split) -> MarkedGraph:
    """Split ``z`` into two vertices owning contiguous arcs of its rotation.

    ``split`` is either an int ``j`` (the first ``j`` neighbours, in rotation
    order, go to ``z`` and the rest to a new vertex) or a pair of neighbour
    lists.  The new vertex gets the next unused label.  Marks ``x`` and ``y``
    hold the last dart of each arc.
    """
    mg = _as_marked(g)
    darts = mg.rotation(z)
    k = len(darts)
    heads = [mg.head(d) for d in darts]
    if isinstance(split, int):
        j = split
        arc_x = list(range(j))
        start = 0
    else:
        first, second = list(split[0]), list(split[1])
        if not first or not second:
            raise EmptyArc("both arcs must be nonempty")
        if sorted(first + second) != sorted(heads) or len(set(heads)) != k:
            raise ValueError("arcs must partition the rotation of z")
        start = heads.index(first[0])
        j = len(first)
        arc_x = [(start + i) % k for i in range(j)]
        if [heads[i] for i in arc_x] != first:
            raise ValueError("first arc is not contiguous in rotation order")
        rest = [heads[(start + j + i) % k] for i in range(k - j)]
        if rest != second:
            raise ValueError("second arc is not contiguous in rotation order")
    if j <= 0 or j >= k:
        raise EmptyArc("both arcs must be nonempty")
    last_x = darts[arc_x[-1]]
    last_y = darts[(start - 1) % k]
    e = mg._edit()
    e.splice(last_x, last_y)
    e.marks["x"] = last_x
    e.marks["y"] = last_y
    return _check_plane(e)


def amalgamate_vertices(g, x: int, y: int, face=None) -> MarkedGraph:
    """Merge ``x`` and ``y`` across a face they share.

    The merged vertex keeps label ``x``; its rotation is ``x``'s rotation read
    from the dart after the shared corner, followed by ``y``'s read the same
    way.  With several shared faces the first one is used unless ``face``
    (an index into :meth:`MarkedGraph.faces`) says otherwise.
    """
    mg = _as_marked(g)
    if x == y:
        raise ValueError("cannot amalgamate a vertex with itself")
    if mg.adjacent(x, y):
        raise Adjacent(f"{x} and {y} are adjacent")
    faces = mg.faces()
    if face is not None:
        candidates = [faces[face]]
    else:
        candidates = faces
    for f in candidates:
        vs = mg.face_vertices(f)
        if x in vs and y in vs:
            a = _corner_in_face(mg, f, x)
            b = _corner_in_face(mg, f, y)
            e = mg._edit()
            e.splice(a, b)
            return _check_plane(e)
    raise NotOnCommonFace(f"{x} and {y} share no face")


# chords and relocation


def add_chord(b, u: int, v: int, inside=None) -> MarkedGraph:
    """Join ``u`` and ``v`` by a new edge drawn inside a face.

    ``inside`` is a face index (default: the ``outer`` mark or the largest
    face).  The face splits into two whose sizes sum to its size plus two.
    """
    mg = _as_marked(b)
    face = _resolve_face(mg, inside)
    vs = mg.face_vertices(face)
    for w in (u, v):
        if w not in vs:
            raise NotOnFace(f"vertex {w} is not on the face")
    if u == v or mg.adjacent(u, v):
        raise AlreadyAdjacent(f"{u} and {v} are already adjacent")
    a = _corner_in_face(mg, face, u)
    c = _corner_in_face(mg, face, v)
    e = mg._edit()
    e.insert_edge(a, c)
    return _check_plane(e)


def relocate_boundary_edge(b, remove: tuple[int, int], attach_at: int,
                           outer=None, d: int | None = None) -> MarkedGraph:
    """Replace boundary edge ``p q`` by ``attach_at p``.

    ``attach_at`` must sit ``d - 1`` steps before ``p`` along the outer face,
    with ``q`` right after ``p``, so the new edge closes an inner ``d``-face.
    ``d`` defaults to the most common inner face size.  Afterwards
    ``attach_at`` has one more edge and ``q`` one fewer.
    """
    mg = _as_marked(b)
    face = _resolve_face(mg, outer)
    p, q = remove
    a = attach_at
    fv = mg.face_vertices(face)
    if a not in fv:
        raise NotOnBoundary(f"vertex {a} is not on the outer face")
    pq = [i for i, dt in enumerate(face) if mg.vof[dt] == p and mg.head(dt) == q]
    qp = [i for i, dt in enumerate(face) if mg.vof[dt] == q and mg.head(dt) == p]
    if not pq and not qp:
        raise NotOnBoundary(f"edge {p}-{q} is not on the outer face")
    if d is None:
        others = [len(f) for f in mg.faces() if set(f) != set(face)]
        if not others:
            raise WrongSpan("no inner faces to take the size from")
        d = Counter(others).most_common(1)[0][0]
    m = len(face)
    e = mg._edit()
    done = False
    for i in pq:
        # forward: a = x0, ..., x_{d-1} = p, x_d = q
        j = (i - (d - 1)) % m
        if fv[j] == a and d - 1 < m:
            w_prev = face[(j - 1) % m]
            w_last = face[(i - 1) % m]
            corner_a = mg.alpha[w_prev]
            corner_p = mg.alpha[w_last]
            e.delete_edge(face[i])
            e.insert_edge(corner_a, corner_p)
            done = True
            break
    if not done:
        for i in qp:
            # backward: q -> p -> x_{d-2} -> ... -> a
            j = (i + d) % m
            if fv[j] == a and d - 1 < m:
                out_p = face[(i + 1) % m]
                a_to_x1 = mg.alpha[face[(j - 1) % m]]
                e.delete_edge(face[i])
                corner_p = e.sigma_inv(out_p)
                e.insert_edge(a_to_x1, corner_p)
                done = True
                break
    if not done:
        raise WrongSpan(f"{a} is not {d - 1} boundary steps before {p}")
    if not any(e.alpha[x] != DEAD and e.vof[x] == q for x in range(len(e.alpha))):
        raise Disconnects(f"vertex {q} would be isolated")
    res = e.freeze()
    if not res.is_connected():
        raise Disconnects("relocation disconnects the graph")
    if res.euler_char() != 2:
        raise WrongSpan("relocation does not close a face")
    if res.adjacent(a, a):
        raise WrongSpan("relocation creates a loop")
    return res


def remove_edge(g, edge: tuple[int, int]) -> MarkedGraph:
    """Delete edge ``u v``, merging its two faces.  A solid minus an edge is
    the usual way to get a block."""
    mg = _as_marked(g)
    d = mg.dart_between(*edge)
    e = mg._edit()
    e.delete_edge(d)
    return _check_plane(e)


# cutting and gluing


def cut_edge(g, edge: tuple[int, int]) -> MarkedGraph:
    """Double a non-bridge edge into two parallel copies bounding a 2-face.

    Marks: ``left`` is the original dart ``u -> v``, ``right`` the copy.
    """
    mg = _as_marked(g)
    u, v = edge
    if isinstance(g, PlaneGraph):
        if tuple(sorted(edge)) in structure(g).bridges:
            raise BridgeCut(f"edge {u}-{v} is a bridge")
    d = mg.dart_between(u, v)
    e = mg._edit()
    p = e.double_edge(d)
    e.marks["left"] = d
    e.marks["right"] = p
    res = e.freeze()
    if len(res.faces()) - len(mg.faces()) != 1:  # a bridge gives no new face
        raise BridgeCut(f"edge {u}-{v} is a bridge")
    return res


def cut_strip(g, edge: tuple[int, int], face_u, face_v) -> MarkedGraph:
    """Cut a plane graph open along one edge into a strip.

    The edge ``u v`` is doubled, then ``u`` is split between the new 2-face
    and ``face_u`` and ``v`` between the merged face and ``face_v``.  The
    strip keeps the marks ``left``/``right`` (the two edge copies) and
    ``x_anchor``/``y_anchor`` (the corners used to re-glue).  Faces are given
    as face indices of ``g``.
    """
    mg = _as_marked(g)
    u, v = edge
    faces = mg.faces()
    fu = faces[face_u] if isinstance(face_u, int) else list(face_u)
    fv = faces[face_v] if isinstance(face_v, int) else list(face_v)
    cu = _corner_in_face(mg, fu, u)
    cv = _corner_in_face(mg, fv, v)
    s = cut_edge(g, edge)
    d = s.marks["left"]
    p = s.marks["right"]
    e = s._edit()
    e.splice(p, cu)
    e.splice(e.alpha[d], cv)
    e.marks["x_anchor"] = cu
    e.marks["y_anchor"] = cv
    return _check_plane(e, err=Disconnects)


def _disjoint_copies(mg: MarkedGraph, c: int) -> _Edit:
    nd = len(mg.alpha)
    nv = max(mg.vof[d] for d in mg.live()) + 1
    alpha, sigma, vof = [], [], []
    for i in range(c):
        o = i * nd
        alpha += [a + o if a != DEAD else DEAD for a in mg.alpha]
        sigma += [s + o for s in mg.sigma]
        vof += [v + i * nv for v in mg.vof]
    return _Edit(alpha, sigma, vof, {})


def glue_cyclic_copies(strip: MarkedGraph, c: int) -> PlaneGraph:
    """Glue ``c`` copies of a strip in a ring, right edge of copy ``i`` onto
    the left edge of copy ``i + 1``.

    A strip made by :func:`cut_edge` alone can only be closed up with
    ``c = 1``; one made by :func:`cut_strip` accepts any ``c >= 1``.
    """
    if c < 1:
        raise ValueError("need at least one copy")
    marks = strip.marks
    if "left" not in marks or "right" not in marks:
        raise IncompatibleMarks("strip needs 'left' and 'right' marks")
    left, right = marks["left"], marks["right"]
    if strip.alpha[left] == DEAD or strip.alpha[right] == DEAD:
        raise IncompatibleMarks("marks point at deleted darts")
    anchored = "x_anchor" in marks and "y_anchor" in marks
    if not anchored:
        if c != 1:
            raise IncompatibleMarks("an unsplit cut can only be closed with c = 1")
        if {strip.vof[left], strip.head(left)} != {strip.vof[right], strip.head(right)}:
            raise IncompatibleMarks("left and right are not parallel")
        e = strip._edit()
        e.delete_edge(right)
        mg = e.freeze()
    else:
        nd = len(strip.alpha)
        e = _disjoint_copies(strip, c)
        for i in range(c):
            j = (i + 1) % c
            e.splice(right + i * nd, marks["x_anchor"] + j * nd)
            e.splice(e.alpha[left + j * nd], marks["y_anchor"] + i * nd)
        for i in range(c):
            e.delete_edge(right + i * nd)
        mg = e.freeze()
    try:
        return mg.finalize()
    except NotSimple as exc:
        raise NotSimpleAfterGlue(str(exc)) from None
    except (NotPlanar, NotConnected) as exc:
        raise IncompatibleMarks(f"gluing fails: {exc}") from None


# the (3|5) distance-3 pair


def _exceptional_pair(g: PlaneGraph, k: int, d: int):
    from .classify import classify_nearly_platonic, face_distance

    try:
        rep = classify_nearly_platonic(g)
    except GraphError as exc:
        raise NotBarrelStructured(str(exc)) from None
    faces = g.faces
    if (rep.k, rep.d, rep.t) == (k, d, 0):
        # the solid itself: any two faces at distance 3 play the exceptional pair
        for f1 in range(len(faces)):
            for f2 in range(f1 + 1, len(faces)):
                if face_distance(g, f1, f2) == 3:
                    return f1, f2
        raise NotBarrelStructured("no two faces at distance 3")
    if (rep.k, rep.d, rep.t) != (k, d, 2):
        raise NotBarrelStructured(f"need a ({k}|{d}) graph with two exceptional faces")
    f1, f2 = (fid for fid, _ in rep.exceptional)
    if set(faces[f1].vertices) & set(faces[f2].vertices):
        raise NotBarrelStructured("exceptional faces touch")
    if face_distance(g, f1, f2) != 3:
        raise NotBarrelStructured("exceptional faces are not at distance 3")
    return f1, f2


def reduce_35_l3(g: PlaneGraph) -> PlaneGraph:
    """Remove one band of two pentagons between the exceptional faces.

    The pentagons ``x_n x1 v1 v2 w2`` and ``v1 w1 y2 y1 v2`` are dropped by
    deleting the rungs ``x_n x1``, ``v1 v2``, ``y1 y2`` and zipping the
    paths ``x1 v1 w1 y2`` and ``x_n w2 v2 y1`` together.  Both exceptional
    faces shrink by one.
    """
    f1, f2 = _exceptional_pair(g, 3, 5)
    faces = g.faces
    if faces[f1].size <= 3 or faces[f2].size <= 3:
        raise TooSmall("exceptional faces are already triangles")
    on1 = set(faces[f1].vertices)
    on2 = set(faces[f2].vertices)
    d2f = faces.dart_to_face
    for a, b in g.edges():
        if {a, b} & (on1 | on2):
            continue
        for v1, v2 in ((a, b), (b, a)):
            for x in (g.dart(v1, v2), g.dart(v2, v1)):
                A = faces[d2f[x]]
                B = faces[d2f[g.alpha(x)]]
                band = _band(A, B, v1, v2, on1, on2)
                if band is not None:
                    return _zip_band(g, band)
    raise NotBarrelStructured("no removable band of two pentagons")


def _other(face, v, not_this):
    vs = face.vertices
    i = vs.index(v)
    for u in (vs[i - 1], vs[(i + 1) % len(vs)]):
        if u != not_this:
            return u
    return None


def _band(A, B, v1, v2, on1, on2):
    if A.size != 5 or B.size != 5:
        return None
    if len(set(A.vertices)) != 5 or len(set(B.vertices)) != 5:
        return None
    x1 = _other(A, v1, v2)
    w2 = _other(A, v2, v1)
    if x1 not in on1 or w2 in on1 | on2:
        return None
    xn = _other(A, x1, v1)
    w1 = _other(B, v1, v2)
    y1 = _other(B, v2, v1)
    if y1 not in on2 or w1 in on1 | on2 or xn not in on1:
        return None
    y2 = _other(B, y1, v2)
    if y2 not in on2:
        return None
    return (x1, v1, w1, y2), (xn, w2, v2, y1)


def _zip_band(g: PlaneGraph, band) -> PlaneGraph:
    p1, p2 = band
    mg = MarkedGraph.from_plane(g)
    e = mg._edit()
    for s, t in ((p1[0], p2[0]), (p1[1], p2[2]), (p1[3], p2[3])):
        e.delete_edge(g.dart(s, t))
    mg = e.freeze()
    # the merged face runs forward along one path and backward along the other
    fwd1 = [g.dart(p1[i], p1[i + 1]) for i in range(3)]
    fwd2 = [g.dart(p2[i], p2[i + 1]) for i in range(3)]
    big = set(max(mg.faces(), key=len))
    if all(x in big for x in fwd1):
        left, right = fwd1, fwd2
    else:
        left, right = fwd2, fwd1
    if not all(mg.alpha[x] in big for x in right) or not all(x in big for x in left):
        raise NotBarrelStructured("paths do not bound a common face")
    pairs = [(right[0], mg.sigma_inv(left[0]))]
    pairs += [(mg.alpha[left[j]], right[j + 1]) for j in range(2)]
    pairs.append((mg.alpha[left[2]], mg.sigma_inv(mg.alpha[right[2]])))
    e = mg._edit()
    for a, b in pairs:
        e.splice(a, b)
    for x in right:
        e.delete_edge(x)
    res = e.freeze()
    if res.euler_char() != 2:
        raise NotBarrelStructured("zipping failed")
    return res.finalize()


def expand_35_l3(g: PlaneGraph) -> PlaneGraph:
    """Insert one band of two pentagons along a shortest path between the
    exceptional faces; both exceptional faces grow by one."""
    f1, f2 = _exceptional_pair(g, 3, 5)
    faces = g.faces
    on1 = set(faces[f1].vertices)
    on2 = set(faces[f2].vertices)
    for x0 in sorted(on1):
        for v in g.neighbors(x0):
            if v in on1:
                continue
            for w in g.neighbors(v):
                if w == x0 or w in on1 or w in on2:
                    continue
                for y in g.neighbors(w):
                    if y in on2:
                        try:
                            return _unzip_path(g, [x0, v, w, y], f1, f2)
                        except NotBarrelStructured:
                            continue
    raise NotBarrelStructured("no path of length 3 between the exceptional faces")


def _unzip_path(g: PlaneGraph, path, f1: int, f2: int) -> PlaneGraph:
    mg = MarkedGraph.from_plane(g)
    faces = mg.faces()
    c0 = _corner_in_face(mg, faces[f1], path[0])
    cm = _corner_in_face(mg, faces[f2], path[-1])
    darts = [g.dart(path[i], path[i + 1]) for i in range(3)]
    e = mg._edit()
    copies = [e.double_edge(d) for d in darts]
    e.splice(copies[0], c0)
    for j in range(2):
        e.splice(e.alpha[darts[j]], copies[j + 1])
    e.splice(e.alpha[darts[2]], cm)
    # rungs across F1 and F2
    e.insert_edge(c0, copies[0])
    e.insert_edge(e.alpha[darts[2]], cm)
    # the diagonal joins the two copies left with only two edges
    def deg(dart):
        return len(e.orbit(dart))

    v_left, w_left = darts[1], darts[2]           # copies on the left side
    v_right, w_right = copies[1], copies[2]      # copies on the right side
    if deg(v_left) == 2 and deg(w_right) == 2:
        e.insert_edge(e.alpha[darts[0]], copies[2])
    elif deg(w_left) == 2 and deg(v_right) == 2:
        e.insert_edge(e.alpha[darts[1]], copies[1])
    else:
        raise NotBarrelStructured("third neighbours lie on the same side of the path")
    res = e.freeze()
    if res.euler_char() != 2:
        raise NotBarrelStructured("band insertion failed")
    return res.finalize()
