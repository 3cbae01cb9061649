"""Generators for the Platonic solids and the fourteen 2-nearly Platonic
families.

Every family member is built from a solid by surgery or written down face by
face.  Parameters at which a construction collapses back to a Platonic solid
are allowed and reported by :attr:`FamilyInstance.degenerate`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .classify import NPType
from .errors import ParamTooSmall, UnsupportedSolid
from .planegraph import PlaneGraph, build, canonical_code, from_faces
from .surgery import MarkedGraph, _disjoint_copies, cut_strip, glue_cyclic_copies


class Solid(enum.Enum):
    Tetrahedron = "Tetrahedron"
    Cube = "Cube"
    Octahedron = "Octahedron"
    Dodecahedron = "Dodecahedron"
    Icosahedron = "Icosahedron"


class FamilyId(enum.Enum):
    TetrahedronEdgeCycle = "TetrahedronEdgeCycle"
    CubeEdgeCycle = "CubeEdgeCycle"
    Prism = "Prism"
    DodecahedronEdgeCycle = "DodecahedronEdgeCycle"
    Barrel = "Barrel"
    DodecahedronThickCycle = "DodecahedronThickCycle"
    OctahedronEdgeCycle = "OctahedronEdgeCycle"
    OctahedronVertexCycle = "OctahedronVertexCycle"
    Antiprism = "Antiprism"
    IcosahedronEdgeCycle = "IcosahedronEdgeCycle"
    IcosahedronVertexCycle = "IcosahedronVertexCycle"
    IcosahedronWideCycle = "IcosahedronWideCycle"
    IcosahedronFirstThickCycle = "IcosahedronFirstThickCycle"
    IcosahedronSecondThickCycle = "IcosahedronSecondThickCycle"


SOLID_TYPE = {
    Solid.Tetrahedron: NPType(3, 3),
    Solid.Cube: NPType(3, 4),
    Solid.Dodecahedron: NPType(3, 5),
    Solid.Octahedron: NPType(4, 3),
    Solid.Icosahedron: NPType(5, 3),
}


# solids


def _octahedron() -> PlaneGraph:
    faces = []
    for i in range(4):
        a, b = 1 + i, 1 + (i + 1) % 4
        faces.append((0, a, b))
        faces.append((5, b, a))
    return from_faces(faces)


def _icosahedron() -> PlaneGraph:
    faces = []
    for i in range(5):
        u, u1 = 1 + i, 1 + (i + 1) % 5
        w, w1 = 6 + i, 6 + (i + 1) % 5
        faces += [(0, u, u1), (u, w, u1), (u1, w, w1), (11, w1, w)]
    return from_faces(faces)


def dual(g: PlaneGraph) -> PlaneGraph:
    """Face-vertex dual; dual vertex ``i`` is face ``i`` of ``g``."""
    faces = g.faces
    rot = []
    for face in faces:
        rot.append([faces.dart_to_face[g.alpha(dt)] for dt in face.darts])
    return build(rot)


@lru_cache(maxsize=None)
def platonic(s: Solid) -> PlaneGraph:
    s = Solid(s)
    if s is Solid.Tetrahedron:
        return build({0: [1, 2, 3], 1: [0, 3, 2], 2: [0, 1, 3], 3: [0, 2, 1]})
    if s is Solid.Octahedron:
        return _octahedron()
    if s is Solid.Icosahedron:
        return _icosahedron()
    if s is Solid.Cube:
        return dual(_octahedron())
    return dual(_icosahedron())


# rings written face by face


def _need(n: int, lo: int, what: str):
    if not isinstance(n, int) or n < lo:
        raise ParamTooSmall(f"{what} needs a parameter >= {lo}, got {n!r}")


def prism(n: int) -> PlaneGraph:
    _need(n, 3, "prism")
    x = list(range(n))
    y = [n + i for i in range(n)]
    faces = [(x[i], x[(i + 1) % n], y[(i + 1) % n], y[i]) for i in range(n)]
    faces += [tuple(y), tuple(reversed(x))]
    return from_faces(faces)


def antiprism(n: int) -> PlaneGraph:
    _need(n, 3, "antiprism")
    x = list(range(n))
    y = [n + i for i in range(n)]
    faces = []
    for i in range(n):
        j = (i + 1) % n
        faces += [(x[i], x[j], y[i]), (y[i], x[j], y[j])]
    faces += [tuple(y), tuple(reversed(x))]
    return from_faces(faces)


def barrel(n: int) -> PlaneGraph:
    """Outer n-cycle, middle 2n-cycle, inner n-cycle, all other faces
    pentagons."""
    _need(n, 3, "barrel")
    x = list(range(n))
    m = [n + j for j in range(2 * n)]
    y = [3 * n + i for i in range(n)]

    def mm(j):
        return m[j % (2 * n)]

    faces = []
    for i in range(n):
        j = (i + 1) % n
        faces.append((x[i], x[j], mm(2 * i + 2), mm(2 * i + 1), mm(2 * i)))
        faces.append((mm(2 * i + 1), mm(2 * i + 2), mm(2 * i + 3), y[j], y[i]))
    faces += [tuple(y), tuple(reversed(x))]
    return from_faces(faces)


def wide_cycle(n: int) -> PlaneGraph:
    """Two n-gons joined by a band of 6n triangles around a 2n-cycle."""
    _need(n, 3, "wide cycle")
    x = list(range(n))
    v = [n + i for i in range(n)]
    w = [2 * n + i for i in range(n)]
    y = [3 * n + i for i in range(n)]
    faces = []
    for i in range(n):
        j, p = (i + 1) % n, (i - 1) % n
        faces += [
            (x[i], x[j], w[i]), (x[i], w[i], v[i]), (x[i], v[i], w[p]),
            (v[i], w[i], y[i]), (w[i], v[j], y[i]), (v[i], y[i], y[p]),
        ]
    faces += [tuple(y), tuple(reversed(x))]
    return from_faces(faces)


# cycles of blocks


def edge_cycle(s: Solid, c: int) -> PlaneGraph:
    """``c`` copies of ``s`` minus the edge ``0 y``, where ``y`` is vertex 0's
    first neighbour; ``y`` of each copy is joined to ``0`` of the next in the
    rotation slots of the deleted edge."""
    s = Solid(s)
    _need(c, 1, "edge cycle")
    g = platonic(s)
    mg = MarkedGraph.from_plane(g)
    e = g.dart(0, g.neighbors(0)[0])
    r = g.alpha(e)
    nd = g.num_darts
    ed = _disjoint_copies(mg, c)
    for i in range(c):
        j = (i + 1) % c
        ed.alpha[r + i * nd] = e + j * nd
        ed.alpha[e + j * nd] = r + i * nd
    return ed.freeze().finalize()


VERTEX_SPLIT = {Solid.Octahedron: 2, Solid.Icosahedron: 3}


def vertex_cycle(s: Solid, c: int) -> PlaneGraph:
    """``c`` copies of ``s`` with vertex 0 split into two arcs, the larger
    half of copy ``i`` merged with the smaller half of copy ``i + 1``."""
    s = Solid(s)
    if s not in VERTEX_SPLIT:
        raise UnsupportedSolid(f"vertex cycles exist only for the octahedron and icosahedron, not {s.value}")
    _need(c, 1, "vertex cycle")
    g = platonic(s)
    j = VERTEX_SPLIT[s]
    darts = [g.dart(0, w) for w in g.neighbors(0)]
    last_x, last_y = darts[j - 1], darts[-1]
    mg = MarkedGraph.from_plane(g)
    e = mg._edit()
    e.splice(last_x, last_y)
    nd = g.num_darts
    ed = _disjoint_copies(e.freeze(), c)
    for i in range(c):
        k = (i + 1) % c
        ed.splice(last_x + i * nd, last_y + k * nd)
    return ed.freeze().finalize()


# thick cycles


THICK_SOLID = {
    FamilyId.DodecahedronThickCycle: Solid.Dodecahedron,
    FamilyId.IcosahedronFirstThickCycle: Solid.Icosahedron,
    FamilyId.IcosahedronSecondThickCycle: Solid.Icosahedron,
}


def _side_profile(g: PlaneGraph, u: int, v: int, face_u: int) -> str:
    """Where the neighbours of ``u`` off both ``face_u`` and edge ``uv`` sit
    relative to ``uv``: all on one side (``left``/``right``) or ``split``."""
    rot = list(g.neighbors(u))
    k = len(rot)
    i = rot.index(v)
    order = [rot[(i + s) % k] for s in range(1, k)]  # around u starting after v
    on_face = set(g.faces[face_u].vertices)
    free = [p for p, w in enumerate(order) if w not in on_face]
    half = (k - 1) / 2
    sides = {p < half for p in free}
    return "split" if len(sides) == 2 else ("left" if sides == {True} else "right")


def thick_configurations(s: Solid):
    """All (edge, face at its tail, face at its head) choices where the two
    faces are disjoint, labelled by how the free neighbours of each end
    sit relative to the edge."""
    g = platonic(s)
    faces = g.faces
    out = []
    for u, v in g.edges():
        for a, b in ((u, v), (v, u)):
            fa = [i for i, f in enumerate(faces) if a in f.vertices and b not in f.vertices]
            fb = [i for i, f in enumerate(faces) if b in f.vertices and a not in f.vertices]
            for i in fa:
                for j in fb:
                    if set(faces[i].vertices) & set(faces[j].vertices):
                        continue
                    pa = _side_profile(g, a, b, i)
                    pb = _side_profile(g, b, a, j)
                    out.append(((a, b), i, j, pa, pb))
    return out


def _thick_case(pa: str, pb: str) -> int:
    if pa == "split" and pb == "split":
        return 3
    if "split" in (pa, pb):
        return 2
    return 1


def _thick_choice(fid: FamilyId):
    s = THICK_SOLID[fid]
    want = 3 if fid is FamilyId.IcosahedronSecondThickCycle else 1
    for cfg in thick_configurations(s):
        if s is Solid.Dodecahedron or _thick_case(cfg[3], cfg[4]) == want:
            return cfg
    raise AssertionError("no configuration for thick cycle")


@lru_cache(maxsize=None)
def thick_strip(fid: FamilyId) -> MarkedGraph:
    (a, b), i, j, _, _ = _thick_choice(FamilyId(fid))
    g = platonic(THICK_SOLID[FamilyId(fid)])
    return cut_strip(g, (a, b), i, j)


def thick_cycle(fid: FamilyId, c: int) -> PlaneGraph:
    """Cut the solid along an edge joining two disjoint faces and close ``c``
    copies of the strip into a ring; ``c = 1`` gives the solid back."""
    fid = FamilyId(fid)
    if fid not in THICK_SOLID:
        raise UnsupportedSolid(f"{fid.value} is not a thick cycle")
    _need(c, 1, "thick cycle")
    return glue_cyclic_copies(thick_strip(fid), c)


# catalog


@dataclass(frozen=True)
class CatalogEntry:
    id: FamilyId
    np_type: NPType
    min_param: int
    degenerate: frozenset
    per_param: int  # |V| = per_param * param
    param_name: str

    @property
    def param_range(self) -> str:
        skip = ", ".join(str(p) for p in sorted(self.degenerate))
        return f"{self.param_name} >= {self.min_param}" + (f" ({skip} gives a solid)" if skip else "")

    @property
    def order_formula(self) -> str:
        return f"|V| = {self.per_param}{self.param_name}"

    def order(self, param: int) -> int:
        return self.per_param * param


@dataclass(frozen=True)
class FamilyInstance:
    id: FamilyId
    param: int

    @property
    def degenerate(self) -> bool:
        return self.param in ENTRY[self.id].degenerate

    def __str__(self):
        return f"{self.id.value}({self.param})"


_F = FamilyId
_T33, _T34, _T35, _T43, _T53 = (NPType(3, 3), NPType(3, 4), NPType(3, 5),
                                 NPType(4, 3), NPType(5, 3))

_CATALOG = (
    CatalogEntry(_F.TetrahedronEdgeCycle, _T33, 1, frozenset({1}), 4, "c"),
    CatalogEntry(_F.CubeEdgeCycle, _T34, 1, frozenset({1}), 8, "c"),
    CatalogEntry(_F.Prism, _T34, 3, frozenset({4}), 2, "n"),
    CatalogEntry(_F.DodecahedronEdgeCycle, _T35, 1, frozenset({1}), 20, "c"),
    CatalogEntry(_F.Barrel, _T35, 3, frozenset({5}), 4, "n"),
    CatalogEntry(_F.DodecahedronThickCycle, _T35, 1, frozenset({1}), 20, "c"),
    CatalogEntry(_F.OctahedronEdgeCycle, _T43, 1, frozenset({1}), 6, "c"),
    CatalogEntry(_F.OctahedronVertexCycle, _T43, 1, frozenset({1}), 6, "c"),
    CatalogEntry(_F.Antiprism, _T43, 3, frozenset({3}), 2, "n"),
    CatalogEntry(_F.IcosahedronEdgeCycle, _T53, 1, frozenset({1}), 12, "c"),
    CatalogEntry(_F.IcosahedronVertexCycle, _T53, 1, frozenset({1}), 12, "c"),
    CatalogEntry(_F.IcosahedronWideCycle, _T53, 3, frozenset({3}), 4, "n"),
    CatalogEntry(_F.IcosahedronFirstThickCycle, _T53, 1, frozenset({1}), 12, "c"),
    CatalogEntry(_F.IcosahedronSecondThickCycle, _T53, 1, frozenset({1}), 12, "c"),
)

ENTRY = {e.id: e for e in _CATALOG}

_EDGE = {
    _F.TetrahedronEdgeCycle: Solid.Tetrahedron,
    _F.CubeEdgeCycle: Solid.Cube,
    _F.DodecahedronEdgeCycle: Solid.Dodecahedron,
    _F.OctahedronEdgeCycle: Solid.Octahedron,
    _F.IcosahedronEdgeCycle: Solid.Icosahedron,
}
_VERTEX = {
    _F.OctahedronVertexCycle: Solid.Octahedron,
    _F.IcosahedronVertexCycle: Solid.Icosahedron,
}
_RING: dict[FamilyId, Callable[[int], PlaneGraph]] = {
    _F.Prism: prism,
    _F.Antiprism: antiprism,
    _F.Barrel: barrel,
    _F.IcosahedronWideCycle: wide_cycle,
}


def catalog() -> list[CatalogEntry]:
    return list(_CATALOG)


def generate(fid: FamilyId, param: int) -> PlaneGraph:
    fid = FamilyId(fid)
    _need(param, ENTRY[fid].min_param, fid.value)
    if fid in _EDGE:
        return edge_cycle(_EDGE[fid], param)
    if fid in _VERTEX:
        return vertex_cycle(_VERTEX[fid], param)
    if fid in _RING:
        return _RING[fid](param)
    return thick_cycle(fid, param)


@lru_cache(maxsize=4096)
def member_code(fid: FamilyId, param: int) -> bytes:
    return canonical_code(generate(fid, param))


def candidates(n: int, np_type: NPType | None = None) -> list[FamilyInstance]:
    """Non-degenerate members with ``n`` vertices, optionally of one type."""
    out = []
    for e in _CATALOG:
        if np_type is not None and e.np_type != tuple(np_type):
            continue
        if n % e.per_param:
            continue
        p = n // e.per_param
        if p >= e.min_param and p not in e.degenerate:
            out.append(FamilyInstance(e.id, p))
    return out


def base_solid(fid: FamilyId) -> Solid:
    fid = FamilyId(fid)
    for table in (_EDGE, _VERTEX, THICK_SOLID):
        if fid in table:
            return table[fid]
    return {
        _F.Prism: Solid.Cube,
        _F.Antiprism: Solid.Octahedron,
        _F.Barrel: Solid.Dodecahedron,
        _F.IcosahedronWideCycle: Solid.Icosahedron,
    }[fid]


__all__ = [
    "Solid", "FamilyId", "FamilyInstance", "CatalogEntry", "platonic", "dual",
    "prism", "antiprism", "barrel", "wide_cycle", "edge_cycle", "vertex_cycle",
    "thick_cycle", "thick_strip", "thick_configurations", "catalog", "generate",
    "member_code", "candidates", "base_solid",
]
