"""Shared fixtures-by-value for the test modules."""

from nearplatonic.families import ENTRY, FamilyId, Solid, generate, platonic
from nearplatonic.planegraph import build
from nearplatonic.surgery import remove_edge, split_vertex

K4_ROT = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]
K4_TEXT = "n 4\nv 0: 1 2 3\nv 1: 0 3 2\nv 2: 0 1 3\nv 3: 0 2 1\n"


def k4():
    return build(K4_ROT)


def largest_face(g):
    sizes = g.faces.sizes()
    return max(range(len(sizes)), key=lambda i: sizes[i])


def members(max_vertices=60, degenerate=False):
    """Every (family, param) with at most ``max_vertices`` vertices."""
    out = []
    for fid in FamilyId:
        e = ENTRY[fid]
        p = e.min_param
        while e.order(p) <= max_vertices:
            if degenerate or p not in e.degenerate:
                out.append((fid, p))
            p += 1
    return out


def minus_edge(s: Solid):
    g = platonic(s)
    return remove_edge(g, (0, g.neighbors(0)[0])).finalize()


def vertex_split(s: Solid, j: int):
    return split_vertex(platonic(s), 0, j).finalize()


# the seven unique blocks with their expected signatures
BLOCKS = [
    ("tetrahedron minus edge", lambda: minus_edge(Solid.Tetrahedron), "(3;2,2|3,<2,2>)", Solid.Tetrahedron),
    ("cube minus edge", lambda: minus_edge(Solid.Cube), "(3;2,2|4,<3,3>)", Solid.Cube),
    ("dodecahedron minus edge", lambda: minus_edge(Solid.Dodecahedron), "(3;2,2|5,<4,4>)", Solid.Dodecahedron),
    ("octahedron minus edge", lambda: minus_edge(Solid.Octahedron), "(4;3,3|3,<2,2>)", Solid.Octahedron),
    ("icosahedron minus edge", lambda: minus_edge(Solid.Icosahedron), "(5;4,4|3,<2,2>)", Solid.Icosahedron),
    ("octahedron split 2+2", lambda: vertex_split(Solid.Octahedron, 2), "(4;2,2|3,<3,3>)", Solid.Octahedron),
    ("icosahedron split 3+2", lambda: vertex_split(Solid.Icosahedron, 3), "(5;3,2|3,<3,3>)", Solid.Icosahedron),
]

__all__ = ["BLOCKS", "K4_ROT", "K4_TEXT", "generate", "k4", "largest_face", "members"]
