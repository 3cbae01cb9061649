import pytest

from nearplatonic.errors import AsymmetricInput, NotConnected, NotPlanar, NotSimple, RotSyntaxError, TooLarge
from nearplatonic.families import Solid, antiprism, barrel, edge_cycle, platonic, prism
from nearplatonic.planegraph import (
    are_isomorphic,
    are_isomorphic_abstract,
    build,
    canonical_code,
    decode_code,
    from_faces,
    graph_from_code,
    is_two_connected,
    mirror,
    parse,
    parse_many,
    relabel,
    rotate_lists,
    serialize,
    structure,
    trace_faces,
)

from .helpers import K4_ROT, K4_TEXT, k4


class TestBuild:
    def test_k4_counts(self):
        g = k4()
        assert (g.n, g.num_edges, g.num_faces) == (4, 6, 4)

    def test_mapping_input(self):
        g = build({i: r for i, r in enumerate(K4_ROT)})
        assert g.rotations == k4().rotations

    def test_torus_embedding_rejected(self):
        rot = [list(r) for r in K4_ROT]
        rot[0] = rot[0][::-1]
        with pytest.raises(NotPlanar):
            build(rot)

    def test_doubled_edge(self):
        with pytest.raises(NotSimple):
            build([[1, 2, 1], [0, 2, 0], [0, 1]])

    def test_loop(self):
        with pytest.raises(NotSimple):
            build([[0]])

    def test_asymmetric(self):
        with pytest.raises(AsymmetricInput):
            build([[1, 2], [2], [0, 1]])

    def test_disconnected(self):
        with pytest.raises(NotConnected):
            build([[1], [0], [3], [2]])

    def test_dart_layout(self):
        g = k4()
        for d in range(g.num_darts):
            assert g.alpha(g.alpha(d)) == d
            assert g.tail(g.alpha(d)) == g.head(d)
            assert g.tail(g.sigma(d)) == g.tail(d)
            assert g.sigma_inv(g.sigma(d)) == d
        assert g.dart(2, 3) == 8

    def test_from_faces_cube(self):
        cube = platonic(Solid.Cube)
        faces = [f.vertices for f in cube.faces]
        assert are_isomorphic(from_faces(faces), cube)


class TestFaces:
    def test_cube(self):
        fs = trace_faces(platonic(Solid.Cube))
        assert len(fs) == 6 and set(fs.sizes()) == {4}

    def test_triangle(self):
        fs = trace_faces(build([[1, 2], [2, 0], [0, 1]]))
        assert fs.sizes() == [3, 3]

    def test_k4_minus_edge(self):
        g = build([[1, 2], [0, 3, 2], [0, 1, 3], [2, 1]])
        assert sorted(trace_faces(g).sizes()) == [3, 3, 4]

    def test_dart_to_face_consistent(self):
        g = prism(5)
        fs = g.faces
        for i, f in enumerate(fs):
            assert all(fs.dart_to_face[d] == i for d in f.darts)
            assert f.edges()[0] == (f.vertices[0], f.vertices[1])


class TestStructure:
    def test_cube(self):
        r = structure(platonic(Solid.Cube))
        assert r.connected and not r.cut_vertices and len(r.blocks) == 1

    def test_triangle(self):
        assert not structure(build([[1, 2], [2, 0], [0, 1]])).cut_vertices

    def test_two_triangles_and_a_bridge(self):
        g = build([[1, 2], [2, 0], [0, 1, 3], [4, 5, 2], [5, 3], [3, 4]])
        r = structure(g)
        assert r.cut_vertices == {2, 3}
        assert r.bridges == {(2, 3)}
        assert len(r.blocks) == 3

    def test_tetrahedron_edge_cycle_is_two_connected(self):
        # the links close up into a ring, so none of them is a bridge
        g = edge_cycle(Solid.Tetrahedron, 2)
        r = structure(g)
        assert is_two_connected(g)
        assert not r.bridges and not r.cut_vertices and len(r.blocks) == 1


class TestCanonicalCode:
    def test_relabel(self):
        g = prism(5)
        perm = list(range(g.n))[::-1]
        assert canonical_code(relabel(g, perm)) == canonical_code(g)

    def test_mirror_cube(self):
        cube = platonic(Solid.Cube)
        assert canonical_code(mirror(cube)) == canonical_code(cube)

    def test_sizes_differ(self):
        assert canonical_code(prism(3)) != canonical_code(k4())

    def test_decode_rebuilds(self):
        g = barrel(4)
        code = canonical_code(g)
        assert are_isomorphic(graph_from_code(code), g)
        assert graph_from_code(decode_code(code)).rotations == graph_from_code(code).rotations

    def test_rotation_start_irrelevant(self):
        g = antiprism(5)
        assert canonical_code(rotate_lists(g, range(g.n))) == canonical_code(g)


class TestIsomorphism:
    @pytest.mark.parametrize("g, s", [
        (prism(4), Solid.Cube),
        (antiprism(3), Solid.Octahedron),
        (barrel(5), Solid.Dodecahedron),
    ])
    def test_solids(self, g, s):
        assert are_isomorphic(g, platonic(s))

    def test_abstract_ignores_rotation(self):
        # reversing a single rotation of K4 leaves the plane, so the mirror
        # (every rotation reversed) is the nearest other embedding
        h = mirror(k4())
        assert h.rotations != k4().rotations
        assert are_isomorphic_abstract(k4(), h)

    def test_abstract_prism3_k4(self):
        assert not are_isomorphic_abstract(prism(3), k4())

    def test_abstract_limit(self):
        with pytest.raises(TooLarge):
            are_isomorphic_abstract(barrel(5), barrel(5))

    def test_embedding_iso_implies_abstract(self):
        g = antiprism(4)
        h = relabel(mirror(g), list(range(1, g.n)) + [0])
        assert are_isomorphic(g, h)
        assert are_isomorphic_abstract(g, h)


class TestMirror:
    def test_involution(self):
        g = prism(5)
        assert mirror(mirror(g)).rotations == g.rotations

    def test_face_sizes(self):
        g = barrel(6)
        assert sorted(mirror(g).faces.sizes()) == sorted(g.faces.sizes())

    def test_k4(self):
        assert are_isomorphic(mirror(k4()), k4())


class TestText:
    def test_serialize_k4(self):
        assert serialize(k4()) == K4_TEXT

    def test_parse_k4(self):
        assert parse(K4_TEXT).rotations == k4().rotations

    def test_round_trip_prism(self):
        text = serialize(prism(5))
        assert serialize(parse(text)) == text

    def test_single_edge(self):
        g = parse("n 2\nv 0: 1\nv 1: 0\n")
        assert (g.n, g.num_edges, g.num_faces) == (2, 1, 1)
        assert g.faces.sizes() == [2]

    def test_loop_text(self):
        with pytest.raises(NotSimple):
            parse("n 1\nv 0: 0\n")

    @pytest.mark.parametrize("text", [
        "", "x 4\n", "n 2\nv 0: 1\n", "n 2\nv 0: 1\nv 2: 0\n", "n 2\nv 0: a\nv 1: 0\n",
    ])
    def test_syntax_errors(self, text):
        with pytest.raises(RotSyntaxError):
            parse(text)

    def test_comments_and_many(self):
        text = "# two graphs\n" + K4_TEXT + "\n\n" + serialize(prism(3))
        gs = parse_many(text)
        assert [g.n for g in gs] == [4, 6]
