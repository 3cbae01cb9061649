import pytest

from nearplatonic.classify import (
    NonTouching,
    NPReport,
    NPType,
    SelfTouching,
    Touching,
    admissible_2np_types,
    block_signature,
    classify_nearly_platonic,
    face_distance,
    face_neighborhood,
    identify_family,
    is_saturated,
    is_weakly_saturated,
    report_line,
    touching_status,
)
from nearplatonic.errors import BadPathLength, NotABlock, NotNP, NotTwoConnected
from nearplatonic.families import (
    FamilyId,
    FamilyInstance,
    Solid,
    antiprism,
    barrel,
    edge_cycle,
    platonic,
    prism,
    wide_cycle,
)
from nearplatonic.planegraph import build, canonical_code

from .helpers import BLOCKS, k4, largest_face, minus_edge


def exceptional(g):
    rep = classify_nearly_platonic(g)
    return [f for f, _ in rep.exceptional]


class TestClassify:
    def test_icosahedron(self):
        r = classify_nearly_platonic(platonic(Solid.Icosahedron))
        assert (r.k, r.d, r.t, r.f) == (5, 3, 0, 20)
        assert r.balanced

    def test_prism(self):
        r = classify_nearly_platonic(prism(5))
        assert (r.k, r.d, r.t, r.exceptional_sizes, r.balanced) == (3, 4, 2, [5, 5], True)
        assert str(r.np_type) == "(3|4)"

    def test_antiprism(self):
        r = classify_nearly_platonic(antiprism(4))
        assert (r.k, r.d, r.t, r.exceptional_sizes, r.balanced) == (4, 3, 2, [4, 4], True)

    def test_not_regular(self):
        with pytest.raises(NotNP) as exc:
            classify_nearly_platonic(build([[1, 2], [0, 3, 2], [0, 1, 3], [2, 1]]))
        assert exc.value.reason == "NotRegular"

    def test_degree_too_small(self):
        with pytest.raises(NotNP) as exc:
            classify_nearly_platonic(build([[1, 2], [2, 0], [0, 1]]))
        assert exc.value.reason == "DegreeTooSmall"

    def test_no_majority(self):
        # cubic, faces 3,3,4,4,5,5: found by scanning the cubic enumeration
        g = build([(1, 2, 3), (0, 3, 4), (0, 4, 5), (0, 6, 1), (1, 7, 2), (2, 7, 6), (3, 5, 7), (4, 6, 5)])
        with pytest.raises(NotNP) as exc:
            classify_nearly_platonic(g)
        assert exc.value.reason == "NoMajorityFaceSize"


class TestAdmissible:
    def test_list(self):
        types = admissible_2np_types()
        assert NPType(3, 5) in types
        assert NPType(4, 4) not in types
        assert len(types) == 5
        assert set(types) == {NPType(3, 3), NPType(3, 4), NPType(3, 5), NPType(4, 3), NPType(5, 3)}


class TestDistance:
    def test_cube_adjacent(self):
        g = platonic(Solid.Cube)
        f0 = g.faces[0]
        other = g.faces.dart_to_face[g.alpha(f0.darts[0])]
        assert face_distance(g, 0, other) == 0

    def test_prism(self):
        g = prism(5)
        assert face_distance(g, *exceptional(g)) == 1

    def test_barrel(self):
        g = barrel(6)
        assert face_distance(g, *exceptional(g)) == 3

    def test_wide_cycle(self):
        g = wide_cycle(4)
        assert face_distance(g, *exceptional(g)) == 2


class TestTouching:
    def test_prism(self):
        g = prism(5)
        assert touching_status(g, classify_nearly_platonic(g)) == NonTouching()

    def test_edge_cycle(self):
        g = edge_cycle(Solid.Tetrahedron, 2)
        st = touching_status(g, classify_nearly_platonic(g))
        assert isinstance(st, Touching)
        assert len(st.shared) == 4

    def test_requires_two(self):
        g = platonic(Solid.Cube)
        with pytest.raises(ValueError):
            touching_status(g, classify_nearly_platonic(g))

    def test_self_touching_detected(self):
        # two triangles joined by a bridge: the outer walk passes 2 and 3 twice
        g = build([[1, 2], [2, 0], [0, 1, 3], [4, 5, 2], [5, 3], [3, 4]])
        outer = largest_face(g)
        inner = next(i for i in range(len(g.faces)) if i != outer)
        rep = NPReport(3, 3, 2, len(g.faces), ((inner, 3), (outer, 8)), False)
        assert touching_status(g, rep) == SelfTouching(outer)


class TestSaturation:
    def test_platonic(self):
        g = platonic(Solid.Dodecahedron)
        assert all(is_saturated(g, v, 3) for v in range(g.n))

    def test_block_endpoint(self):
        blk = minus_edge(Solid.Cube)
        sig = block_signature(blk, largest_face(blk))
        assert not is_saturated(blk, sig.x, 3)

    def test_prism_path(self):
        n = 6
        assert is_weakly_saturated(prism(n), [1, 0, n, n + 1], 3, 4)

    def test_path_length(self):
        with pytest.raises(BadPathLength):
            is_weakly_saturated(prism(5), [1, 0, 5], 3, 4)

    def test_path_must_be_edges(self):
        with pytest.raises(BadPathLength):
            is_weakly_saturated(prism(5), [1, 0, 2, 3], 3, 4)


class TestNeighborhood:
    def test_wide_cycle(self):
        n = 5
        g = wide_cycle(n)
        f = exceptional(g)[0]
        assert len(face_neighborhood(g, f)) == 2 * n

    def test_tetrahedron(self):
        g = k4()
        assert face_neighborhood(g, 0) == frozenset(set(range(4)) - set(g.faces[0].vertices))

    def test_antiprism(self):
        n = 6
        g = antiprism(n)
        f1, f2 = exceptional(g)
        assert face_neighborhood(g, f1) == frozenset(g.faces[f2].vertices)


class TestBlockSignature:
    @pytest.mark.parametrize("name, make, expected, solid", BLOCKS, ids=[b[0] for b in BLOCKS])
    def test_blocks(self, name, make, expected, solid):
        g = make()
        assert str(block_signature(g, largest_face(g))) == expected

    def test_boundary_starts_at_x(self):
        g = minus_edge(Solid.Cube)
        sig = block_signature(g, largest_face(g))
        assert sig.boundary[0] == sig.x and sig.boundary[sig.a] == sig.y
        assert sig.h == 6

    def test_platonic_is_not_block(self):
        g = platonic(Solid.Cube)
        with pytest.raises(NotABlock):
            block_signature(g, 0)

    def test_needs_two_connected(self):
        g = build([[1, 2], [2, 0], [0, 1, 3], [4, 5, 2], [5, 3], [3, 4]])
        with pytest.raises(NotTwoConnected):
            block_signature(g, 0)


class TestIdentify:
    def test_prism(self):
        assert identify_family(prism(7)) == FamilyInstance(FamilyId.Prism, 7)

    def test_chain(self):
        assert identify_family(edge_cycle(Solid.Tetrahedron, 2)) == FamilyInstance(FamilyId.TetrahedronEdgeCycle, 2)

    def test_wide(self):
        assert identify_family(wide_cycle(4)) == FamilyInstance(FamilyId.IcosahedronWideCycle, 4)

    def test_platonic_has_none(self):
        assert identify_family(platonic(Solid.Cube)) is None


class TestReportLine:
    def test_fields(self):
        g = prism(5)
        cols = report_line(g, family=True).split("\t")
        assert cols == [canonical_code(g).hex(), "10", "3", "4", "2", "5,5", "true", "Prism", "5"]

    def test_no_family(self):
        cols = report_line(platonic(Solid.Cube)).split("\t")
        assert cols[4:] == ["0", "-", "true", "-", "-"]
