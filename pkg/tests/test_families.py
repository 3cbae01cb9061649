import pytest

from nearplatonic.classify import NonTouching, Touching, classify_nearly_platonic, face_distance, touching_status
from nearplatonic.errors import ParamTooSmall, UnsupportedSolid
from nearplatonic.families import (
    ENTRY,
    SOLID_TYPE,
    FamilyId,
    FamilyInstance,
    Solid,
    _thick_case,
    antiprism,
    barrel,
    base_solid,
    candidates,
    catalog,
    edge_cycle,
    generate,
    platonic,
    prism,
    thick_configurations,
    thick_cycle,
    vertex_cycle,
    wide_cycle,
)
from nearplatonic.planegraph import are_isomorphic, canonical_code
from nearplatonic.surgery import cut_strip, glue_cyclic_copies

from .helpers import members


def counts(g):
    return g.n, g.num_edges, g.num_faces


class TestSolids:
    @pytest.mark.parametrize("s, vef, kd", [
        (Solid.Tetrahedron, (4, 6, 4), (3, 3)),
        (Solid.Cube, (8, 12, 6), (3, 4)),
        (Solid.Octahedron, (6, 12, 8), (4, 3)),
        (Solid.Dodecahedron, (20, 30, 12), (3, 5)),
        (Solid.Icosahedron, (12, 30, 20), (5, 3)),
    ])
    def test_counts(self, s, vef, kd):
        g = platonic(s)
        r = classify_nearly_platonic(g)
        assert counts(g) == vef
        assert (r.k, r.d, r.t) == (*kd, 0)
        assert SOLID_TYPE[s] == r.np_type


class TestRings:
    def test_prism6(self):
        g = prism(6)
        assert (g.n, g.num_edges) == (12, 18)
        assert sorted(g.faces.sizes()) == [4] * 6 + [6, 6]

    def test_barrel3(self):
        r = classify_nearly_platonic(barrel(3))
        assert (barrel(3).n, r.f, r.t, r.d, r.exceptional_sizes) == (12, 8, 2, 5, [3, 3])

    def test_barrel6(self):
        g = barrel(6)
        r = classify_nearly_platonic(g)
        assert g.n == 24 and r.exceptional_sizes == [6, 6]
        assert face_distance(g, *(f for f, _ in r.exceptional)) == 3

    def test_wide_cycle4(self):
        g = wide_cycle(4)
        r = classify_nearly_platonic(g)
        assert g.n == 16
        assert face_distance(g, *(f for f, _ in r.exceptional)) == 2

    @pytest.mark.parametrize("n", [4, 5, 6, 9])
    def test_wide_cycle_order(self, n):
        g = wide_cycle(n)
        m1, m2 = classify_nearly_platonic(g).exceptional_sizes
        assert g.n == 2 * (m1 + m2) == 4 * n

    @pytest.mark.parametrize("fn", [prism, antiprism, barrel, wide_cycle])
    def test_too_small(self, fn):
        with pytest.raises(ParamTooSmall):
            fn(2)


class TestCycles:
    def test_tetrahedron2(self):
        g = edge_cycle(Solid.Tetrahedron, 2)
        r = classify_nearly_platonic(g)
        assert (g.n, g.num_edges, r.exceptional_sizes) == (8, 12, [6, 6])

    def test_cube2(self):
        g = edge_cycle(Solid.Cube, 2)
        assert (g.n, classify_nearly_platonic(g).exceptional_sizes) == (16, [8, 8])

    @pytest.mark.parametrize("c", [2, 3, 4])
    def test_dodecahedron(self, c):
        r = classify_nearly_platonic(edge_cycle(Solid.Dodecahedron, c))
        assert r.exceptional_sizes == [5 * c, 5 * c]

    def test_octahedron_vertex2(self):
        g = vertex_cycle(Solid.Octahedron, 2)
        r = classify_nearly_platonic(g)
        assert (g.n, g.num_edges, r.exceptional_sizes) == (12, 24, [6, 6])

    def test_icosahedron_vertex2(self):
        g = vertex_cycle(Solid.Icosahedron, 2)
        r = classify_nearly_platonic(g)
        assert (g.n, g.num_edges, r.exceptional_sizes) == (24, 60, [6, 6])

    def test_vertex_cycle_degenerate(self):
        assert are_isomorphic(vertex_cycle(Solid.Octahedron, 1), platonic(Solid.Octahedron))

    def test_vertex_cycle_unsupported(self):
        with pytest.raises(UnsupportedSolid):
            vertex_cycle(Solid.Cube, 2)

    def test_cycles_touch(self):
        for g in (edge_cycle(Solid.Cube, 3), vertex_cycle(Solid.Icosahedron, 3)):
            assert isinstance(touching_status(g, classify_nearly_platonic(g)), Touching)


class TestThick:
    @pytest.mark.parametrize("fid, s", [
        (FamilyId.DodecahedronThickCycle, Solid.Dodecahedron),
        (FamilyId.IcosahedronFirstThickCycle, Solid.Icosahedron),
        (FamilyId.IcosahedronSecondThickCycle, Solid.Icosahedron),
    ])
    def test_base(self, fid, s):
        assert are_isomorphic(thick_cycle(fid, 1), platonic(s))

    @pytest.mark.parametrize("fid", [FamilyId.DodecahedronThickCycle,
                                     FamilyId.IcosahedronFirstThickCycle,
                                     FamilyId.IcosahedronSecondThickCycle])
    def test_linear_growth(self, fid):
        sizes = [classify_nearly_platonic(thick_cycle(fid, c)).exceptional_sizes for c in (2, 3, 4)]
        steps = {b[0] - a[0] for a, b in zip(sizes, sizes[1:])}
        assert len(steps) == 1 and steps.pop() > 0
        assert all(s[0] == s[1] for s in sizes)

    def test_thick_nontouching_distance1(self):
        for fid in (FamilyId.DodecahedronThickCycle, FamilyId.IcosahedronSecondThickCycle):
            g = thick_cycle(fid, 3)
            r = classify_nearly_platonic(g)
            assert touching_status(g, r) == NonTouching()
            assert face_distance(g, *(f for f, _ in r.exceptional)) == 1

    def test_two_icosahedral_classes(self):
        cfgs = thick_configurations(Solid.Icosahedron)
        assert len(cfgs) == 420
        ico = platonic(Solid.Icosahedron)
        by_case = {}
        for (edge, fa, fb, pa, pb) in cfgs:
            by_case.setdefault(_thick_case(pa, pb), []).append((edge, fa, fb))
        assert {k: len(v) for k, v in by_case.items()} == {1: 120, 2: 240, 3: 60}
        first = canonical_code(thick_cycle(FamilyId.IcosahedronFirstThickCycle, 2))
        second = canonical_code(thick_cycle(FamilyId.IcosahedronSecondThickCycle, 2))
        assert first != second
        for case, items in by_case.items():
            want = second if case == 3 else first
            for edge, fa, fb in items:
                assert canonical_code(glue_cyclic_copies(cut_strip(ico, edge, fa, fb), 2)) == want

    def test_not_thick(self):
        with pytest.raises(UnsupportedSolid):
            thick_cycle(FamilyId.Prism, 2)


class TestCatalog:
    def test_size(self):
        assert len(catalog()) == 14

    def test_groups(self):
        group = {e.id for e in catalog() if str(e.np_type) == "(3|5)"}
        assert group == {FamilyId.DodecahedronEdgeCycle, FamilyId.Barrel, FamilyId.DodecahedronThickCycle}
        assert sum(1 for e in catalog() if str(e.np_type) == "(5|3)") == 5

    def test_descriptions(self):
        e = ENTRY[FamilyId.Prism]
        assert e.param_range == "n >= 3 (4 gives a solid)"
        assert e.order_formula == "|V| = 2n"

    @pytest.mark.parametrize("fid, p", members(60))
    def test_order_and_type(self, fid, p):
        g = generate(fid, p)
        e = ENTRY[fid]
        r = classify_nearly_platonic(g)
        assert g.n == e.order(p)
        assert r.np_type == e.np_type and r.t == 2 and r.balanced

    @pytest.mark.parametrize("fid", list(FamilyId))
    def test_degenerate_is_base_solid(self, fid):
        for p in ENTRY[fid].degenerate:
            assert are_isomorphic(generate(fid, p), platonic(base_solid(fid)))
            assert FamilyInstance(fid, p).degenerate

    def test_candidates(self):
        got = {(i.id, i.param) for i in candidates(24)}
        assert (FamilyId.Barrel, 6) in got
        assert (FamilyId.IcosahedronVertexCycle, 2) in got
        assert all(not i.degenerate for i in candidates(20))

    def test_generate_rejects_small(self):
        with pytest.raises(ParamTooSmall):
            generate(FamilyId.Barrel, 2)
