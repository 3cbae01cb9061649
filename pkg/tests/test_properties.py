"""Invariants checked on random family members and random relabellings."""

from hypothesis import assume, given
from hypothesis import strategies as st

from nearplatonic.classify import SelfTouching, classify_nearly_platonic, touching_status
from nearplatonic.families import generate
from nearplatonic.planegraph import (
    are_isomorphic,
    are_isomorphic_abstract,
    canonical_code,
    is_two_connected,
    mirror,
    parse,
    relabel,
    rotate_lists,
    serialize,
)
from nearplatonic.surgery import amalgamate_vertices, cut_edge, cut_strip, glue_cyclic_copies, split_vertex

from .helpers import members

MEMBERS = members(60, degenerate=True)
graphs = st.sampled_from(MEMBERS).map(lambda m: generate(*m))


@given(graphs)
def test_counting_identities(g):
    sizes = g.faces.sizes()
    assert g.n - g.num_edges + len(sizes) == 2
    assert sum(sizes) == 2 * g.num_edges
    assert sum(g.degrees()) == 2 * g.num_edges


@given(graphs, st.randoms(use_true_random=False))
def test_code_invariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    h = rotate_lists(h, [rnd.randrange(8) for _ in range(g.n)])
    if rnd.random() < 0.5:
        h = mirror(h)
    assert canonical_code(h) == canonical_code(g)
    assert classify_nearly_platonic(h).exceptional_sizes == classify_nearly_platonic(g).exceptional_sizes


@given(graphs)
def test_text_round_trip(g):
    text = serialize(g)
    h = parse(text)
    assert h.rotations == g.rotations and serialize(h) == text


@given(graphs)
def test_mirror_involution(g):
    assert mirror(mirror(g)).rotations == g.rotations


@given(st.sampled_from([m for m in MEMBERS if generate(*m).n <= 16]))
def test_embedding_iso_implies_abstract(m):
    g = generate(*m)
    h = mirror(relabel(g, list(range(g.n))[::-1]))
    assert are_isomorphic(g, h) and are_isomorphic_abstract(g, h)


@given(graphs)
def test_two_connected_never_self_touching(g):
    r = classify_nearly_platonic(g)
    assume(r.t == 2 and is_two_connected(g))
    assert not isinstance(touching_status(g, r), SelfTouching)


@given(graphs, st.data())
def test_split_amalgamate(g, data):
    z = data.draw(st.integers(0, g.n - 1))
    k = g.degree(z)
    j = data.draw(st.integers(1, k - 1))
    shift = data.draw(st.integers(0, k - 1))
    r = list(g.neighbors(z))
    r = r[shift:] + r[:shift]
    mg = split_vertex(g, z, (r[:j], r[j:]))
    assert len(mg.live()) == g.num_darts
    assert mg.euler_char() == 2
    assert are_isomorphic(amalgamate_vertices(mg, z, g.n).finalize(), g)


@given(graphs, st.data())
def test_cut_glue(g, data):
    u, v = data.draw(st.sampled_from(g.edges()))
    cut = cut_edge(g, (u, v))
    assert len(cut.live()) == g.num_darts + 2
    assert len(cut.faces()) == g.num_faces + 1
    assert are_isomorphic(glue_cyclic_copies(cut, 1), g)


@given(graphs, st.data())
def test_strip_single_copy(g, data):
    u, v = data.draw(st.sampled_from(g.edges()))
    fu = data.draw(st.sampled_from([i for i, f in enumerate(g.faces) if u in f.vertices]))
    fv = data.draw(st.sampled_from([i for i, f in enumerate(g.faces) if v in f.vertices]))
    assume(fu != fv and v not in g.faces[fu].vertices and u not in g.faces[fv].vertices)
    assert are_isomorphic(glue_cyclic_copies(cut_strip(g, (u, v), fu, fv), 1), g)
