import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nearplatonic import core
from nearplatonic.families import generate
from nearplatonic.planegraph import build

from .helpers import members

py = core.get_kernels("python")
try:
    cy = core.get_kernels("cython")
except ImportError:  # extension not built in this environment
    cy = None

needs_cython = pytest.mark.skipif(cy is None, reason="compiled extension not built")


def flat(g):
    return g.off, g.nbr, g.rev


def test_unknown_backend():
    with pytest.raises(ValueError):
        core.get_kernels("fortran")


def test_pure_env_switch():
    env = dict(os.environ, NEARPLATONIC_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from nearplatonic import core; print(core.BACKEND)"],
                         env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


def test_traversal_bound():
    g = generate("Prism", 5)
    best = list(py.canonical_code(*flat(g)))
    starts = [(r, o) for r in range(g.num_darts) for o in (1, -1)]
    assert min(list(py.traversal_code(*flat(g), r, o)) for r, o in starts) == best
    assert all(py.traversal_code(*flat(g), r, o, best) is None for r, o in starts)


@needs_cython
@pytest.mark.parametrize("fid, p", members(36))
def test_codes_agree(fid, p):
    g = generate(fid, p)
    assert list(cy.canonical_code(*flat(g))) == list(py.canonical_code(*flat(g)))


@needs_cython
@given(st.sampled_from(members(36)), st.data())
def test_traversals_agree(member, data):
    g = generate(*member)
    root = data.draw(st.integers(0, g.num_darts - 1))
    orient = data.draw(st.sampled_from([1, -1]))
    assert list(cy.traversal_code(*flat(g), root, orient)) == list(py.traversal_code(*flat(g), root, orient))


@needs_cython
@pytest.mark.parametrize("k, n", [(3, 10), (3, 12), (4, 10), (5, 12)])
def test_search_agrees(k, n):
    def key(rots):
        return sorted(py.canonical_code(*flat(build(r))) for r in rots)

    assert key(cy.enumerate_regular(k, n)) == key(py.enumerate_regular(k, n))


@needs_cython
def test_partitions_cover():
    whole = cy.enumerate_regular(3, 12)
    parts = [r for p in range(5) for r in cy.enumerate_regular(3, 12, p, 5)]
    assert len(parts) == len(whole)
