"""Nearly-Platonic classification and the structural predicates around it."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import BadPathLength, NotABlock, NotNP, NotTwoConnected
from .planegraph import PlaneGraph, canonical_code, is_two_connected


class NPType(NamedTuple):
    k: int
    d: int

    def __str__(self):
        return f"({self.k}|{self.d})"


@dataclass(frozen=True)
class NPReport:
    k: int
    d: int
    t: int
    f: int
    exceptional: tuple  # ((face id, size), ...)
    balanced: bool

    @property
    def np_type(self) -> NPType:
        return NPType(self.k, self.d)

    @property
    def exceptional_sizes(self) -> list[int]:
        return sorted(s for _, s in self.exceptional)


def classify_nearly_platonic(g: PlaneGraph) -> NPReport:
    """Return the report for ``g`` or raise :class:`NotNP`.

    ``d`` is the face size held by a strict majority of faces (``f - t > t``);
    every other face is exceptional.  ``t == 0`` means ``g`` is Platonic.
    """
    degs = set(g.degrees())
    if len(degs) != 1:
        raise NotNP("NotRegular", f"degrees {sorted(degs)}")
    k = degs.pop()
    if k < 3:
        raise NotNP("DegreeTooSmall", f"k = {k}")
    sizes = g.faces.sizes()
    f = len(sizes)
    d, count = Counter(sizes).most_common(1)[0]
    t = f - count
    if not f - t > t:
        raise NotNP("NoMajorityFaceSize", f"face sizes {sorted(Counter(sizes).items())}")
    exc = tuple((i, s) for i, s in enumerate(sizes) if s != d)
    balanced = len({s for _, s in exc}) <= 1
    return NPReport(k, d, t, f, exc, balanced)


def _two_exception_solution(k: int, d: int, max_size: int = 60):
    """Smallest (m1, m2, V, E, F) with two faces of sizes != d, or None."""
    denom = 2 * k - d * k + 2 * d
    if denom <= 0:
        return None
    for total in range(2, 2 * max_size + 1):
        for m1 in range(1, total // 2 + 1):
            m2 = total - m1
            if d in (m1, m2) or m2 > max_size:
                continue
            # degree sum 2E = kV = d(F-2) + m1 + m2, plus V - E + F = 2
            e = Fraction(k * total, denom)
            if e.denominator != 1:
                continue
            v = Fraction(2 * e, k)
            f = 2 - v + e
            if v.denominator != 1 or f.denominator != 1 or f <= 4:
                continue
            return m1, m2, int(v), int(e), int(f)
    return None


def admissible_2np_types(lo: int = 3, hi: int = 6) -> list[NPType]:
    """Types (k|d) whose Euler and degree-sum equations admit two exceptional
    faces of size other than d."""
    out = []
    for k in range(lo, hi + 1):
        for d in range(lo, hi + 1):
            if _two_exception_solution(k, d) is not None:
                out.append(NPType(k, d))
    return out


def face_distance(g: PlaneGraph, f1: int, f2: int) -> int:
    """Fewest edges between a vertex of face ``f1`` and one of ``f2``."""
    faces = g.faces
    src = set(faces[f1].vertices)
    dst = set(faces[f2].vertices)
    if src & dst:
        return 0
    dist = {v: 0 for v in src}
    queue = deque(src)
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                if w in dst:
                    return dist[w]
                queue.append(w)
    raise ValueError("faces lie in different components")


@dataclass(frozen=True)
class NonTouching:
    pass


@dataclass(frozen=True)
class Touching:
    shared: frozenset


@dataclass(frozen=True)
class SelfTouching:
    face: int


def touching_status(g: PlaneGraph, report: NPReport):
    if report.t != 2:
        raise ValueError("touching status needs exactly two exceptional faces")
    faces = g.faces
    (a, _), (b, _) = report.exceptional
    for fid in (a, b):
        vs = faces[fid].vertices
        if len(set(vs)) != len(vs):
            return SelfTouching(fid)
    shared = set(faces[a].vertices) & set(faces[b].vertices)
    if shared:
        return Touching(frozenset(shared))
    return NonTouching()


def is_saturated(g: PlaneGraph, v: int, k: int) -> bool:
    return g.degree(v) == k


def is_weakly_saturated(g: PlaneGraph, path: Sequence[int], k: int, d: int) -> bool:
    """All internal vertices of a ``d - 1`` edge path have degree ``k``."""
    if len(path) - 1 != d - 1:
        raise BadPathLength(f"path has {len(path) - 1} edges, expected {d - 1}")
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            raise BadPathLength(f"{u}-{v} is not an edge")
    return all(is_saturated(g, v, k) for v in path[1:-1])


def face_neighborhood(g: PlaneGraph, f: int) -> frozenset:
    on = set(g.faces[f].vertices)
    return frozenset(w for v in on for w in g.neighbors(v) if w not in on)


@dataclass(frozen=True)
class BlockDescriptor:
    k: int
    k1: int
    k2: int | None
    d: int
    a: int
    b: int
    x: int
    y: int | None
    boundary: tuple
    endblock: bool = False

    @property
    def h(self) -> int:
        return self.a + self.b

    def __str__(self):
        if self.endblock:
            return f"({self.k};{self.k1}|{self.d})-endblock"
        return f"({self.k};{self.k1},{self.k2}|{self.d},<{self.a},{self.b}>)"


def block_signature(g: PlaneGraph, outer: int, k: int | None = None) -> BlockDescriptor:
    """Read off the block parameters of ``g`` with designated face ``outer``.

    ``k`` defaults to the largest degree.  The boundary walk starts at ``x``
    (the larger of the two low degrees) and heads towards ``y`` along the
    shorter side.
    """
    if not is_two_connected(g):
        raise NotTwoConnected("blocks must be 2-connected")
    faces = g.faces
    walk = list(faces[outer].vertices)
    if len(set(walk)) != len(walk):
        raise NotABlock("designated face repeats a vertex")
    if k is None:
        k = max(g.degrees())
    low = [v for v in range(g.n) if g.degree(v) < k]
    if any(g.degree(v) > k for v in range(g.n)):
        raise NotABlock(f"degree above {k}")
    inner = {faces[i].size for i in range(len(faces)) if i != outer}
    if len(inner) != 1:
        raise NotABlock(f"inner faces have sizes {sorted(inner)}")
    d = inner.pop()
    if not low or len(low) > 2 or any(v not in walk for v in low):
        raise NotABlock("need one or two low-degree vertices on the designated face")
    h = len(walk)
    if len(low) == 1:
        x = low[0]
        i = walk.index(x)
        return BlockDescriptor(k, g.degree(x), None, d, 0, h, x, None,
                               tuple(walk[i:] + walk[:i]), endblock=True)
    u, v = low
    if g.degree(u) < g.degree(v) or (g.degree(u) == g.degree(v) and walk.index(u) > walk.index(v)):
        u, v = v, u
    i = walk.index(u)
    fwd = walk[i:] + walk[:i]
    a = fwd.index(v)
    if a > h - a:
        fwd = [fwd[0]] + fwd[1:][::-1]
        a = h - a
    return BlockDescriptor(k, g.degree(u), g.degree(v), d, a, h - a, u, v, tuple(fwd))


def identify_family(g: PlaneGraph, report: NPReport | None = None):
    """Match ``g`` against every family member of the same order and type.

    Returns a :class:`~nearplatonic.families.FamilyInstance` or ``None``.
    """
    from . import families

    if report is None:
        report = classify_nearly_platonic(g)
    if report.t != 2:
        return None
    code = canonical_code(g)
    for inst in families.candidates(g.n, report.np_type):
        if families.member_code(inst.id, inst.param) == code:
            return inst
    return None


def report_line(g: PlaneGraph, report: NPReport | None = None, family=False) -> str:
    """Tab-separated summary: code, |V|, k, d, t, exceptional sizes, balanced,
    family, parameter.

    ``family`` may be a known family instance, ``True`` to look it up, or
    ``False`` to leave the last two columns as ``-``.
    """
    if report is None:
        report = classify_nearly_platonic(g)
    sizes = ",".join(map(str, report.exceptional_sizes)) or "-"
    if family is True:
        inst = identify_family(g, report) if report.t == 2 else None
    else:
        inst = family or None
    fam = inst.id.value if inst else "-"
    par = str(inst.param) if inst else "-"
    return "\t".join([
        canonical_code(g).hex(), str(g.n), str(report.k), str(report.d),
        str(report.t), sizes, str(report.balanced).lower(), fam, par,
    ])
