"""Empirical checks of the 1- and 2-nearly Platonic classification over every
k-regular plane graph up to a given order."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .classify import (
    NonTouching,
    NPReport,
    NPType,
    SelfTouching,
    Touching,
    block_signature,
    face_distance,
    identify_family,
    report_line,
    touching_status,
)
from .enumerate import EnumSpec, enumerate_k_regular, filter_nearly_platonic
from .errors import GraphError, WrongType
from .planegraph import PlaneGraph, build, canonical_code
from .surgery import MarkedGraph

# face distances allowed between non-touching exceptional faces, by type
ALLOWED_DISTANCES = {NPType(3, 5): {1, 3}, NPType(5, 3): {1, 2}}


@dataclass(frozen=True)
class Found:
    code: str
    np_type: NPType
    sizes: tuple
    balanced: bool
    family: object  # FamilyInstance or None
    touching: str


@dataclass
class VerificationReport:
    spec: tuple
    counts: dict = field(default_factory=dict)
    np1_found: list = field(default_factory=list)
    np2_found: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    lines: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        k, nmax = self.spec
        total = sum(self.counts.values())
        out = [f"k={k} max={nmax}: {total} graphs"]
        for n in sorted(self.counts):
            out.append(f"  |V|={n}: {self.counts[n]}")
        out.append(f"1-nearly Platonic: {len(self.np1_found)}")
        out.append(f"2-nearly Platonic: {len(self.np2_found)}")
        fams = Counter(f.family.id.value if f.family else "unrecognized" for f in self.np2_found)
        for name in sorted(fams):
            out.append(f"  {name}: {fams[name]}")
        out.append(f"violations: {len(self.violations)}")
        out += [f"  {v}" for v in self.violations]
        return "\n".join(out)

    def write(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(f"# k={self.spec[0]} max={self.spec[1]}\n")
            for line in self.lines:
                fh.write(line + "\n")
            fh.write("# violations\n")
            for v in self.violations:
                fh.write(v + "\n")


def verify_vertex_count_law(report: NPReport, g: PlaneGraph) -> bool:
    """``|V| = 2(m + n)`` for a non-touching (5|3) graph with exceptional
    sizes ``m`` and ``n``."""
    if report.np_type != NPType(5, 3) or report.t != 2:
        raise WrongType(f"needs a (5|3) graph with t = 2, got {report.np_type} t={report.t}")
    if not isinstance(touching_status(g, report), NonTouching):
        raise WrongType("exceptional faces touch")
    m, n = report.exceptional_sizes
    return g.n == 2 * (m + n)


def _components(mg: MarkedGraph) -> list[PlaneGraph]:
    live = mg.live()
    comp = {}
    for d in live:
        if d in comp:
            continue
        comp[d] = d
        stack = [d]
        while stack:
            x = stack.pop()
            for y in (mg.alpha[x], mg.sigma[x]):
                if y not in comp:
                    comp[y] = d
                    stack.append(y)
    out = []
    for root in sorted(set(comp.values())):
        darts = [d for d in live if comp[d] == root]
        labels = sorted({mg.vof[d] for d in darts})
        index = {v: i for i, v in enumerate(labels)}
        rot = [[] for _ in labels]
        seen = set()
        for d in darts:
            if d in seen:
                continue
            x = d
            while x not in seen:
                seen.add(x)
                rot[index[mg.vof[x]]].append(index[mg.head(x)])
                x = mg.sigma[x]
        out.append(build(rot))
    return out


def touching_chain(g: PlaneGraph, report: NPReport):
    """Cut a touching 2-NP graph into its blocks.

    Edges with one exceptional face on each side are links and get removed;
    a shared vertex without a link is split between its two exceptional
    corners.  Returns the block descriptors, one per piece.
    """
    faces = g.faces
    (f1, _), (f2, _) = report.exceptional
    d2f = faces.dart_to_face
    links = [d for d in range(g.num_darts)
             if d < g.alpha(d) and {d2f[d], d2f[g.alpha(d)]} == {f1, f2}]
    linked = {g.tail(d) for d in links} | {g.head(d) for d in links}
    shared = set(faces[f1].vertices) & set(faces[f2].vertices)
    splits = []
    for v in sorted(shared - linked):
        a = [g.alpha(d) for d in faces[f1].darts if g.head(d) == v]
        b = [g.alpha(d) for d in faces[f2].darts if g.head(d) == v]
        if len(a) != 1 or len(b) != 1:
            raise GraphError(f"vertex {v} meets an exceptional face twice")
        splits.append((a[0], b[0]))
    mg = MarkedGraph.from_plane(g)
    e = mg._edit()
    for a, b in splits:
        e.splice(a, b)
    for d in links:
        e.delete_edge(d)
    out = []
    for piece in _components(e.freeze()):
        sizes = piece.faces.sizes()
        outer = max(range(len(sizes)), key=lambda i: sizes[i])
        out.append(block_signature(piece, outer, k=report.k))
    return out


def _check_graph(g: PlaneGraph, rep: NPReport, res: VerificationReport):
    code = canonical_code(g).hex()
    status = touching_status(g, rep)
    inst = identify_family(g, rep)
    kind = type(status).__name__
    res.np2_found.append(Found(code, rep.np_type, tuple(rep.exceptional_sizes),
                               rep.balanced, inst, kind))
    res.lines.append(report_line(g, rep, family=inst))
    if not rep.balanced:
        res.violations.append(f"{code}\tunbalanced {rep.exceptional_sizes}")
    if inst is None:
        res.violations.append(f"{code}\tnot in any family")
    if isinstance(status, SelfTouching):
        res.violations.append(f"{code}\tself-touching face {status.face}")
    elif isinstance(status, NonTouching):
        f1, f2 = (f for f, _ in rep.exceptional)
        allowed = ALLOWED_DISTANCES.get(rep.np_type)
        dist = face_distance(g, f1, f2)
        if allowed is not None and dist not in allowed:
            res.violations.append(f"{code}\tdistance {dist} not in {sorted(allowed)}")
        if rep.np_type == NPType(5, 3) and not verify_vertex_count_law(rep, g):
            res.violations.append(f"{code}\t|V| != 2(m+n)")
    elif isinstance(status, Touching):
        try:
            blocks = touching_chain(g, rep)
        except GraphError as exc:
            res.violations.append(f"{code}\tchain decomposition failed: {exc}")
        else:
            kinds = {str(b) for b in blocks}
            if len(kinds) != 1 or any(b.endblock for b in blocks):
                res.violations.append(f"{code}\tchain blocks differ: {sorted(kinds)}")


def _run(k: int, max_vertices: int, parallelism=None, check_2np=True) -> VerificationReport:
    res = VerificationReport((k, max_vertices))
    spec = EnumSpec(k, max_vertices, parallelism=parallelism)
    counts: Counter = Counter()

    def counted():
        for g in enumerate_k_regular(spec):
            counts[g.n] += 1
            yield g

    for g, rep in filter_nearly_platonic(counted()):
        if rep.t == 1:
            code = canonical_code(g).hex()
            res.np1_found.append(code)
            res.violations.append(f"{code}\t1-nearly Platonic")
        elif rep.t == 2 and check_2np:
            _check_graph(g, rep, res)
    res.counts = dict(sorted(counts.items()))
    return res


def verify_no_1np(k: int, max_vertices: int, parallelism=None) -> VerificationReport:
    return _run(k, max_vertices, parallelism, check_2np=False)


def verify_2np_classification(k: int, max_vertices: int, parallelism=None) -> VerificationReport:
    """Enumerate, classify and check every 1- and 2-nearly Platonic graph."""
    return _run(k, max_vertices, parallelism, check_2np=True)
