"""Command-line front end.

Exit status is 0 on success, 1 when the library rejects the input and 2 on
usage errors.  Graphs travel as ".rot" text on stdin/stdout unless ``--in`` or
``--out`` name files.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import classify as cl
from . import families as fam
from . import surgery as sg
from .enumerate import STRATEGIES, EnumSpec, enumerate_k_regular, filter_nearly_platonic
from .errors import GraphError
from .planegraph import (
    PlaneGraph,
    are_isomorphic,
    are_isomorphic_abstract,
    parse_many,
    serialize,
)
from .verify import verify_2np_classification

log = logging.getLogger("nearplatonic")


class UsageError(Exception):
    pass


def render_dot(g: PlaneGraph) -> str:
    """Undirected dot text; the embedding survives only as comments."""
    lines = [f"# rotation v{v}: {' '.join(map(str, g.neighbors(v)))}" for v in range(g.n)]
    lines.append("graph G {")
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in sorted(g.edges())]
    lines.append("}")
    return "\n".join(lines) + "\n"


# argument helpers


def _key(s: str) -> str:
    return s.replace("-", "").replace("_", "").lower()


def _solid(name: str) -> fam.Solid:
    for s in fam.Solid:
        if _key(s.value) == _key(name):
            return s
    raise UsageError(f"unknown solid {name!r}")


def _family_id(name: str) -> fam.FamilyId:
    for f in fam.FamilyId:
        if _key(f.value) == _key(name):
            return f
    raise UsageError(f"unknown family {name!r}")


def _int(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise UsageError(f"expected an integer, got {s!r}") from None


def _gen(family: str, args: list[str]) -> PlaneGraph:
    key = _key(family)
    simple = {"prism": fam.prism, "antiprism": fam.antiprism, "barrel": fam.barrel,
              "widecycle": fam.wide_cycle}
    if key == "platonic":
        if len(args) != 1:
            raise UsageError("usage: gen platonic <solid>")
        return fam.platonic(_solid(args[0]))
    if key in simple:
        if len(args) != 1:
            raise UsageError(f"usage: gen {family} <n>")
        return simple[key](_int(args[0]))
    if key in ("edgecycle", "vertexcycle"):
        if len(args) != 2:
            raise UsageError(f"usage: gen {family} <solid> <c>")
        fn = fam.edge_cycle if key == "edgecycle" else fam.vertex_cycle
        return fn(_solid(args[0]), _int(args[1]))
    if key == "thickcycle":
        if len(args) != 2:
            raise UsageError("usage: gen thick-cycle <family id> <c>")
        return fam.thick_cycle(_family_id(args[0]), _int(args[1]))
    if len(args) != 1:
        raise UsageError(f"usage: gen {family} <param>")
    return fam.generate(_family_id(family), _int(args[0]))


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _one(path: str | None) -> PlaneGraph:
    graphs = parse_many(_read(path))
    if len(graphs) != 1:
        raise GraphError(f"expected one graph, got {len(graphs)}")
    return graphs[0]


# subcommands


def cmd_gen(a) -> int:
    _write(serialize(_gen(a.family, a.args)), a.out)
    return 0


def cmd_classify(a) -> int:
    out = []
    for g in parse_many(_read(a.inp)):
        out.append(cl.report_line(g, family=not a.no_family) + "\n")
    _write("".join(out), a.out)
    return 0


def cmd_iso(a) -> int:
    g = _one(a.inp)
    h = _one(a.against)
    same = are_isomorphic_abstract(g, h, a.limit) if a.abstract else are_isomorphic(g, h)
    _write("isomorphic\n" if same else "not isomorphic\n", a.out)
    return 0


def cmd_enumerate(a) -> int:
    spec = EnumSpec(a.k, a.max, strategy=a.strategy, parallelism=a.jobs)
    stream = enumerate_k_regular(spec)
    fh = sys.stdout if a.out in (None, "-") else open(a.out, "w")
    try:
        first = True
        if a.t is not None or a.report:
            pairs = filter_nearly_platonic(stream, a.t)
        else:
            pairs = ((g, None) for g in stream)
        for g, rep in pairs:
            if a.report:
                fh.write(cl.report_line(g, rep, family=rep.t == 2) + "\n")
            else:
                if not first:
                    fh.write("\n")
                fh.write(serialize(g))
                first = False
    finally:
        if fh is not sys.stdout:
            fh.close()
    return 0


def cmd_verify(a) -> int:
    res = verify_2np_classification(a.k, a.max, parallelism=a.jobs)
    path = a.report or f"verify_k{a.k}_max{a.max}.txt"
    res.write(path)
    sys.stdout.write(res.summary() + "\n")
    log.info("report written to %s", path)
    return 0 if res.ok else 1


def cmd_surgery(a) -> int:
    g = _one(a.inp)
    op = a.op
    args = [_int(x) for x in a.args]

    def need(n, usage):
        if len(args) != n:
            raise UsageError(f"usage: surgery {op} {usage}")

    if op == "relocate":
        need(3, "<p> <q> <attach_at>")
        res = sg.relocate_boundary_edge(g, (args[0], args[1]), args[2], outer=a.face).finalize()
    elif op == "chord":
        need(2, "<u> <v>")
        res = sg.add_chord(g, args[0], args[1], inside=a.face).finalize()
    elif op == "split":
        need(2, "<z> <j>")
        res = sg.split_vertex(g, args[0], args[1]).finalize()
    elif op == "amalgamate":
        need(2, "<x> <y>")
        res = sg.amalgamate_vertices(g, args[0], args[1], face=a.face).finalize()
    elif op == "cut-glue":
        need(5, "<u> <v> <face_u> <face_v> <copies>")
        strip = sg.cut_strip(g, (args[0], args[1]), args[2], args[3])
        res = sg.glue_cyclic_copies(strip, args[4])
    elif op == "reduce":
        need(0, "")
        res = sg.reduce_35_l3(g)
    elif op == "expand":
        need(0, "")
        res = sg.expand_35_l3(g)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown surgery {op!r}")
    _write(serialize(res), a.out)
    return 0


def cmd_export(a) -> int:
    _write(render_dot(_one(a.inp)), a.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nearplatonic",
                                description="Build, classify and enumerate nearly Platonic plane graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def io(sp, inp=True):
        if inp:
            sp.add_argument("--in", dest="inp", help="input file (default stdin)")
        sp.add_argument("--out", help="output file (default stdout)")

    sp = sub.add_parser("gen", help="generate a family member or solid")
    sp.add_argument("family")
    sp.add_argument("args", nargs="*")
    io(sp, inp=False)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("classify", help="report line per input graph")
    sp.add_argument("--no-family", action="store_true", help="skip family lookup")
    io(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("iso", help="compare two graphs")
    sp.add_argument("--against", required=True, help="second graph file")
    sp.add_argument("--abstract", action="store_true", help="ignore the embedding")
    sp.add_argument("--limit", type=int, default=16, help="vertex limit for --abstract")
    io(sp)
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("enumerate", help="all k-regular plane graphs up to an order")
    sp.add_argument("--k", type=int, required=True, choices=(3, 4, 5))
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--t", type=int, help="keep only t-nearly Platonic graphs")
    sp.add_argument("--report", action="store_true", help="classification lines instead of graphs")
    sp.add_argument("--strategy", choices=STRATEGIES, default=STRATEGIES[0])
    sp.add_argument("--jobs", type=int, help="worker processes")
    io(sp, inp=False)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="check the classification over an enumeration range")
    sp.add_argument("--k", type=int, required=True, choices=(3, 4, 5))
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--report", help="report file (default verify_k<K>_max<N>.txt)")
    sp.add_argument("--jobs", type=int, help="worker processes")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("surgery", help="apply one surgery operation")
    sp.add_argument("op", choices=("relocate", "chord", "split", "amalgamate",
                                   "cut-glue", "reduce", "expand"))
    sp.add_argument("args", nargs="*")
    sp.add_argument("--face", type=int, help="face index for relocate/chord/amalgamate")
    io(sp)
    sp.set_defaults(func=cmd_surgery)

    sp = sub.add_parser("export", help="write graphviz dot")
    sp.add_argument("--format", choices=("dot",), default="dot")
    io(sp)
    sp.set_defaults(func=cmd_export)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        if getattr(a, "max", None) is not None and a.max < a.k + 1:
            raise UsageError(f"--max must be at least {a.k + 1}")
        return a.func(a)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"nearplatonic: error: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"nearplatonic: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"nearplatonic: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
