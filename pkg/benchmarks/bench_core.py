"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_core.py [--repeat N]

Times canonical codes over a batch of family members and the orderly search
for a few (k, n) pairs, and checks both backends agree.
"""

from __future__ import annotations

import argparse
import time

from nearplatonic.core import get_kernels
from nearplatonic.families import FamilyId, generate

CODE_BATCH = [(FamilyId.Prism, 12), (FamilyId.Barrel, 8), (FamilyId.IcosahedronWideCycle, 6),
              (FamilyId.DodecahedronEdgeCycle, 2), (FamilyId.IcosahedronFirstThickCycle, 3)]
SEARCHES = [(3, 12), (4, 11), (3, 14), (5, 12)]


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    a = p.parse_args(argv)
    try:
        fast = get_kernels("cython")
    except ImportError:
        raise SystemExit("compiled extension not built; run pip install -e . first")
    slow = get_kernels("python")
    graphs = [generate(f, n) for f, n in CODE_BATCH]
    flat = [(g.off, g.nbr, g.rev) for g in graphs]

    print(f"{'task':<28}{'cython s':>10}{'python s':>10}{'speedup':>9}")

    def codes(k):
        return lambda: [k.canonical_code(*x) for x in flat]

    tc, rc = _best(codes(fast), a.repeat)
    tp, rp = _best(codes(slow), a.repeat)
    assert [list(x) for x in rc] == [list(x) for x in rp]
    print(f"{'canonical codes (5 graphs)':<28}{tc:>10.4f}{tp:>10.4f}{tp / tc:>9.1f}")

    for k, n in SEARCHES:
        tc, rc = _best(lambda: fast.enumerate_regular(k, n), a.repeat)
        tp, rp = _best(lambda: slow.enumerate_regular(k, n), 1)
        assert sorted(map(str, rc)) == sorted(map(str, rp))
        print(f"{f'search k={k} n={n} ({len(rc)})':<28}{tc:>10.4f}{tp:>10.4f}{tp / tc:>9.1f}")


if __name__ == "__main__":
    main()
