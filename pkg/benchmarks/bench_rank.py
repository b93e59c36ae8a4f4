"""Compiled kernel versus pure-Python elimination.

    python benchmarks/bench_rank.py [--repeat N]

Times ``rank`` on the largest oracle systems of a few generated instances
over Q and GF(p), then a full oracle report per backend.
"""

from __future__ import annotations

import argparse
import time

from qhh import enumerate_basis
from qhh.generator import GenConfig, take
from qhh.linalg import BACKEND, rank
from qhh.oracle import BimoduleSystem
from qhh.report import Analysis


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--instances", type=int, default=40)
    args = ap.parse_args(argv)
    if BACKEND != "compiled":
        print("compiled kernel not available; nothing to compare")
        return 1

    inst = take(GenConfig(seed=11, max_basis=120), 200)
    inst = sorted(inst, key=lambda p: -len(enumerate_basis(p)))[:5]
    print(f"{'|B|':>5} {'vars':>7} {'rows':>7} {'char':>5} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for p in inst:
        b = enumerate_basis(p)
        m = BimoduleSystem(b).alt_matrix()
        for ch in (0, 3):
            rc = rank(m, ch, backend="compiled")
            rp = rank(m, ch, backend="python")
            assert rc == rp, (p.name, ch, rc, rp)
            tc = _best(lambda: rank(m, ch, backend="compiled"), args.repeat)
            tp = _best(lambda: rank(m, ch, backend="python"), args.repeat)
            print(f"{len(b):5} {m.ncols:7} {m.nrows:7} {ch:5} {tc:11.4f} {tp:10.4f} {tp / tc:8.1f}")

    import qhh.linalg as la

    batch = take(GenConfig(seed=12), args.instances)
    timings = {}
    for backend in ("compiled", "python"):
        saved = la.BACKEND
        la.BACKEND = backend
        try:
            t = time.perf_counter()
            for p in batch:
                an = Analysis(p)
                for ch in (0, 2, 3, 5):
                    an.report(ch, with_oracle=True)
            timings[backend] = time.perf_counter() - t
        finally:
            la.BACKEND = saved
    print(f"end to end, {len(batch)} instances x 4 characteristics with oracle: "
          f"compiled {timings['compiled']:.2f} s, python {timings['python']:.2f} s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
