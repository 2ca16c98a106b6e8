#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the hot engine workloads on representative rings with each backend
and prints a timing table.  Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from idealcover import _pykernels
from idealcover import kernels
from idealcover.families import build_augmented_ring, build_null_ring
from idealcover.gf import make_field
from idealcover.ring import dorroh

try:
    from idealcover import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    r32 = build_augmented_ring(3, make_field(2, 1)).ring
    r23 = build_augmented_ring(2, make_field(3, 1)).ring
    ext = dorroh(r23)
    null = build_null_ring(3, 4)
    rng = random.Random(0)
    vecs = [tuple(rng.randrange(2) for _ in range(12)) for _ in range(2000)]

    def bench_radical_scan(k):
        k.radical_members(r32.p, r32.d, r32._flat)

    def bench_lqr_table(k):
        k.lqr_table(r23.p, r23.d, r23._flat)

    def bench_cyclic_closures(k):
        for idx in range(0, ext.order, 3):
            x = ext.element_from_index(idx)
            k.closure_rows(ext.p, ext.d, ext._flat, (x,), 0)

    def bench_identity_scan(k):
        k.identity_scan(ext.p, ext.d, ext._flat)

    def bench_rref_batch(k):
        for i in range(0, len(vecs) - 6, 6):
            k.rref(2, 12, vecs[i:i + 6])

    def bench_span_bitpack(k):
        rows = k.rref(3, null.d, [(1, 0, 0, 1), (0, 1, 0, 2), (0, 0, 1, 1)])
        for _ in range(50):
            k.span_bitpack(3, null.d, rows)

    def bench_associativity(k):
        for _ in range(20):
            k.associativity_witness(r32.p, r32.d, r32._flat)

    return [
        ("radical membership scan, 4096-element ring", bench_radical_scan),
        ("quasi-regularity table, 729-element ring", bench_lqr_table),
        ("cyclic ideal closures, 2187-element unital ring",
         bench_cyclic_closures),
        ("identity scan, 2187-element unital ring", bench_identity_scan),
        ("echelon reduction, 333 batches of 6x12", bench_rref_batch),
        ("span bit tables, 50 x 27-element subspace", bench_span_bitpack),
        ("associativity check, 20 x dim-12 table", bench_associativity),
    ]


def run(repeat):
    backends = [("pure", _pykernels)]
    if _ckernels is not None:
        backends.append(("compiled", _ckernels))
    else:
        print("note: compiled kernels not built; showing pure only")
    print(f"active backend at import: {kernels.BACKEND}\n")
    header = f"{'workload':<50}" + "".join(f"{name:>12}" for name, _ in
                                           backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, fn in workloads():
        times = []
        for _name, mod in backends:
            best = min(_timed(fn, mod) for _ in range(repeat))
            times.append(best)
        row = f"{label:<50}" + "".join(f"{t * 1000:>10.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


def _timed(fn, mod):
    start = time.perf_counter()
    fn(mod)
    return time.perf_counter() - start


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="best-of-N timing (default 3)")
    run(parser.parse_args().repeat)
