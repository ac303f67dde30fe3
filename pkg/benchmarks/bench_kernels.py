"""Compare the compiled kernels against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]

Three workloads, matching the three kernels:
  * canonical   -- canonical form of every labeled 5-vertex tournament
                   (1024 masks x 120 permutations);
  * scan        -- closure scan of a minority-closed 512-element set of
                   10-bit masks (full C(512,3)/6 triple sweep, no early out);
  * backtrack   -- brute-force search on an unsatisfiable 18-variable CSP
                   (parity-style constraints engineered to force a deep
                   exhaustive search).
"""

from __future__ import annotations

import argparse
import random
import time

from orient import _fallback
from orient._kernels import _core  # None when the extension is not built
from orient.tournaments import _perm_arrays, pair_count


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_canonical(repeat: int):
    n = 5
    perms, dst, flip = _perm_arrays(n)
    npairs = pair_count(n)
    masks = list(range(1 << npairs))

    def run_fallback():
        for m in masks:
            _fallback.canonical_min(m, len(perms), npairs, dst, flip)

    def run_compiled():
        for m in masks:
            _core.canonical_min(m, len(perms), npairs, dst, flip)

    return run_fallback, run_compiled, f"{len(masks)} canonical forms at order {n}"


def bench_scan(repeat: int):
    # A GF(2) subspace is minority-closed, so the scan never exits early.
    rng = random.Random(7)
    basis = [rng.getrandbits(10) | (1 << i) for i in range(9)]
    span = {0}
    for b in basis:
        span |= {s ^ b for s in span}
    masks = sorted(span)

    def run_fallback():
        assert _fallback.scan_triples(masks, 0) is None

    def run_compiled():
        from array import array

        assert _core.scan_triples(array("Q", masks), 0, 10) is None

    return run_fallback, run_compiled, f"minority scan over {len(masks)} masks"


def bench_backtrack(repeat: int):
    # An inconsistent parity triangle over 18 variables: every branch must
    # be explored before concluding UNSAT.
    nvars = 18
    third = nvars // 3
    groups = [list(range(i * third, (i + 1) * third)) for i in range(3)]
    even = frozenset(
        v for v in range(1 << third) if bin(v).count("1") % 2 == 0
    )
    odd = frozenset(
        v for v in range(1 << third) if bin(v).count("1") % 2 == 1
    )
    scopes = [tuple(g) for g in groups] + [tuple(groups[2])]
    # three even-parity groups plus a clashing odd demand on the last group
    alloweds = [even, even, even, odd]
    order = list(range(nvars))
    depth_of = {v: d for d, v in enumerate(order)}
    scope_depths = [tuple(depth_of[v] for v in s) for s in scopes]

    def run_fallback():
        assert _fallback.backtrack(nvars, order, scope_depths, alloweds) is None

    def run_compiled():
        from orient import _kernels

        assert _kernels.backtrack(nvars, order, scope_depths, alloweds) is None

    return run_fallback, run_compiled, f"exhaustive UNSAT search, {nvars} variables"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _core is None:
        raise SystemExit("compiled extension not built; nothing to compare")
    for bench in (bench_canonical, bench_scan, bench_backtrack):
        fb, comp, label = bench(args.repeat)
        t_fb = _time(fb, args.repeat)
        t_c = _time(comp, args.repeat)
        print(
            f"{label}\n"
            f"  fallback: {t_fb * 1000:9.2f} ms"
            f"   compiled: {t_c * 1000:9.2f} ms"
            f"   speedup: {t_fb / t_c:6.1f}x"
        )


if __name__ == "__main__":
    main()
