"""Benchmark the gmp and pure arithmetic lanes on the package's hot kernels.

Run as:  python benchmarks/bench_backends.py [--repeat N]

Each kernel is timed on every available lane with identical inputs, and
the results are cross-checked for equality, so this doubles as a lane
consistency test at sizes the unit tests do not reach.
"""

from __future__ import annotations

import argparse
import time

import egyfrac._backend as _b
from egyfrac import (
    c_value,
    clear_terms_cache,
    fuzz_comparison,
    pow2_root_bounds,
    score_compare,
    ScoreExpr,
    term,
)


def bench_terms() -> object:
    """Doubly-exponential squaring chain: s_22(1) has ~600k digits."""
    clear_terms_cache()
    return int(term(1, 22)) % (10**9)


def bench_isqrt_tower() -> object:
    """Nested integer square roots on a ~41k-digit operand."""
    return str(pow2_root_bounds(1807, 5, 1280).lo)[:64]


def bench_c_value() -> object:
    """Constant enclosure at 150 digits (large-grid nested rooting)."""
    clear_terms_cache()
    iv = c_value(1, 150)
    return str(iv.lo)[:64]


def bench_score_compare() -> object:
    """Comparison that clears one side through 14 squarings (~49k digits)."""
    clear_terms_cache()
    return score_compare(ScoreExpr(199, -7), ScoreExpr(200, 7)).value


def bench_fuzz() -> object:
    """Twenty length-14 comparison-lemma cases (integer cross-multiplies)."""
    return fuzz_comparison(seed=1, cases=20, length=14).to_text()


KERNELS = [
    ("sequence terms, ~440k digits", bench_terms),
    ("nested isqrt tower", bench_isqrt_tower),
    ("constant enclosure, 150 digits", bench_c_value),
    ("score comparison, cleared seeds", bench_score_compare),
    ("lemma fuzz, 20 cases", bench_fuzz),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timed repeats")
    args = parser.parse_args()

    lanes = _b.available_backends()
    print(f"lanes: {', '.join(lanes)} (repeat={args.repeat}, best-of shown)")
    header = f"{'kernel':<34}" + "".join(f"{lane:>12}" for lane in lanes)
    print(header)
    print("-" * len(header))
    for label, kernel in KERNELS:
        timings = []
        results = []
        for lane in lanes:
            with _b.use_backend(lane):
                best = float("inf")
                result = None
                for _ in range(args.repeat):
                    start = time.perf_counter()
                    result = kernel()
                    best = min(best, time.perf_counter() - start)
            timings.append(best)
            results.append(result)
        if any(r != results[0] for r in results[1:]):
            raise AssertionError(f"lane results disagree for {label!r}")
        row = f"{label:<34}" + "".join(f"{t:>11.3f}s" for t in timings)
        print(row)
    clear_terms_cache()


if __name__ == "__main__":
    main()
