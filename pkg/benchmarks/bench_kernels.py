"""Benchmark the diagonal-line kernel backends against each other.

Runs the pure-Python and (when built) compiled implementations of
``diag_line_histogram`` on the bundled sample's word codes and on synthetic
sequences, and reports per-call times plus the speedup. Results double as a
sanity check: both backends must return identical histograms.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from bywords import column_values, recurrence_matrix
from bywords._kernels import BACKEND, backends
from bywords.cli import bundled, main as cli_main


def sample_codes(tmp_dir):
    """Word codes of the bundled sample, via the normal pipeline."""
    out = tmp_dir / "bench"
    code = cli_main(["pipeline", "--input", str(bundled("beowulf.txt")),
                     "--out", str(out)])
    if code != 0:
        raise SystemExit("pipeline failed while preparing benchmark input")
    values = column_values(out / "beowulf.matrix.csv", "word")
    return recurrence_matrix(values, key="word").codes


def synthetic_codes(n, alphabet, seed):
    import random

    rng = random.Random(seed)
    return tuple(rng.randrange(alphabet) for _ in range(n))


def timed(func, codes, repeat):
    best = None
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = func(codes)
        elapsed = time.perf_counter() - started
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def run(repeat):
    import tempfile
    from pathlib import Path

    impls = backends()
    with tempfile.TemporaryDirectory() as tmp:
        cases = [
            ("sample words (n=2337)", sample_codes(Path(tmp))),
            ("synthetic n=2000, alphabet 8", synthetic_codes(2000, 8, 1)),
            ("synthetic n=5000, alphabet 50", synthetic_codes(5000, 50, 2)),
            ("synthetic n=5000, alphabet 2", synthetic_codes(5000, 2, 3)),
        ]

    print(f"active backend: {BACKEND}")
    header = f"{'case':34} {'pure':>10}"
    if "native" in impls:
        header += f" {'native':>10} {'speedup':>8}"
    print(header)
    for name, codes in cases:
        pure_time, pure_result = timed(
            impls["pure"].diag_line_histogram, codes, repeat
        )
        row = f"{name:34} {pure_time * 1e3:9.2f}ms"
        if "native" in impls:
            native_time, native_result = timed(
                impls["native"].diag_line_histogram, codes, repeat
            )
            if native_result != pure_result:
                raise SystemExit(f"backend results disagree on {name!r}")
            row += f" {native_time * 1e3:9.2f}ms {pure_time / native_time:7.1f}x"
        print(row)
    if "native" not in impls:
        print("compiled backend not built; showing pure-Python times only")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions per case (default: 5)")
    run(parser.parse_args().repeat)
