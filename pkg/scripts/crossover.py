#!/usr/bin/env python3
"""Depth crossover between the log-depth and naive (linear) adders."""

import argparse

from revladder.arith import synth_adder
from revladder.core import stats


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--n-list", default="16,32,64,128,256,512,1024,2048,4096"
    )
    args = parser.parse_args()
    sizes = [int(tok) for tok in args.n_list.split(",") if tok.strip()]
    print(f"{'n':>6} {'log depth':>10} {'naive depth':>12} {'ratio':>8}")
    for n in sizes:
        d_log = stats(synth_adder(n, ladder_impl="log")).total_depth
        d_naive = stats(synth_adder(n, ladder_impl="naive")).total_depth
        print(f"{n:>6} {d_log:>10} {d_naive:>12} {d_log / d_naive:>8.3f}")


if __name__ == "__main__":
    main()
