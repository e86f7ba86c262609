#!/usr/bin/env python3
"""Depth of the two-dirty-ancilla MCX decomposition versus control count."""

import argparse

from revladder.core import Circuit, stats
from revladder.mcx import synth_mcx_log


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-log2-k", type=int, default=12)
    args = parser.parse_args()
    print(f"{'k':>6} {'depth':>7} {'gates':>8} {'depth/log2(k)':>14}")
    for e in range(2, args.max_log2_k + 1):
        k = 1 << e
        dec = synth_mcx_log(list(range(k)), k, [k + 1, k + 2])
        st = stats(Circuit(k + 3, dec.body.gates))
        print(f"{k:>6} {st.total_depth:>7} {st.gate_count:>8} {st.total_depth / e:>14.2f}")


if __name__ == "__main__":
    main()
