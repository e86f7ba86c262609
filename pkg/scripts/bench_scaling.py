#!/usr/bin/env python3
"""Depth/count scaling sweeps for the arithmetic circuits.

Writes one CSV per kind (header: n,depth,toffoli_depth,cnot_depth,gates)
and prints the normalized-metric table used by the 2x-bound check.
"""

import argparse
import pathlib

from revladder.verify import rows_csv, rows_text, scaling_bench


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--kinds",
        default="adder,controlled_adder,incrementer,const_adder",
        help="comma-separated bench kinds",
    )
    parser.add_argument(
        "--n-list", default="64,128,256,512,1024,2048,4096", help="sizes"
    )
    parser.add_argument("--impl", choices=("log", "naive"), default="log")
    parser.add_argument("--out-dir", default="results", help="CSV directory")
    args = parser.parse_args()

    sizes = [int(tok) for tok in args.n_list.split(",") if tok.strip()]
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for kind in args.kinds.split(","):
        kind = kind.strip()
        rows = scaling_bench(kind, sizes, ladder_impl=args.impl, check_bounds=False)
        path = out_dir / f"{kind}_{args.impl}.csv"
        path.write_text(rows_csv(rows))
        print(f"== {kind} ({args.impl}) -> {path}")
        print(rows_text(rows))


if __name__ == "__main__":
    main()
