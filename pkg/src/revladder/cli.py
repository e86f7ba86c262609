"""Command-line front end.

Verbs: synth, stats, simulate, verify, lower, bench, export.

Conventions (also stated in ``--help``):

* Bitstrings are written qubit 0 first (qubit 0 is the least
  significant bit of any integer interpretation).
* All runs are deterministic: the random-verification seed defaults to
  the fixed constant 123456789.
* Exit codes: 0 success, 1 verification counterexample or bound
  violation, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    Circuit,
    CircuitError,
    LayeredCircuit,
    asap_layers,
    simulate,
    stats,
)
from .io import emit_qasm, emit_text, parse_text
from .ladders import naive_ladder, synth_ladder1, synth_ladder_alpha
from .mcx import lower_layered
from .verify import (
    BENCH_KINDS,
    BoundViolated,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    build_circuit,
    rows_csv,
    scaling_bench,
    verify_family,
)

_KIND_ORDER = ("x", "cx", "ccx", "mcx")

SYNTH_FAMILIES = (
    "ladder1",
    "ladder_alpha",
    "fanout1",
    "fanout2",
    "mcx",
    "adder",
    "incrementer",
    "const_adder",
    "carry",
)


def _parse_alpha(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise CircuitError(f"bad --alpha list {text!r}")


def _family_params(args) -> tuple[str, dict]:
    """Map CLI flags to an oracle kind and its parameter dict."""
    family = args.family
    if family == "ladder1":
        if args.n is None:
            raise CircuitError("ladder1 requires --n")
        return "ladder", {"alpha": tuple(range(1, args.n))}
    if family == "ladder_alpha":
        if not args.alpha:
            raise CircuitError("ladder_alpha requires --alpha")
        return "ladder", {"alpha": _parse_alpha(args.alpha)}
    if family == "adder":
        if args.n is None:
            raise CircuitError("adder requires --n")
        kind = "controlled_adder" if args.controlled else "adder"
        return kind, {
            "n": args.n,
            "mode": "modular" if args.modular else "with_carry",
        }
    if family == "incrementer":
        if args.n is None:
            raise CircuitError("incrementer requires --n")
        return "incrementer", {
            "n": args.n,
            "controlled": args.controlled,
            "ancilla_mode": args.ancilla_mode,
        }
    if family == "const_adder":
        if args.n is None or args.const is None:
            raise CircuitError("const_adder requires --n and --const")
        return "const_adder", {"n": args.n, "c": args.const}
    if family == "carry":
        if args.n is None or args.const is None:
            raise CircuitError("carry requires --n and --const")
        return "carry", {"n": args.n, "c": args.const}
    if family in ("fanout1", "fanout2"):
        if args.n is None:
            raise CircuitError(f"{family} requires --n")
        return family, {"n": args.n}
    if family == "mcx":
        if args.n is None:
            raise CircuitError("mcx requires --n (the number of controls)")
        return "mcx", {"k": args.n, "ancillae": args.ancillae}
    raise CircuitError(f"unknown family {family!r}")


def _build(args) -> Circuit:
    family = args.family
    impl = args.impl
    if family == "ladder1":
        if args.n is None:
            raise CircuitError("ladder1 requires --n")
        if impl == "naive":
            return naive_ladder(tuple(range(1, args.n)))
        return synth_ladder1(args.n).flatten()
    if family == "ladder_alpha":
        if not args.alpha:
            raise CircuitError("ladder_alpha requires --alpha")
        alpha = _parse_alpha(args.alpha)
        if impl == "naive":
            return naive_ladder(alpha)
        return synth_ladder_alpha(alpha).flatten()
    if family == "mcx":
        # raw MCX plus spare wires; apply `lower` to decompose it
        if args.n is None:
            raise CircuitError("mcx requires --n (the number of controls)")
        k, anc = args.n, args.ancillae
        return Circuit(k + 1 + anc, [(tuple(range(k)), k)])
    kind, params = _family_params(args)
    return build_circuit(kind, params, impl)


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc}")


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc}")


class _IOFailure(Exception):
    pass


def _stats_json(circuit: Circuit) -> str:
    st = stats(circuit)
    gates = {k: st.count_by_kind[k] for k in _KIND_ORDER if k in st.count_by_kind}
    by_kind = {k: st.depth_by_kind[k] for k in _KIND_ORDER if k in st.depth_by_kind}
    return json.dumps(
        {
            "qubits": st.qubit_count,
            "gates": gates,
            "depth": st.total_depth,
            "depth_by_kind": by_kind,
        },
        indent=2,
    )


def _cmd_synth(args) -> int:
    circuit = _build(args)
    _write_text(args.output, emit_text(circuit))
    return 0


def _cmd_stats(args) -> int:
    circuit = parse_text(_read_text(args.file))
    print(_stats_json(circuit))
    return 0


def _cmd_simulate(args) -> int:
    circuit = parse_text(_read_text(args.file))
    bits = args.input
    if len(bits) != circuit.qubit_count or set(bits) - {"0", "1"}:
        raise CircuitError(
            f"--input must be a {circuit.qubit_count}-bit string of 0/1 "
            "(qubit 0 first)"
        )
    state = int(bits[::-1], 2) if bits else 0
    out = simulate(circuit, state)
    print("".join(str((out >> i) & 1) for i in range(circuit.qubit_count)))
    return 0


def _cmd_verify(args) -> int:
    kind, params = _family_params(args)
    ce = verify_family(
        kind,
        params,
        impl=args.impl,
        mode=args.mode,
        samples=args.samples,
        seed=args.seed,
    )
    if ce is None:
        print(f"pass: {args.family} {params} ({args.mode})")
        return 0
    print(
        f"FAIL: {args.family} {ce.params}: input state {ce.input_state} -> "
        f"circuit {ce.circuit_output}, oracle {ce.oracle_output}",
        file=sys.stderr,
    )
    return 1


def _cmd_lower(args) -> int:
    circuit = parse_text(_read_text(args.file))
    layered = LayeredCircuit(circuit.qubit_count, asap_layers(circuit))
    lowered = lower_layered(layered, policy=args.policy)
    _write_text(args.output, emit_text(lowered))
    return 0


def _cmd_bench(args) -> int:
    try:
        n_list = [int(tok) for tok in args.n_list.split(",") if tok.strip()]
    except ValueError:
        raise CircuitError(f"bad --n-list {args.n_list!r}")
    try:
        rows = scaling_bench(
            args.family, n_list, ladder_impl=args.impl, check_bounds=args.check
        )
    except BoundViolated as exc:
        print(f"bound violated: {exc}", file=sys.stderr)
        return 1
    _write_text(args.output, rows_csv(rows))
    return 0


def _cmd_export(args) -> int:
    circuit = parse_text(_read_text(args.file))
    if args.format != "qasm":
        raise CircuitError(f"unknown export format {args.format!r}")
    _write_text(args.output, emit_qasm(circuit))
    return 0


def _add_family_flags(p: argparse.ArgumentParser, families) -> None:
    p.add_argument("family", choices=families)
    p.add_argument("--n", type=int, help="size parameter (mcx: control count)")
    p.add_argument("--alpha", help="comma-separated ladder alpha, e.g. 2,4,6")
    p.add_argument("--const", type=int, help="constant for const_adder/carry")
    p.add_argument("--controlled", action="store_true")
    p.add_argument("--modular", action="store_true", help="drop the carry-out")
    p.add_argument("--impl", choices=("log", "naive"), default="log")
    p.add_argument(
        "--ancilla-mode",
        choices=("one_dirty", "n_dirty"),
        default="one_dirty",
        help="incrementer borrowed-qubit budget",
    )
    p.add_argument(
        "--ancillae",
        type=int,
        default=2,
        help="spare wires appended to a raw mcx circuit",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revladder",
        description=(
            "Logarithmic-depth reversible ladder circuits and ancilla-free "
            "arithmetic over {X, CNOT, Toffoli}.  Bitstrings are qubit 0 "
            "first; qubit 0 is the least significant bit.  All commands are "
            f"deterministic (default seed {DEFAULT_SEED})."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("synth", help="synthesize a circuit as text")
    _add_family_flags(p, SYNTH_FAMILIES)
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("stats", help="print JSON stats for a circuit file")
    p.add_argument("file", help="circuit text file ('-' for stdin)")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("simulate", help="run a basis state through a circuit")
    p.add_argument("file", help="circuit text file ('-' for stdin)")
    p.add_argument(
        "--input", required=True, help="input bitstring, qubit 0 first"
    )
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("verify", help="check a family against its integer oracle")
    _add_family_flags(
        p,
        (
            "ladder1",
            "ladder_alpha",
            "fanout1",
            "fanout2",
            "mcx",
            "adder",
            "incrementer",
            "const_adder",
            "carry",
        ),
    )
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lower", help="rewrite MCX gates over {X, CNOT, Toffoli}")
    p.add_argument("file", help="circuit text file ('-' for stdin)")
    p.add_argument("--policy", choices=("log", "linear"), default="log")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_lower)

    p = sub.add_parser("bench", help="measure depth/count scaling, emit CSV")
    p.add_argument("family", choices=BENCH_KINDS)
    p.add_argument("--n-list", required=True, help="comma-separated sizes")
    p.add_argument("--impl", choices=("log", "naive"), default="log")
    p.add_argument(
        "--check",
        action="store_true",
        help="enforce the 2x normalized-metric bound (exit 1 on violation)",
    )
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("export", help="emit an OpenQASM-3-flavored listing")
    p.add_argument("file", help="circuit text file ('-' for stdin)")
    p.add_argument("--format", default="qasm", help="only 'qasm' is supported")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_export)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CircuitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
