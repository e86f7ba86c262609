"""Independent verification: integer oracles, closed-form checks and
scaling benchmarks.

Everything here is circuit-free where it matters: oracles are computed
with plain integer/bit arithmetic on basis states, so a bug in the
synthesizers cannot certify itself.  The oracles operate columnwise (one
big integer per qubit, one bit per sampled state), which makes both
exhaustive and randomized bulk comparison cheap; :func:`oracle_eval` is
the single-state view of the same code.

State layouts match the default register layouts of the synthesizers in
:mod:`revladder.arith`, :mod:`revladder.ladders` and :mod:`revladder.mcx`.
"""

from __future__ import annotations

import gc
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    synth_adder,
    synth_carry,
    synth_const_adder,
    synth_controlled_adder,
    synth_incrementer,
)
from .core import (
    BadParameter,
    Circuit,
    CircuitError,
    LayeredCircuit,
    TRUTH_TABLE_MAX_QUBITS,
    TooManyQubits,
    base_columns,
    column_state,
    random_columns,
    simulate_columns,
    stats,
)
from .ladders import (
    ladder_count_formula,
    ladder_depth_formula,
    ladder_oracle,
    naive_ladder,
    synth_fanout1,
    synth_fanout2,
    synth_ladder1,
    synth_ladder_alpha,
    validate_alpha,
)
from .mcx import synth_mcx_linear, synth_mcx_log


class BadParams(BadParameter):
    pass


class BoundViolated(CircuitError):
    pass


DEFAULT_SEED = 123456789
DEFAULT_SAMPLES = 100_000

ORACLE_KINDS = (
    "adder",
    "controlled_adder",
    "incrementer",
    "const_adder",
    "carry",
    "fanout1",
    "fanout2",
    "ladder",
    "mcx",
)


# ---------------------------------------------------------------------------
# Columnwise integer oracles.
# ---------------------------------------------------------------------------


def _ripple_columns(
    a_cols: list[int], b_cols: list[int], carry_in: int, full: int
) -> tuple[list[int], int]:
    """Columnwise ripple-carry addition: returns sum columns and carry-out.

    ``full`` is the all-ones mask over the sample batch; ``carry_in`` is a
    column (one carry bit per sampled state).
    """
    carry = carry_in
    out = []
    for x, y in zip(a_cols, b_cols):
        out.append(x ^ y ^ carry)
        carry = (x & y) | (carry & (x ^ y))
        carry &= full
    return out, carry


def _const_columns(c: int, n: int, full: int) -> list[int]:
    return [full if (c >> i) & 1 else 0 for i in range(n)]


def oracle_width(kind: str, params: dict) -> int:
    """Total qubit count of the default layout for the given oracle kind."""
    p = params
    if kind == "adder":
        return 2 * p["n"] + (1 if p.get("mode", "with_carry") == "with_carry" else 0)
    if kind == "controlled_adder":
        return 2 * p["n"] + 1 + (
            1 if p.get("mode", "with_carry") == "with_carry" else 0
        )
    if kind == "incrementer":
        n_anc = p["n"] if p.get("ancilla_mode", "one_dirty") == "n_dirty" else 1
        return p["n"] + n_anc + (1 if p.get("controlled", False) else 0)
    if kind == "const_adder":
        return p["n"] + 1
    if kind == "carry":
        return p["n"]
    if kind == "fanout1":
        return p["n"] + 1
    if kind == "fanout2":
        return 2 * p["n"] + 1
    if kind == "ladder":
        return validate_alpha(p["alpha"])[-1] + 1
    if kind == "mcx":
        return p["k"] + 1 + p.get("ancillae", 2)
    raise BadParams(f"unknown oracle kind {kind!r}")


def oracle_columns(
    kind: str, params: dict, columns: list[int], samples: int
) -> list[int]:
    """Apply the defining integer map of ``kind`` to a batch of basis
    states stored columnwise.  Pure integer arithmetic; no circuits."""
    p = params
    full = (1 << samples) - 1
    cols = list(columns)
    width = oracle_width(kind, params)
    if len(cols) != width:
        raise BadParams(f"{kind}: expected {width} columns, got {len(cols)}")

    if kind == "adder":
        n = p["n"]
        a, b = cols[:n], cols[n : 2 * n]
        s, carry = _ripple_columns(a, b, 0, full)
        cols[n : 2 * n] = s
        if p.get("mode", "with_carry") == "with_carry":
            cols[2 * n] ^= carry
        return cols

    if kind == "controlled_adder":
        n = p["n"]
        c = cols[0]
        a, b = cols[1 : n + 1], cols[n + 1 : 2 * n + 1]
        s, carry = _ripple_columns([x & c for x in a], b, 0, full)
        cols[n + 1 : 2 * n + 1] = s
        if p.get("mode", "with_carry") == "with_carry":
            cols[2 * n + 1] ^= carry & c
        return cols

    if kind == "incrementer":
        n = p["n"]
        n_anc = n if p.get("ancilla_mode", "one_dirty") == "n_dirty" else 1
        carry = cols[n + n_anc] if p.get("controlled", False) else full
        for i in range(n):
            v = cols[i]
            cols[i] = v ^ carry
            carry &= v
        return cols

    if kind == "const_adder":
        n = p["n"]
        s, _ = _ripple_columns(cols[:n], _const_columns(p["c"], n, full), 0, full)
        cols[:n] = s
        return cols

    if kind == "carry":
        n = p["n"]
        m = (n + 1) // 2
        c = p["c"] & ((1 << m) - 1)
        _, carry = _ripple_columns(cols[:m], _const_columns(c, m, full), 0, full)
        cols[n - 1] ^= carry
        return cols

    if kind == "fanout1":
        c = cols[0]
        for i in range(1, len(cols)):
            cols[i] ^= c
        return cols

    if kind == "fanout2":
        n = p["n"]
        c = cols[0]
        for i in range(n):
            cols[2 + 2 * i] ^= c & cols[1 + 2 * i]
        return cols

    if kind == "ladder":
        alpha = validate_alpha(p["alpha"])
        lo = 0
        original = list(cols)
        for a_i in alpha:
            acc = full
            for q in range(lo, a_i):
                acc &= original[q]
                if not acc:
                    break
            cols[a_i] ^= acc
            lo = a_i
        return cols

    if kind == "mcx":
        k = p["k"]
        acc = full
        for q in range(k):
            acc &= cols[q]
            if not acc:
                break
        cols[k] ^= acc
        return cols

    raise BadParams(f"unknown oracle kind {kind!r}")


def oracle_eval(kind: str, params: dict, state: int) -> int:
    """Image of a single basis state under the defining integer map."""
    width = oracle_width(kind, params)
    if not 0 <= state < (1 << width):
        raise BadParams(f"state {state} out of range for width {width}")
    cols = [(state >> i) & 1 for i in range(width)]
    out = oracle_columns(kind, params, cols, 1)
    return column_state(out, 0)


# ---------------------------------------------------------------------------
# Circuit construction per oracle kind (default layouts).
# ---------------------------------------------------------------------------


def build_circuit(kind: str, params: dict, impl: str = "log") -> Circuit:
    """Synthesize the circuit whose semantics :func:`oracle_eval` defines."""
    p = params
    if kind == "adder":
        return synth_adder(
            p["n"], mode=p.get("mode", "with_carry"), ladder_impl=impl
        )
    if kind == "controlled_adder":
        return synth_controlled_adder(
            p["n"], mode=p.get("mode", "with_carry"), ladder_impl=impl
        )
    if kind == "incrementer":
        return synth_incrementer(
            p["n"],
            controlled=p.get("controlled", False),
            ancilla_mode=p.get("ancilla_mode", "one_dirty"),
            ladder_impl=impl,
        )
    if kind == "const_adder":
        return synth_const_adder(p["n"], p["c"], ladder_impl=impl)
    if kind == "carry":
        return synth_carry(p["n"], p["c"], ladder_impl=impl)
    if kind == "fanout1":
        return synth_fanout1(p["n"])
    if kind == "fanout2":
        return synth_fanout2(p["n"])
    if kind == "ladder":
        alpha = validate_alpha(p["alpha"])
        if impl == "naive":
            return naive_ladder(alpha)
        return synth_ladder_alpha(alpha).flatten()
    if kind == "mcx":
        k = p["k"]
        anc = p.get("ancillae", 2)
        controls = list(range(k))
        if p.get("policy", "log") == "linear":
            return Circuit(
                k + 1 + anc,
                synth_mcx_linear(controls, k, list(range(k + 1, k + 1 + anc))).gates,
            )
        dec = synth_mcx_log(controls, k, list(range(k + 1, k + 1 + anc))[:2])
        return Circuit(k + 1 + anc, dec.body.gates)
    raise BadParams(f"unknown oracle kind {kind!r}")


@dataclass
class Counterexample:
    kind: str
    params: dict
    input_state: int
    circuit_output: int
    oracle_output: int


def verify_family(
    kind: str,
    params: dict,
    impl: str = "log",
    mode: str = "exhaustive",
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    circuit: Circuit | None = None,
) -> Counterexample | None:
    """Compare a synthesized circuit against its integer oracle.

    Returns ``None`` on agreement, otherwise the lowest-index sampled
    counterexample.  ``mode="exhaustive"`` runs all basis states (width
    capped); ``mode="random"`` runs ``samples`` seeded states.
    """
    if circuit is None:
        circuit = build_circuit(kind, params, impl)
    width = oracle_width(kind, params)
    if circuit.qubit_count != width:
        raise BadParams(
            f"{kind}: circuit width {circuit.qubit_count} != oracle width {width}"
        )
    if mode == "exhaustive":
        if width > TRUTH_TABLE_MAX_QUBITS:
            raise TooManyQubits(
                f"exhaustive verification capped at {TRUTH_TABLE_MAX_QUBITS} qubits"
            )
        inputs = base_columns(width)
        count = 1 << width
    elif mode == "random":
        inputs = random_columns(width, samples, seed)
        count = samples
    else:
        raise BadParams(f"unknown mode {mode!r}")
    got = simulate_columns(circuit, inputs, count)
    want = oracle_columns(kind, params, inputs, count)
    diff = 0
    for g, w in zip(got, want):
        diff |= g ^ w
    if diff == 0:
        return None
    index = (diff & -diff).bit_length() - 1
    return Counterexample(
        kind=kind,
        params=dict(params),
        input_state=column_state(inputs, index),
        circuit_output=column_state(got, index),
        oracle_output=column_state(want, index),
    )


# ---------------------------------------------------------------------------
# Closed-form checks.
# ---------------------------------------------------------------------------


@dataclass
class ClosedFormReport:
    family: str
    checked: int
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_closed_forms(
    family: str, sizes, alphas=None
) -> ClosedFormReport:
    """Verify the exact depth/count formulas of the log-depth ladders.

    ``family`` is ``ladder1`` (sizes are qubit counts n) or
    ``ladder_alpha`` (sizes are gate parameters k, built with the
    evenly-spaced alpha unless ``alphas`` supplies one per size).  For a
    ladder over m >= 2 wires/positions the layer count must equal
    ``ladder_depth_formula(m)`` and the gate count
    ``ladder_count_formula(m)``; any mismatch becomes a report entry.
    """
    sizes = list(sizes)
    if family not in ("ladder1", "ladder_alpha"):
        raise BadParams(f"unknown family {family!r}")
    report = ClosedFormReport(family=family, checked=len(sizes))
    # The sweep churns through millions of short-lived, acyclic gate
    # tuples; cycle collection is pure overhead here and can dominate
    # the runtime when the heap is already large.
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        _check_closed_forms(family, sizes, alphas, report)
    finally:
        if gc_was_enabled:
            gc.enable()
    return report


def _check_closed_forms(family, sizes, alphas, report) -> None:
    for idx, m in enumerate(sizes):
        if not 2 <= m <= (1 << 20):
            raise BadParams(f"size {m} outside [2, 2^20]")
        if family == "ladder1":
            lc = synth_ladder1(m)
        else:
            alpha = (
                validate_alpha(alphas[idx])
                if alphas is not None
                else tuple(range(2, 2 * m, 2))
            )
            if len(alpha) != m - 1:
                raise BadParams(f"alpha for k={m} must have {m - 1} entries")
            lc = synth_ladder_alpha(alpha)
        depth, count = len(lc.layers), lc.gate_count()
        want_d, want_c = ladder_depth_formula(m), ladder_count_formula(m)
        if depth != want_d or count != want_c:
            report.violations.append(
                {
                    "size": m,
                    "depth": depth,
                    "expected_depth": want_d,
                    "count": count,
                    "expected_count": want_c,
                }
            )


# ---------------------------------------------------------------------------
# Scaling benchmarks.
# ---------------------------------------------------------------------------


@dataclass
class ScalingRow:
    n: int
    depth: int
    toffoli_depth: int
    cnot_depth: int
    gate_count: int
    normalized: dict


_DEPTH_EXP = {"adder": 2, "controlled_adder": 2, "incrementer": 2, "const_adder": 3}
_COUNT_EXP = {"adder": 1, "controlled_adder": 1, "incrementer": 1, "const_adder": 2}

BENCH_KINDS = tuple(_DEPTH_EXP)


def _log2_exact(n: int) -> Fraction | float:
    if n & (n - 1) == 0:
        return Fraction(n.bit_length() - 1)
    import math

    return math.log2(n)


def bench_params(kind: str, n: int) -> dict:
    """Deterministic benchmark parameters for one size (documented: the
    constant adder uses the alternating-bit constant floor(2^n / 3))."""
    if kind == "const_adder":
        return {"n": n, "c": (1 << n) // 3}
    return {"n": n}


def scaling_bench(
    kind: str,
    n_list,
    ladder_impl: str = "log",
    check_bounds: bool = True,
) -> list[ScalingRow]:
    """Build and measure one circuit per size; optionally assert bounds.

    Normalized metrics (exact rationals for power-of-two n): depth over
    (log2 n)^e and gate count over n*(log2 n)^(e-1), with e = 2 for the
    adders and incrementer and e = 3 for the constant adder.  With
    ``check_bounds`` the maximum of each normalized metric over sizes
    n >= 64 must not exceed twice its value at the smallest such n, else
    :class:`BoundViolated` is raised naming kind, n and metric.
    """
    if kind not in _DEPTH_EXP:
        raise BadParams(f"unknown bench kind {kind!r}; choose from {BENCH_KINDS}")
    rows: list[ScalingRow] = []
    for n in sorted(set(n_list)):
        if n < 2:
            raise BadParams(f"bench sizes must be >= 2, got {n}")
        circuit = build_circuit(kind, bench_params(kind, n), ladder_impl)
        st = stats(circuit)
        log = _log2_exact(n)
        de, ce = _DEPTH_EXP[kind], _COUNT_EXP[kind]
        rows.append(
            ScalingRow(
                n=n,
                depth=st.total_depth,
                toffoli_depth=st.depth_by_kind.get("ccx", 0),
                cnot_depth=st.depth_by_kind.get("cx", 0),
                gate_count=st.gate_count,
                normalized={
                    "depth": st.total_depth / log**de,
                    "count": st.gate_count / (n * log**ce),
                },
            )
        )
    if check_bounds:
        anchored = [r for r in rows if r.n >= 64]
        if anchored:
            base = anchored[0]
            for metric in ("depth", "count"):
                limit = 2 * base.normalized[metric]
                for r in anchored:
                    if r.normalized[metric] > limit:
                        raise BoundViolated(
                            f"{kind}: normalized {metric} at n={r.n} is "
                            f"{float(r.normalized[metric]):.3f}, exceeding 2x the "
                            f"n={base.n} value {float(base.normalized[metric]):.3f}"
                        )
    return rows


def rows_csv(rows: list[ScalingRow]) -> str:
    lines = ["n,depth,toffoli_depth,cnot_depth,gates"]
    for r in rows:
        lines.append(
            f"{r.n},{r.depth},{r.toffoli_depth},{r.cnot_depth},{r.gate_count}"
        )
    return "\n".join(lines) + "\n"


def rows_text(rows: list[ScalingRow]) -> str:
    header = f"{'n':>8} {'depth':>10} {'toffoli':>10} {'cnot':>10} {'gates':>12} {'depth/norm':>12} {'count/norm':>12}"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.n:>8} {r.depth:>10} {r.toffoli_depth:>10} {r.cnot_depth:>10} "
            f"{r.gate_count:>12} {float(r.normalized['depth']):>12.3f} "
            f"{float(r.normalized['count']):>12.3f}"
        )
    return "\n".join(lines) + "\n"


def rows_json(rows: list[ScalingRow]) -> str:
    return json.dumps(
        [
            {
                "n": r.n,
                "depth": r.depth,
                "toffoli_depth": r.toffoli_depth,
                "cnot_depth": r.cnot_depth,
                "gates": r.gate_count,
                "normalized": {k: float(v) for k, v in r.normalized.items()},
            }
            for r in rows
        ],
        indent=2,
    )
