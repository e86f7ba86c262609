"""revladder: logarithmic-depth reversible ladder circuits and
ancilla-free arithmetic over the {X, CNOT, Toffoli} gate set.

Submodules:

* :mod:`revladder.core` — gate/circuit IR, bitsliced simulation, stats.
* :mod:`revladder.ladders` — log-depth CNOT/MCX ladders, fan-outs,
  exact depth/count closed forms.
* :mod:`revladder.mcx` — multi-controlled X over two borrowed dirty
  ancillae (log depth) or k-2 (linear), plus layer-by-layer lowering.
* :mod:`revladder.arith` — in-place adder, controlled adder,
  incrementer, carry gadget and constant adder.
* :mod:`revladder.verify` — circuit-free integer oracles, closed-form
  checks and scaling benchmarks.
* :mod:`revladder.io` — text format and OpenQASM-3-flavored export.
* :mod:`revladder.cli` — command-line front end.
"""

from .core import (
    Circuit,
    CircuitError,
    CircuitStats,
    Gate,
    LayeredCircuit,
    asap_layers,
    base_columns,
    equivalent,
    gate,
    gate_kind,
    inverse,
    random_columns,
    simulate,
    simulate_columns,
    splitmix64,
    stats,
    truth_table,
    validate,
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
)
from .mcx import lower_layered, synth_mcx_linear, synth_mcx_log
from .arith import (
    RegisterLayout,
    synth_adder,
    synth_carry,
    synth_const_adder,
    synth_controlled_adder,
    synth_incrementer,
)
from .io import emit_qasm, emit_text, parse_text
from .verify import (
    BoundViolated,
    ScalingRow,
    check_closed_forms,
    oracle_eval,
    scaling_bench,
    verify_family,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "CircuitError",
    "CircuitStats",
    "Gate",
    "LayeredCircuit",
    "RegisterLayout",
    "ScalingRow",
    "BoundViolated",
    "asap_layers",
    "base_columns",
    "check_closed_forms",
    "emit_qasm",
    "emit_text",
    "equivalent",
    "gate",
    "gate_kind",
    "inverse",
    "ladder_count_formula",
    "ladder_depth_formula",
    "ladder_oracle",
    "lower_layered",
    "naive_ladder",
    "oracle_eval",
    "parse_text",
    "random_columns",
    "scaling_bench",
    "simulate",
    "simulate_columns",
    "splitmix64",
    "stats",
    "synth_adder",
    "synth_carry",
    "synth_const_adder",
    "synth_controlled_adder",
    "synth_fanout1",
    "synth_fanout2",
    "synth_incrementer",
    "synth_ladder1",
    "synth_ladder_alpha",
    "synth_mcx_linear",
    "synth_mcx_log",
    "truth_table",
    "validate",
    "verify_family",
]
