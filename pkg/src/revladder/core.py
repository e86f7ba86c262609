"""Core circuit IR: gates, circuits, layered circuits, simulation, stats.

Conventions used throughout the package:

* A gate is a pair ``(controls, target)`` where ``controls`` is a sorted
  tuple of qubit indices and ``target`` is a single qubit index.  A gate
  with zero controls is an X gate, one control a CNOT, two a Toffoli and
  three or more a multi-controlled X (MCX).  Every gate is an involution.
* Basis states are Python ints in little-endian order: bit ``i`` of the
  integer is the value of qubit ``i``.
* Depth is measured by greedy as-soon-as-possible (ASAP) layering: gates
  are scanned in program order and each is placed in the earliest layer
  after the last layer touching any of its qubits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Gate = tuple[tuple[int, ...], int]

KIND_NAMES = {0: "x", 1: "cx", 2: "ccx"}


class CircuitError(Exception):
    """Base class for all structured errors raised by this package."""


class DuplicateControl(CircuitError):
    pass


class TargetInControls(CircuitError):
    pass


class IndexOutOfRange(CircuitError):
    pass


class WidthMismatch(CircuitError):
    pass


class TooManyQubits(CircuitError):
    pass


class InvalidAlpha(CircuitError):
    pass


class InsufficientIdleQubits(CircuitError):
    pass


class NotEnoughAncillae(CircuitError):
    pass


class BadParameter(CircuitError):
    pass


class ParseError(CircuitError):
    pass


def gate(controls, target: int) -> Gate:
    """Build a gate tuple with sorted controls."""
    return (tuple(sorted(controls)), target)


def gate_kind(g: Gate) -> str:
    """Classify a gate as ``x``, ``cx``, ``ccx`` or ``mcx``."""
    return KIND_NAMES.get(len(g[0]), "mcx")


@dataclass
class Circuit:
    """A flat sequence of gates acting on ``qubit_count`` qubits."""

    qubit_count: int
    gates: list[Gate] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.gates)

    def extend(self, gates) -> None:
        self.gates.extend(gates)

    def append(self, g: Gate) -> None:
        self.gates.append(g)


@dataclass
class LayeredCircuit:
    """A circuit whose gates are grouped into qubit-disjoint layers."""

    qubit_count: int
    layers: list[list[Gate]] = field(default_factory=list)

    def flatten(self) -> Circuit:
        out: list[Gate] = []
        for layer in self.layers:
            out.extend(layer)
        return Circuit(self.qubit_count, out)

    def gate_count(self) -> int:
        return sum(len(layer) for layer in self.layers)


def validate(circuit: Circuit | LayeredCircuit) -> None:
    """Check structural invariants; raise a structured error on failure.

    For a :class:`LayeredCircuit` this additionally checks that gates
    within each layer act on pairwise disjoint qubit sets.
    """
    n = circuit.qubit_count
    if isinstance(circuit, LayeredCircuit):
        for li, layer in enumerate(circuit.layers):
            seen: set[int] = set()
            for gi, g in enumerate(layer):
                _validate_gate(g, n, f"layer {li}, gate {gi}")
                support = set(g[0])
                support.add(g[1])
                if support & seen:
                    raise WidthMismatch(
                        f"layer {li}, gate {gi}: overlaps earlier gate in the same layer"
                    )
                seen |= support
        return
    for gi, g in enumerate(circuit.gates):
        _validate_gate(g, n, f"gate {gi}")


def _validate_gate(g: Gate, qubit_count: int, where: str) -> None:
    controls, target = g
    if len(set(controls)) != len(controls):
        raise DuplicateControl(f"{where}: duplicate control in {controls}")
    if target in controls:
        raise TargetInControls(f"{where}: target {target} is also a control")
    for q in (*controls, target):
        if not 0 <= q < qubit_count:
            raise IndexOutOfRange(
                f"{where}: qubit {q} out of range for width {qubit_count}"
            )


def apply_gate(g: Gate, state: int) -> int:
    """Apply a single gate to a basis state (little-endian int)."""
    controls, target = g
    for c in controls:
        if not (state >> c) & 1:
            return state
    return state ^ (1 << target)


def simulate(circuit: Circuit | LayeredCircuit, state: int) -> int:
    """Map a basis state through the circuit, returning the output state."""
    if isinstance(circuit, LayeredCircuit):
        circuit = circuit.flatten()
    if not 0 <= state < (1 << circuit.qubit_count):
        raise IndexOutOfRange(
            f"state {state} out of range for width {circuit.qubit_count}"
        )
    for controls, target in circuit.gates:
        ok = True
        for c in controls:
            if not (state >> c) & 1:
                ok = False
                break
        if ok:
            state ^= 1 << target
    return state


def inverse(circuit: Circuit | LayeredCircuit) -> Circuit | LayeredCircuit:
    """Inverse circuit: gates in reverse order (each gate is self-inverse)."""
    if isinstance(circuit, LayeredCircuit):
        return LayeredCircuit(
            circuit.qubit_count, [list(layer) for layer in reversed(circuit.layers)]
        )
    return Circuit(circuit.qubit_count, list(reversed(circuit.gates)))


# ---------------------------------------------------------------------------
# Bitsliced (column-wise) simulation.
#
# A batch of S basis states is stored as one big integer per qubit: bit s of
# column i is the value of qubit i in state number s.  A gate then becomes a
# handful of bitwise AND/XOR operations on the columns, independent of S.
# ---------------------------------------------------------------------------


def base_columns(qubit_count: int) -> list[int]:
    """Columns enumerating all 2**n basis states: state s has value s."""
    cols = []
    size = 1 << qubit_count
    for i in range(qubit_count):
        run = (1 << (1 << i)) - 1
        period = 1 << (i + 1)
        reps = size // period
        block = run << (1 << i)
        col = block * (((1 << (reps * period)) - 1) // ((1 << period) - 1))
        cols.append(col)
    return cols


_MASK64 = (1 << 64) - 1


def splitmix64(seed: int):
    """SplitMix64 pseudo-random 64-bit word stream.

    Fixed, implementation-independent generator so counterexamples
    reproduce everywhere.  First three words for seed 0:
    0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F.
    """
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def random_columns(qubit_count: int, samples: int, seed: int) -> list[int]:
    """Columns holding ``samples`` SplitMix64-generated basis states.

    Column i consumes words ceil(samples/64)*i .. ceil(samples/64)*(i+1)-1
    of the stream, least-significant word first, truncated to ``samples``
    bits."""
    words = (samples + 63) // 64
    gen = splitmix64(seed)
    mask = (1 << samples) - 1
    cols = []
    for _ in range(qubit_count):
        col = 0
        for w in range(words):
            col |= next(gen) << (64 * w)
        cols.append(col & mask)
    return cols


def simulate_columns(
    circuit: Circuit | LayeredCircuit, columns: list[int], samples: int
) -> list[int]:
    """Run a batch of basis states (one big-int column per qubit)."""
    if isinstance(circuit, LayeredCircuit):
        circuit = circuit.flatten()
    if len(columns) != circuit.qubit_count:
        raise WidthMismatch(
            f"got {len(columns)} columns for width {circuit.qubit_count}"
        )
    full = (1 << samples) - 1
    cols = list(columns)
    for controls, target in circuit.gates:
        acc = full
        for c in controls:
            acc &= cols[c]
            if not acc:
                break
        if acc:
            cols[target] ^= acc
    return cols


def column_state(columns: list[int], index: int) -> int:
    """Extract basis state number ``index`` from a batch of columns."""
    state = 0
    for i, col in enumerate(columns):
        state |= ((col >> index) & 1) << i
    return state


TRUTH_TABLE_MAX_QUBITS = 24


def truth_table(circuit: Circuit | LayeredCircuit) -> list[int]:
    """Full permutation table: entry s is the output state for input s."""
    if isinstance(circuit, LayeredCircuit):
        circuit = circuit.flatten()
    n = circuit.qubit_count
    if n > TRUTH_TABLE_MAX_QUBITS:
        raise TooManyQubits(
            f"truth_table supports at most {TRUTH_TABLE_MAX_QUBITS} qubits, got {n}"
        )
    size = 1 << n
    cols = simulate_columns(circuit, base_columns(n), size)
    table = [0] * size
    for i, col in enumerate(cols):
        bit = 1 << i
        for s in range(size):
            if (col >> s) & 1:
                table[s] |= bit
    return table


def equivalent(
    first: Circuit | LayeredCircuit,
    second: Circuit | LayeredCircuit,
    mode: str = "exhaustive",
    samples: int = 1000,
    seed: int | None = None,
    scope: list[int] | None = None,
) -> int | None:
    """Compare two circuits on basis states.

    Returns ``None`` if no difference was observed, otherwise the
    lowest-numbered counterexample input state.  ``scope`` restricts the
    comparison to the listed qubits (default: all).  ``mode`` is
    ``exhaustive`` (all basis states; width capped) or ``random``
    (``samples`` seeded pseudo-random states; ``seed`` is required).
    """
    if isinstance(first, LayeredCircuit):
        first = first.flatten()
    if isinstance(second, LayeredCircuit):
        second = second.flatten()
    if first.qubit_count != second.qubit_count:
        raise WidthMismatch(
            f"widths differ: {first.qubit_count} vs {second.qubit_count}"
        )
    n = first.qubit_count
    if scope is None:
        scope = list(range(n))
    if mode == "exhaustive":
        if n > TRUTH_TABLE_MAX_QUBITS:
            raise TooManyQubits(
                f"exhaustive comparison capped at {TRUTH_TABLE_MAX_QUBITS} qubits"
            )
        inputs = base_columns(n)
        count = 1 << n
    elif mode == "random":
        if seed is None:
            raise BadParameter("random mode requires a seed")
        inputs = random_columns(n, samples, seed)
        count = samples
    else:
        raise BadParameter(f"unknown mode {mode!r}")
    out1 = simulate_columns(first, inputs, count)
    out2 = simulate_columns(second, inputs, count)
    diff = 0
    for q in scope:
        diff |= out1[q] ^ out2[q]
    if diff == 0:
        return None
    index = (diff & -diff).bit_length() - 1
    return column_state(inputs, index)


# ---------------------------------------------------------------------------
# Stats.
# ---------------------------------------------------------------------------


@dataclass
class CircuitStats:
    qubit_count: int
    gate_count: int
    total_depth: int
    depth_by_kind: dict[str, int]
    count_by_kind: dict[str, int]


def stats(circuit: Circuit | LayeredCircuit) -> CircuitStats:
    """Gate counts and ASAP depth, broken down by gate kind.

    ``depth_by_kind[k]`` is the number of ASAP layers containing at least
    one gate of kind ``k``; kinds sharing a layer each count it once.
    """
    if isinstance(circuit, LayeredCircuit):
        flat = circuit.flatten()
    else:
        flat = circuit
    n = flat.qubit_count
    last = [0] * n
    depth = 0
    kind_layers: dict[str, set[int]] = {}
    counts: dict[str, int] = {}
    for controls, target in flat.gates:
        layer = last[target]
        for c in controls:
            if last[c] > layer:
                layer = last[c]
        layer += 1
        last[target] = layer
        for c in controls:
            last[c] = layer
        if layer > depth:
            depth = layer
        kind = KIND_NAMES.get(len(controls), "mcx")
        counts[kind] = counts.get(kind, 0) + 1
        kind_layers.setdefault(kind, set()).add(layer)
    return CircuitStats(
        qubit_count=n,
        gate_count=len(flat.gates),
        total_depth=depth,
        depth_by_kind={k: len(v) for k, v in kind_layers.items()},
        count_by_kind=counts,
    )


def asap_layers(circuit: Circuit) -> list[list[Gate]]:
    """Group gates into ASAP layers (same rule as :func:`stats`)."""
    n = circuit.qubit_count
    last = [0] * n
    layers: list[list[Gate]] = []
    for g in circuit.gates:
        controls, target = g
        layer = last[target]
        for c in controls:
            if last[c] > layer:
                layer = last[c]
        layer += 1
        last[target] = layer
        for c in controls:
            last[c] = layer
        if layer > len(layers):
            layers.append([])
        layers[layer - 1].append(g)
    return layers
