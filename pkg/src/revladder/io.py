"""Circuit text format and OpenQASM-3-flavored export.

Text format, one item per line, lowercase, single spaces::

    qubits N
    x q<T>
    cx q<C> q<T>
    ccx q<C1> q<C2> q<T>
    mcx q<C1> ... q<Ck> q<T>     # the last index is the target

``#`` starts a comment; blank lines are ignored.  Parsing then emitting
reproduces the input byte-for-byte modulo comments and blank lines.
Qubit 0 is the least-significant bit of any integer interpretation.
"""

from __future__ import annotations

from .core import Circuit, ParseError, gate_kind, validate

_MNEMONIC = {0: "x", 1: "cx", 2: "ccx"}


def emit_text(circuit: Circuit) -> str:
    lines = [f"qubits {circuit.qubit_count}"]
    for controls, target in circuit.gates:
        name = _MNEMONIC.get(len(controls), "mcx")
        args = " ".join(f"q{q}" for q in (*controls, target))
        lines.append(f"{name} {args}")
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> Circuit:
    qubit_count = None
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if qubit_count is None:
            if len(tokens) != 2 or tokens[0] != "qubits":
                raise ParseError(f"line {lineno}: expected 'qubits N' header")
            try:
                qubit_count = int(tokens[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad qubit count {tokens[1]!r}")
            if qubit_count < 0:
                raise ParseError(f"line {lineno}: negative qubit count")
            continue
        name, *args = tokens
        indices = []
        for tok in args:
            if not tok.startswith("q"):
                raise ParseError(f"line {lineno}: expected q<index>, got {tok!r}")
            try:
                indices.append(int(tok[1:]))
            except ValueError:
                raise ParseError(f"line {lineno}: bad qubit token {tok!r}")
        expected = {"x": 1, "cx": 2, "ccx": 3}
        if name in expected:
            if len(indices) != expected[name]:
                raise ParseError(
                    f"line {lineno}: {name} takes {expected[name]} qubits"
                )
        elif name == "mcx":
            if len(indices) < 4:
                raise ParseError(f"line {lineno}: mcx needs at least 4 qubits")
        else:
            raise ParseError(f"line {lineno}: unknown gate {name!r}")
        gates.append((tuple(sorted(indices[:-1])), indices[-1]))
    if qubit_count is None:
        raise ParseError("missing 'qubits N' header")
    circuit = Circuit(qubit_count, gates)
    validate(circuit)
    return circuit


def emit_qasm(circuit: Circuit) -> str:
    """OpenQASM-3-flavored listing. Export only; there is no importer."""
    lines = [
        "OPENQASM 3.0;",
        'include "stdgates.inc";',
        f"qubit[{circuit.qubit_count}] q;",
    ]
    for g in circuit.gates:
        controls, target = g
        kind = gate_kind(g)
        if kind == "x":
            lines.append(f"x q[{target}];")
        elif kind == "cx":
            lines.append(f"cx q[{controls[0]}], q[{target}];")
        elif kind == "ccx":
            lines.append(f"ccx q[{controls[0]}], q[{controls[1]}], q[{target}];")
        else:
            args = ", ".join(f"q[{c}]" for c in controls)
            lines.append(f"ctrl({len(controls)}) @ x {args}, q[{target}];")
    return "\n".join(lines) + "\n"
