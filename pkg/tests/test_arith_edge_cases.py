"""Pinned edge cases around the smallest register sizes."""

from revladder.arith import synth_adder, synth_controlled_adder
from revladder.core import gate_kind


def test_one_bit_controlled_adder_needs_exactly_one_mcx3():
    """The 4-wire controlled adder with carry-out is an odd permutation
    (it transposes exactly two basis states via the carry), whereas every
    X/CNOT/Toffoli gate on 4 wires is an even permutation.  No circuit
    over that gate set can realize it, so the synthesizer emits exactly
    one 3-control gate and is otherwise pure."""
    circ = synth_controlled_adder(1)
    kinds = [gate_kind(g) for g in circ.gates]
    assert kinds.count("mcx") == 1
    assert all(len(c) <= 3 for c, _ in circ.gates)
    # the modular variant has no carry and stays within the gate set
    modular = synth_controlled_adder(1, mode="modular")
    assert all(len(c) <= 2 for c, _ in modular.gates)


def test_other_one_bit_circuits_are_pure():
    for circ in (synth_adder(1), synth_adder(1, mode="modular")):
        assert all(len(c) <= 2 for c, _ in circ.gates)
