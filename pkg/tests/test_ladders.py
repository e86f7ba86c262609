import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revladder.core import (
    Circuit,
    InvalidAlpha,
    WidthMismatch,
    base_columns,
    column_state,
    equivalent,
    simulate_columns,
    stats,
    validate,
)
from revladder.ladders import (
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


def _oracle_circuit_agrees(alpha, circuit):
    n = circuit.qubit_count
    cols = simulate_columns(circuit, base_columns(n), 1 << n)
    for s in range(1 << n):
        assert column_state(cols, s) == ladder_oracle(alpha, s), (alpha, s)


def test_validate_alpha():
    assert validate_alpha([1, 3, 4]) == (1, 3, 4)
    with pytest.raises(InvalidAlpha):
        validate_alpha([])
    with pytest.raises(InvalidAlpha):
        validate_alpha([2, 2])
    with pytest.raises(InvalidAlpha):
        validate_alpha([-1, 2])


def test_closed_form_base_values():
    assert ladder_depth_formula(2) == 1
    assert ladder_depth_formula(3) == 2
    assert ladder_count_formula(2) == 1
    assert ladder_count_formula(3) == 2
    # n=10: depth 5, count 13
    assert ladder_depth_formula(10) == 5
    assert ladder_count_formula(10) == 13


def test_ladder1_formulas_and_layer_consistency():
    for n in range(2, 300):
        lc = synth_ladder1(n)
        validate(lc)
        assert len(lc.layers) == ladder_depth_formula(n)
        assert lc.gate_count() == ladder_count_formula(n)
    # the greedy ASAP metric agrees with the constructed layering
    for n in (2, 3, 17, 64, 100):
        lc = synth_ladder1(n)
        assert stats(lc).total_depth == len(lc.layers)


def test_ladder1_functional_small():
    for n in range(2, 13):
        alpha = tuple(range(1, n))
        _oracle_circuit_agrees(alpha, synth_ladder1(n).flatten())
        _oracle_circuit_agrees(alpha, naive_ladder(alpha))


def test_ladder_alpha_formulas():
    rng = random.Random(7)
    for k in range(2, 200):
        alpha = tuple(range(2, 2 * k, 2))
        lc = synth_ladder_alpha(alpha)
        validate(lc)
        assert len(lc.layers) == ladder_depth_formula(k)
        assert lc.gate_count() == ladder_count_formula(k)
    for _ in range(100):
        k = rng.randrange(2, 60)
        cur, a = 0, []
        for _ in range(k - 1):
            cur += rng.randint(1, 5)
            a.append(cur)
        lc = synth_ladder_alpha(tuple(a))
        validate(lc)
        assert len(lc.layers) == ladder_depth_formula(k)
        assert lc.gate_count() == ladder_count_formula(k)
        assert stats(lc).total_depth == len(lc.layers)


def test_ladder_alpha_functional_small():
    rng = random.Random(11)
    for _ in range(60):
        k = rng.randrange(2, 9)
        cur, a = 0, []
        for _ in range(k - 1):
            cur += rng.randint(1, 3)
            a.append(cur)
        alpha = tuple(a)
        if alpha[-1] + 1 > 14:
            continue
        _oracle_circuit_agrees(alpha, synth_ladder_alpha(alpha).flatten())
        _oracle_circuit_agrees(alpha, naive_ladder(alpha))


def test_ladder_log_equals_naive():
    for alpha in [(1, 2, 3, 4, 5, 6), (2, 4, 6, 8, 10), (1, 4, 5, 9), (3,)]:
        assert equivalent(synth_ladder_alpha(alpha), naive_ladder(alpha)) is None


def test_width_mismatch():
    with pytest.raises(WidthMismatch):
        synth_ladder1(4, qubits=[0, 1, 2])
    with pytest.raises(WidthMismatch):
        synth_ladder_alpha((2, 4), qubits=[0, 1])
    with pytest.raises(WidthMismatch):
        synth_fanout1(3, qubits=[0, 1])
    with pytest.raises(WidthMismatch):
        synth_fanout2(2, qubits=[0, 1])


def test_fanout1_semantics():
    for n in range(0, 12):
        c = synth_fanout1(n)
        cols = simulate_columns(c, base_columns(n + 1), 1 << (n + 1))
        for s in range(1 << (n + 1)):
            ctl = s & 1
            want = s ^ (((1 << n) - 1) << 1 if ctl else 0)
            assert column_state(cols, s) == want
    # log depth: at most the two composed ladders
    st_ = stats(synth_fanout1(64))
    assert st_.total_depth <= ladder_depth_formula(65) + ladder_depth_formula(64)


def test_fanout2_semantics():
    for n in range(0, 6):
        c = synth_fanout2(n)
        w = 2 * n + 1
        cols = simulate_columns(c, base_columns(w), 1 << w)
        for s in range(1 << w):
            ctl = s & 1
            out = s
            if ctl:
                for i in range(n):
                    x = (s >> (1 + 2 * i)) & 1
                    out ^= x << (2 + 2 * i)
            assert column_state(cols, s) == out


def test_fanout2_gate_set():
    for n in (1, 2, 5, 9):
        for controls, _ in synth_fanout2(n).gates:
            assert len(controls) <= 2


def test_remapped_qubits():
    qubits = [5, 2, 7, 0, 4]
    lc = synth_ladder1(5, qubits=qubits)
    flat = lc.flatten()
    used = {q for cs, t in flat.gates for q in (*cs, t)}
    assert used <= set(qubits)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=9), st.integers(0, 2**10))
def test_ladder_property(increments, state_seed):
    cur, a = 0, []
    for inc in increments:
        cur += inc
        a.append(cur)
    alpha = tuple(a)
    width = alpha[-1] + 1
    if width > 13:
        return
    circuit = synth_ladder_alpha(alpha).flatten()
    s = state_seed % (1 << width)
    cols = [(s >> i) & 1 for i in range(width)]
    out = simulate_columns(Circuit(width, circuit.gates), cols, 1)
    assert column_state(out, 0) == ladder_oracle(alpha, s)
