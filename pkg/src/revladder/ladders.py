"""Ladder operators and fan-outs.

A ladder is a cascade of multi-controlled X gates in which each gate's
target feeds the next gate's control block.  The family is parameterized
by a strictly increasing vector ``alpha``: gate ``i`` flips qubit
``alpha[i]`` iff qubits ``alpha[i-1]`` .. ``alpha[i]-1`` (qubits ``0`` ..
``alpha[0]-1`` for the first gate) are all 1 *in the original input*.

Special cases: ``alpha = (1, 2, ..., n-1)`` is the CNOT ladder on ``n``
qubits; ``alpha = (2, 4, ..., 2n)`` is the Toffoli ladder on ``2n+1``
qubits.

Two synthesizers are provided for each ladder: a naive linear-depth one
(each gate reads original inputs directly, emitted in descending target
order) and a logarithmic-depth one built by balanced recursion.  The
log-depth outputs are :class:`LayeredCircuit` objects whose layer count
and gate count obey exact closed forms (see :func:`ladder_depth_formula`).
"""

from __future__ import annotations

from .core import (
    Circuit,
    Gate,
    InvalidAlpha,
    LayeredCircuit,
    WidthMismatch,
)


# ---------------------------------------------------------------------------
# Closed forms for the log-depth ladders.
# ---------------------------------------------------------------------------


def ladder_depth_formula(m: int) -> int:
    """floor(log2 m) + floor(log2(2m/3)) for m >= 2, via integer arithmetic."""
    if m < 2:
        raise InvalidAlpha(f"closed form requires m >= 2, got {m}")
    return (m.bit_length() - 1) + ((2 * m // 3).bit_length() - 1)


def ladder_count_formula(m: int) -> int:
    """2m - 2 - floor(log2 m) - floor(log2(2m/3)) for m >= 2."""
    return 2 * m - 2 - ladder_depth_formula(m)


# ---------------------------------------------------------------------------
# Specs and oracle.
# ---------------------------------------------------------------------------


def validate_alpha(alpha) -> tuple[int, ...]:
    alpha = tuple(alpha)
    if not alpha:
        raise InvalidAlpha("alpha must be non-empty")
    if alpha[0] < 0:
        raise InvalidAlpha(f"alpha[0] must be >= 0, got {alpha[0]}")
    for i in range(1, len(alpha)):
        if alpha[i] <= alpha[i - 1]:
            raise InvalidAlpha(f"alpha must be strictly increasing, got {alpha}")
    return alpha


def ladder_width(alpha) -> int:
    return alpha[-1] + 1


def ladder_oracle(alpha, state: int) -> int:
    """Defining semantics: bit alpha[i] ^= product of the preceding block,
    evaluated on the *original* input bits."""
    alpha = validate_alpha(alpha)
    out = state
    lo = 0
    for a in alpha:
        block = ((1 << a) - 1) >> lo << lo  # bits lo .. a-1
        if state & block == block:
            out ^= 1 << a
        lo = a
    return out


# ---------------------------------------------------------------------------
# Log-depth synthesis (balanced recursion).
# ---------------------------------------------------------------------------


def synth_ladder1(n_qubits: int, qubits: list[int] | None = None) -> LayeredCircuit:
    """Logarithmic-depth CNOT ladder on ``n_qubits`` wires.

    Implements the ladder with CNOT-depth ``ladder_depth_formula(n)`` and
    CNOT-count ``ladder_count_formula(n)`` exactly (n >= 2).
    """
    if n_qubits < 1:
        raise InvalidAlpha(f"need n >= 1, got {n_qubits}")
    if qubits is None:
        qubits = list(range(n_qubits))
    elif len(qubits) != n_qubits:
        raise WidthMismatch("qubit list length does not match n")
    width = max(qubits) + 1 if qubits else 0
    return LayeredCircuit(width, _ladder1_layers(qubits))


def _ladder1_layers(x: list[int]) -> list[list[Gate]]:
    n = len(x)
    if n == 1:
        return []
    if n == 2:
        return [[((x[0],), x[1])]]
    sub = [x[1]]
    c_right = [((x[0],), x[1])]
    c_left = [((x[n - 2],), x[n - 1])]
    for i in range(1, (n + 1) // 2 - 1):
        c_left.append(((x[2 * i - 1],), x[2 * i]))
        c_right.append(((x[2 * i],), x[2 * i + 1]))
        sub.append(x[2 * i + 1])
    if n % 2 == 0:
        sub.append(x[n - 2])
    return [c_left] + _ladder1_layers(sub) + [c_right]


def synth_ladder_alpha(alpha, qubits: list[int] | None = None) -> LayeredCircuit:
    """Logarithmic-depth multi-controlled-X ladder for a general ``alpha``.

    For ``k = len(alpha) + 1 >= 2`` the output has exactly
    ``ladder_depth_formula(k)`` layers and ``ladder_count_formula(k)``
    gates, every layer containing qubit-disjoint MCX gates.
    """
    alpha = validate_alpha(alpha)
    width = ladder_width(alpha)
    if qubits is None:
        qubits = list(range(width))
    elif len(qubits) != width:
        raise WidthMismatch("qubit list length does not match alpha width")
    total = max(qubits) + 1
    return LayeredCircuit(total, _ladder_alpha_layers(qubits, list(alpha)))


def _mcx_span(x: list[int], lo: int, hi: int) -> Gate:
    """MCX with controls x[lo..hi-1] and target x[hi]."""
    return (tuple(sorted(x[lo:hi])), x[hi])


def _ladder_alpha_layers(x: list[int], alpha: list[int]) -> list[list[Gate]]:
    k = len(alpha) + 1
    if k == 1:
        return []
    if k == 2:
        return [[_mcx_span(x, 0, alpha[0])]]
    sub = [x[alpha[0]]]
    sub_alpha: list[int] = []
    c_right = [_mcx_span(x, 0, alpha[0])]
    c_left = [_mcx_span(x, alpha[k - 3], alpha[k - 2])]
    for i in range(1, (k + 1) // 2 - 1):
        c_left.append(_mcx_span(x, alpha[2 * i - 2], alpha[2 * i - 1]))
        c_right.append(_mcx_span(x, alpha[2 * i - 1], alpha[2 * i]))
        sub.extend(x[alpha[2 * i - 2] + 1 : alpha[2 * i - 1]])
        sub.extend(x[alpha[2 * i - 1] + 1 : alpha[2 * i] + 1])
        sub_alpha.append(alpha[2 * i] - alpha[0] - i)
    if k % 2 == 0:
        sub.extend(x[alpha[k - 4] + 1 : alpha[k - 3] + 1])
        sub_alpha.append(alpha[k - 3] - alpha[0] - k // 2 + 2)
    return [c_left] + _ladder_alpha_layers(sub, sub_alpha) + [c_right]


# ---------------------------------------------------------------------------
# Naive linear-depth baseline.
# ---------------------------------------------------------------------------


def naive_ladder(alpha, qubits: list[int] | None = None) -> Circuit:
    """Linear-depth ladder: k-1 MCX gates in descending target order, so
    every gate's controls still carry original input values."""
    alpha = validate_alpha(alpha)
    width = ladder_width(alpha)
    if qubits is None:
        qubits = list(range(width))
    elif len(qubits) != width:
        raise WidthMismatch("qubit list length does not match alpha width")
    gates = []
    for i in range(len(alpha) - 1, -1, -1):
        lo = alpha[i - 1] if i > 0 else 0
        gates.append((tuple(sorted(qubits[lo : alpha[i]])), qubits[alpha[i]]))
    return Circuit(max(qubits) + 1, gates)


# ---------------------------------------------------------------------------
# Fan-outs.
# ---------------------------------------------------------------------------


def synth_fanout1(n: int, qubits: list[int] | None = None) -> Circuit:
    """Fan-out of one control onto n targets over CNOT, depth O(log n).

    Wire order: ``qubits[0]`` is the control, ``qubits[1:]`` the targets.
    Built as the log-depth CNOT ladder on all n+1 wires followed by the
    inverse ladder on the n target wires, which telescopes to
    ``x_i ^= c`` for every target.
    """
    if n < 0:
        raise InvalidAlpha(f"need n >= 0, got {n}")
    if qubits is None:
        qubits = list(range(n + 1))
    elif len(qubits) != n + 1:
        raise WidthMismatch("fanout1 needs n+1 qubits")
    width = max(qubits) + 1
    if n == 0:
        return Circuit(width, [])
    if n == 1:
        return Circuit(width, [((qubits[0],), qubits[1])])
    gates = []
    for layer in _ladder1_layers(list(qubits)):
        gates.extend(layer)
    inner = []
    for layer in _ladder1_layers(list(qubits[1:])):
        inner.extend(layer)
    gates.extend(reversed(inner))
    return Circuit(width, gates)


def synth_fanout2(n: int, qubits: list[int] | None = None) -> Circuit:
    """Fan-out of Toffoli type: y_i ^= c * x_i for i = 1..n.

    Wire order: ``qubits[0]`` is the control, then pairs
    ``(x_1, y_1), ..., (x_n, y_n)``.  For n >= 2 the pairs are split into
    two halves handled sequentially; each half is realized as a fan-out
    wall onto the opposite half's wires (borrowed dirty), a Toffoli
    layer, the same fan-out wall, and the Toffoli layer again.  Depth
    O(log n), zero qubits beyond the 2n+1 operator wires.
    """
    if n < 0:
        raise InvalidAlpha(f"need n >= 0, got {n}")
    if qubits is None:
        qubits = list(range(2 * n + 1))
    elif len(qubits) != 2 * n + 1:
        raise WidthMismatch("fanout2 needs 2n+1 qubits")
    width = max(qubits) + 1 if qubits else 1
    c = qubits[0]
    pairs = [(qubits[1 + 2 * i], qubits[2 + 2 * i]) for i in range(n)]
    gates: list[Gate] = []
    _fanout2_gates(c, pairs, gates)
    return Circuit(width, gates)


def _fanout2_gates(c: int, pairs, out: list[Gate]) -> None:
    m = len(pairs)
    if m == 0:
        return
    if m == 1:
        x, y = pairs[0]
        out.append((tuple(sorted((c, x))), y))
        return
    top = pairs[: (m + 1) // 2]
    bottom = pairs[(m + 1) // 2 :]
    _fanout2_block(c, top, bottom, out)
    _fanout2_block(c, bottom, top, out)


def _fanout2_block(c: int, pairs, opposite, out: list[Gate]) -> None:
    """One half of the fan-out: targets ``pairs``, borrowing dirty wires
    from ``opposite`` (x wires first, then y wires)."""
    m = len(pairs)
    pool = [x for x, _ in opposite] + [y for _, y in opposite]
    dirty = pool[:m]
    wall = synth_fanout1(m, [c] + dirty).gates
    toffolis = [
        (tuple(sorted((d, x))), y) for d, (x, y) in zip(dirty, pairs)
    ]
    out.extend(wall)
    out.extend(toffolis)
    out.extend(wall)
    out.extend(toffolis)
