"""Arithmetic circuits: adder, controlled adder, incrementer, carry
gadget and constant adder.

All builders take explicit register layouts (or use a packed default)
and come in two flavors where it matters: ``ladder_impl="log"`` uses the
logarithmic-depth ladders plus MCX lowering, ``ladder_impl="naive"``
uses the linear-depth baseline ladders.

Register conventions (defaults):

* adder: ``a`` = qubits 0..n-1, ``b`` = n..2n-1, carry ``z`` = 2n.
* controlled adder: control ``c`` = 0, ``a`` = 1..n, ``b`` = n+1..2n,
  ``z`` = 2n+1.
* incrementer: ``v`` = 0..n-1, dirty ancillae next, control (if any) last.
* carry gadget: low half ``v_l`` = 0..ceil(n/2)-1, borrowed dirty wires
  next, target ``g`` last.
* constant adder: ``v`` = 0..n-1, single dirty ancilla ``g`` = n.

Bit i of a register value lives on the register's i-th qubit (qubit 0 of
the register is the least significant bit).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BadParameter, Circuit, Gate, NotEnoughAncillae
from .ladders import (
    naive_ladder,
    synth_fanout1,
    synth_fanout2,
    synth_ladder1,
    synth_ladder_alpha,
)
from .mcx import lower_layered, synth_mcx_linear, synth_mcx_log


class MissingCarryQubit(BadParameter):
    pass


class MissingControlQubit(BadParameter):
    pass


@dataclass
class RegisterLayout:
    a_qubits: list[int] | None = None
    b_qubits: list[int] | None = None
    z_qubit: int | None = None
    c_qubit: int | None = None
    g_qubits: list[int] | None = None


# ---------------------------------------------------------------------------
# Ladder emission helpers.  Ladders are built on a compact index space and
# remapped onto the actual wires, so MCX lowering can only ever borrow
# wires of the ladder itself (never qubits outside the operator).
# ---------------------------------------------------------------------------


def _remap(gates: list[Gate], wires: list[int]) -> list[Gate]:
    return [
        (tuple(sorted(wires[c] for c in controls)), wires[t])
        for controls, t in gates
    ]


def _ladder1_gates(wires: list[int], impl: str) -> list[Gate]:
    """The CNOT ladder operator on the given wires."""
    m = len(wires)
    if m < 2:
        return []
    if impl == "log":
        return _remap(synth_ladder1(m).flatten().gates, wires)
    return _remap(naive_ladder(tuple(range(1, m))).gates, wires)


def _ladder2_gates(wires: list[int], impl: str) -> list[Gate]:
    """The Toffoli ladder operator (lowered when impl="log") on 2m+1 wires."""
    m = (len(wires) - 1) // 2
    if m < 1:
        return []
    alpha = tuple(range(2, 2 * m + 1, 2))
    if impl == "log":
        lowered = lower_layered(synth_ladder_alpha(alpha), policy="log")
        return _remap(lowered.gates, wires)
    return _remap(naive_ladder(alpha).gates, wires)


def _interleave(a: list[int], b: list[int]) -> list[int]:
    out = []
    for x, y in zip(a, b):
        out.append(x)
        out.append(y)
    return out


def _cnot(c: int, t: int) -> Gate:
    return ((c,), t)


def _toffoli(c1: int, c2: int, t: int) -> Gate:
    return (tuple(sorted((c1, c2))), t)


# ---------------------------------------------------------------------------
# Adder.
# ---------------------------------------------------------------------------


def _adder_gates(
    a: list[int], b: list[int], z: int | None, impl: str
) -> list[Gate]:
    """b += a (mod 2^n), optionally xoring the carry-out into z.

    Seven slices: a CNOT wall, a forward CNOT ladder, an inverse Toffoli
    ladder, a CNOT wall, an X-dressed forward Toffoli ladder, an inverse
    CNOT ladder, and a final CNOT wall.
    """
    n = len(a)
    gates: list[Gate] = []
    if n == 1:
        if z is not None:
            gates.append(_toffoli(a[0], b[0], z))
        gates.append(_cnot(a[0], b[0]))
        return gates
    wall = [_cnot(a[i], b[i]) for i in range(1, n)]
    # slice 1
    gates += wall
    # slice 2: CNOT ladder on (a_1..a_{n-1}) extended by z when present
    wires2 = a[1:] + ([z] if z is not None else [])
    gates += _ladder1_gates(wires2, impl)
    # slice 3: inverse Toffoli ladder on (a_0,b_0,...,a_{n-1},b_{n-1},z)
    if z is not None:
        wires3 = _interleave(a, b) + [z]
    else:
        wires3 = _interleave(a[: n - 1], b[: n - 1]) + [a[n - 1]]
    gates += reversed(_ladder2_gates(wires3, impl))
    # slice 4
    gates += wall
    # slice 5: X-dressed forward Toffoli ladder, one size down
    dress = [((), b[i]) for i in range(1, n - 1)]
    wires5 = _interleave(a[: n - 1], b[: n - 1]) + [a[n - 1]]
    gates += dress
    gates += _ladder2_gates(wires5, impl)
    gates += dress
    # slice 6: inverse CNOT ladder on (a_1..a_{n-1})
    gates += reversed(_ladder1_gates(a[1:], impl))
    # slice 7
    gates += [_cnot(a[i], b[i]) for i in range(n)]
    return gates


def synth_adder(
    n: int,
    layout: RegisterLayout | None = None,
    mode: str = "with_carry",
    ladder_impl: str = "log",
) -> Circuit:
    """In-place adder: |a>|b>|z> -> |a>|a+b mod 2^n>|z xor carry>.

    ``mode="modular"`` drops the carry line entirely.  Zero ancillae,
    gate set {Toffoli, CNOT, X}; with ``ladder_impl="log"`` the depth is
    polylogarithmic in n.
    """
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    if mode not in ("with_carry", "modular"):
        raise BadParameter(f"unknown adder mode {mode!r}")
    if layout is None:
        layout = RegisterLayout(
            a_qubits=list(range(n)),
            b_qubits=list(range(n, 2 * n)),
            z_qubit=2 * n if mode == "with_carry" else None,
        )
    a, b, z = layout.a_qubits, layout.b_qubits, layout.z_qubit
    if a is None or b is None or len(a) != n or len(b) != n:
        raise BadParameter("layout must provide a and b registers of size n")
    if mode == "with_carry" and z is None:
        raise MissingCarryQubit("with_carry mode requires a z qubit")
    if mode == "modular":
        z = None
    used = [*a, *b] + ([z] if z is not None else [])
    return Circuit(max(used) + 1, _adder_gates(a, b, z, ladder_impl))


# ---------------------------------------------------------------------------
# Controlled adder.
# ---------------------------------------------------------------------------


def _controlled_adder_gates(
    c: int, a: list[int], b: list[int], z: int | None, impl: str
) -> list[Gate]:
    """b += c*a (mod 2^n), optionally xoring the controlled carry into z.

    Same seven-slice skeleton as the adder; the control enters through
    one Toffoli, one three-control MCX, a double fan-out (slice 4) and
    two single fan-out walls replacing the X dressing (slice 5).
    """
    n = len(a)
    gates: list[Gate] = []
    if n == 1:
        if z is not None:
            # four wires only: emitted as a raw 3-control MCX
            gates.append((tuple(sorted((c, a[0], b[0]))), z))
        gates.append(_toffoli(c, a[0], b[0]))
        return gates
    wall = [_cnot(a[i], b[i]) for i in range(1, n)]
    # slice 1
    gates += wall
    # slice 2
    if z is not None:
        gates.append(_toffoli(c, a[n - 1], z))
    gates += _ladder1_gates(a[1:], impl)
    # slice 3
    wires3 = _interleave(a[: n - 1], b[: n - 1]) + [a[n - 1]]
    gates += reversed(_ladder2_gates(wires3, impl))
    if z is not None:
        mcx3 = (tuple(sorted((c, a[n - 1], b[n - 1]))), z)
        if impl == "log":
            borrowed = min(q for q in (*a, *b) if q not in mcx3[0] and q != z)
            gates += synth_mcx_linear(list(mcx3[0]), z, [borrowed]).gates
        else:
            gates.append(mcx3)
    # slice 4: double fan-out c -> (a_i, b_i) pairs, i = 1..n-1
    gates += synth_fanout2(n - 1, [c] + _interleave(a[1:], b[1:])).gates
    # slice 5: fan-out walls (controlled complement) around the ladder
    fan = synth_fanout1(n - 2, [c] + b[1 : n - 1]).gates
    gates += fan
    gates += _ladder2_gates(wires3, impl)
    gates += fan
    # slice 6
    gates += reversed(_ladder1_gates(a[1:], impl))
    # slice 7
    gates.append(_toffoli(c, a[0], b[0]))
    gates += [_cnot(a[i], b[i]) for i in range(1, n)]
    return gates


def synth_controlled_adder(
    n: int,
    layout: RegisterLayout | None = None,
    mode: str = "with_carry",
    ladder_impl: str = "log",
) -> Circuit:
    """Controlled adder: |c>|a>|b>|z> -> |c>|a>|c*a+b mod 2^n>|z xor c*carry>."""
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    if mode not in ("with_carry", "modular"):
        raise BadParameter(f"unknown adder mode {mode!r}")
    if layout is None:
        layout = RegisterLayout(
            c_qubit=0,
            a_qubits=list(range(1, n + 1)),
            b_qubits=list(range(n + 1, 2 * n + 1)),
            z_qubit=2 * n + 1 if mode == "with_carry" else None,
        )
    c, a, b, z = layout.c_qubit, layout.a_qubits, layout.b_qubits, layout.z_qubit
    if c is None:
        raise MissingControlQubit("controlled adder requires a control qubit")
    if a is None or b is None or len(a) != n or len(b) != n:
        raise BadParameter("layout must provide a and b registers of size n")
    if mode == "with_carry" and z is None:
        raise MissingCarryQubit("with_carry mode requires a z qubit")
    if mode == "modular":
        z = None
    used = [c, *a, *b] + ([z] if z is not None else [])
    return Circuit(max(used) + 1, _controlled_adder_gates(c, a, b, z, ladder_impl))


# ---------------------------------------------------------------------------
# Incrementer.
# ---------------------------------------------------------------------------


def _incrementer_many_dirty(
    v: list[int], g: list[int], ctrl: int | None, impl: str
) -> list[Gate]:
    """v += 1 using n borrowed dirty qubits: subtract g, complement g,
    subtract again, uncomplement.  v - g - (NOT g) = v + 1 (mod 2^n)."""
    n = len(v)
    if ctrl is None:
        sub = list(reversed(_adder_gates(g[:n], v, None, impl)))
    else:
        sub = list(reversed(_controlled_adder_gates(ctrl, g[:n], v, None, impl)))
    xwall = [((), q) for q in g[:n]]
    return sub + xwall + sub + xwall


def _lower_mcx_inline(
    controls: list[int], target: int, pool: list[int], impl: str
) -> list[Gate]:
    """Lower one MCX using borrowed dirty qubits from ``pool``."""
    k = len(controls)
    if k <= 2 or impl == "naive":
        return [(tuple(sorted(controls)), target)]
    if len(pool) >= 2 and k >= 4:
        return synth_mcx_log(controls, target, pool[:2]).body.gates
    if len(pool) >= k - 2:
        return synth_mcx_linear(controls, target, pool[: k - 2]).gates
    raise NotEnoughAncillae(
        f"cannot lower MCX with {k} controls using {len(pool)} borrowed qubits"
    )


def _incrementer_one_dirty(
    v: list[int], g: int, ctrl: int | None, impl: str, out: list[Gate]
) -> None:
    """v += 1 with a single borrowed dirty qubit g, by splitting v into a
    low half and a high half: the high half is incremented twice under
    control of g, with g toggled in between by an AND of the low half, so
    exactly one net increment lands iff the low half carries; the low
    half then gets its own +1 recursively."""
    n = len(v)
    if n == 0:
        return
    if n == 1:
        out.append(((ctrl,), v[0]) if ctrl is not None else ((), v[0]))
        return
    lo = v[: (n + 1) // 2]
    hi = v[(n + 1) // 2 :]
    m = len(hi)
    ctrl_hi = _incrementer_many_dirty(hi, lo[:m], g, impl)
    gwall = synth_fanout1(len(hi), [g] + hi).gates
    mcx_controls = lo + ([ctrl] if ctrl is not None else [])
    fold = _lower_mcx_inline(sorted(mcx_controls), g, hi, impl)
    out += ctrl_hi
    out += gwall
    out += fold
    out += ctrl_hi
    out += fold
    out += gwall
    # low half: +1 with plenty of borrowed qubits (the high half plus g)
    out += _incrementer_many_dirty(lo, hi + [g], ctrl, impl)


def synth_incrementer(
    n: int,
    controlled: bool = False,
    ancilla_mode: str = "one_dirty",
    ladder_impl: str = "log",
    layout: RegisterLayout | None = None,
) -> Circuit:
    """|v> -> |v+1 mod 2^n| (optionally controlled), ancillae restored.

    ``ancilla_mode="n_dirty"`` borrows n dirty qubits; ``"one_dirty"``
    borrows a single dirty qubit.
    """
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    if ancilla_mode not in ("n_dirty", "one_dirty"):
        raise BadParameter(f"unknown ancilla_mode {ancilla_mode!r}")
    n_anc = n if ancilla_mode == "n_dirty" else 1
    if layout is None:
        layout = RegisterLayout(
            a_qubits=list(range(n)),
            g_qubits=list(range(n, n + n_anc)),
            c_qubit=n + n_anc if controlled else None,
        )
    v, g, c = layout.a_qubits, layout.g_qubits, layout.c_qubit
    if v is None or len(v) != n:
        raise BadParameter("layout must provide the value register")
    if g is None or len(g) < n_anc:
        raise NotEnoughAncillae(
            f"{ancilla_mode} incrementer needs {n_anc} dirty qubits"
        )
    if controlled and c is None:
        raise MissingControlQubit("controlled incrementer requires a control")
    ctrl = c if controlled else None
    gates: list[Gate] = []
    if ancilla_mode == "n_dirty":
        gates = _incrementer_many_dirty(v, g, ctrl, ladder_impl)
    else:
        if n == 1:
            gates = [((ctrl,), v[0]) if ctrl is not None else ((), v[0])]
        else:
            _incrementer_one_dirty(v, g[0], ctrl, ladder_impl, gates)
    used = [*v, *g[:n_anc]] + ([c] if controlled else [])
    return Circuit(max(used) + 1, gates)


# ---------------------------------------------------------------------------
# Carry gadget.
# ---------------------------------------------------------------------------


def _carry_gates(
    v: list[int], const: int, dirty: list[int], g: int, impl: str
) -> list[Gate]:
    """g ^= bit m of (v + const), where m = len(v), using m-2 borrowed
    dirty qubits.

    The carry recurrence c_{i+1} = (v_i XOR const_i) * c_i XOR const_i*v_i
    is evaluated by two sweeps of a Toffoli ladder over alternating
    (borrowed, value) wires; running the propagate ladder twice with the
    generate terms injected once makes every borrowed wire's initial
    value cancel while g picks up exactly the carry.
    """
    m = len(v)
    const &= (1 << m) - 1
    if const == 0:
        return []
    gates: list[Gate] = []
    if m == 1:
        # carry of v_0 + 1 is v_0 itself
        gates.append(_cnot(v[0], g))
        return gates

    def a(i: int) -> int:
        return (const >> i) & 1

    def c2_gates(target: int) -> list[Gate]:
        # carry out of the two least-significant bits, with v_1 dressed
        out: list[Gate] = []
        if a(0):
            out.append(_toffoli(v[0], v[1], target))
        if a(1):
            out.append(_cnot(v[1], target))
            out.append(((), target))
        return out

    if m == 2:
        dress = [((), v[1])] if a(1) else []
        return dress + c2_gates(g) + dress

    if len(dirty) < m - 2:
        raise NotEnoughAncillae(
            f"carry over {m} bits needs {m - 2} borrowed qubits, got {len(dirty)}"
        )
    e = dirty[: m - 2]  # e[i] accumulates the carry into position i+2
    # dress v_j (j >= 1) so it directly reads the propagate bit v_j xor a_j
    dress = [((), v[j]) for j in range(1, m) if a(j)]
    # descending propagate ladder over (e_2, v_2, e_3, v_3, ..., v_{m-1}, g)
    wires = []
    for j in range(2, m):
        wires.append(e[j - 2])
        wires.append(v[j])
    wires.append(g)
    alpha = tuple(range(2, 2 * (m - 2) + 1, 2))
    if impl == "log":
        desc = _remap(
            lower_layered(synth_ladder_alpha(alpha), policy="log").gates, wires
        )
    else:
        desc = _remap(naive_ladder(alpha).gates, wires)
    # same ladder without its topmost rung (the gate targeting g)
    if m == 3:
        asc_half: list[Gate] = []
    else:
        sub = wires[:-2]
        sub_alpha = tuple(range(2, 2 * (m - 3) + 1, 2))
        if impl == "log":
            asc_half = _remap(
                lower_layered(synth_ladder_alpha(sub_alpha), policy="log").gates,
                sub,
            )
        else:
            asc_half = _remap(naive_ladder(sub_alpha).gates, sub)
    asc = list(reversed(asc_half))
    # generate-term injections e_{j+1} ^= a_j * v_j (undressing inline)
    gen_wall: list[Gate] = []
    for j in range(2, m - 1):
        if a(j):
            gen_wall.append(_cnot(v[j], e[j - 1]))
            gen_wall.append(((), e[j - 1]))
    gen_top: list[Gate] = []
    if a(m - 1):
        gen_top.append(_cnot(v[m - 1], g))
        gen_top.append(((), g))
    bot = c2_gates(e[0])
    gates += dress
    gates += desc + bot + gen_wall + asc
    gates += desc + gen_top + bot + gen_wall + asc
    gates += dress
    return gates


def synth_carry(
    n: int,
    constant_low_bits: int,
    layout: RegisterLayout | None = None,
    ladder_impl: str = "log",
) -> Circuit:
    """g ^= carry_{ceil(n/2)}(v_l + c_l); v_l and the borrowed wires are
    restored exactly for every initial value."""
    if n < 2:
        raise BadParameter(f"need n >= 2, got {n}")
    m = (n + 1) // 2
    n_dirty = n // 2 - 1
    if layout is None:
        layout = RegisterLayout(
            a_qubits=list(range(m)),
            g_qubits=[n - 1],
            b_qubits=list(range(m, m + n_dirty)),  # borrowed dirty wires
        )
    v, dirty, g = layout.a_qubits, layout.b_qubits, layout.g_qubits
    if v is None or len(v) != m:
        raise BadParameter(f"layout must provide the {m}-qubit low half")
    if g is None or len(g) != 1:
        raise BadParameter("layout must provide the single target qubit g")
    dirty = dirty or []
    gates = _carry_gates(v, constant_low_bits, dirty, g[0], ladder_impl)
    used = [*v, *dirty, g[0]]
    return Circuit(max(used) + 1, gates)


# ---------------------------------------------------------------------------
# Constant adder.
# ---------------------------------------------------------------------------


def _need(m: int) -> int:
    """Borrowed qubits required to run a size-m constant addition with its
    two recursive halves in parallel (including its own target wire)."""
    if m <= 1:
        return 0
    lo, hi = (m + 1) // 2, m // 2
    return 1 + max(0, _need(lo) + _need(hi) - 1)


def _const_adder_gates(
    v: list[int], const: int, g: int, pool: list[int], impl: str, out: list[Gate]
) -> None:
    """v += const using dirty qubit g; ``pool`` lists extra wires known to
    be idle for the whole call, used to parallelize the two recursive
    half-size additions."""
    m = len(v)
    const &= (1 << m) - 1
    if const == 0 or m == 0:
        return
    if m == 1:
        out.append(((), v[0]))
        return
    lo = v[: (m + 1) // 2]
    hi = v[(m + 1) // 2 :]
    c_lo = const & ((1 << len(lo)) - 1)
    c_hi = const >> len(lo)
    if c_lo:
        # high half += carry(lo + c_lo), via two g-controlled increments
        # bracketing a carry-controlled toggle of g
        ctrl_hi = _incrementer_many_dirty(hi, lo[: len(hi)], g, impl)
        gwall = synth_fanout1(len(hi), [g] + hi).gates
        carry = _carry_gates(lo, c_lo, hi[: max(0, len(lo) - 2)], g, impl)
        out += ctrl_hi
        out += gwall
        out += carry
        out += ctrl_hi
        out += carry
        out += gwall
    # recursive halves; run them on disjoint borrowed wires when possible
    avail = [g] + pool
    need_lo, need_hi = _need(len(lo)), _need(len(hi))
    if c_lo and c_hi and len(avail) >= need_lo + need_hi and need_lo and need_hi:
        lo_share = avail[:need_lo]
        hi_share = avail[need_lo : need_lo + need_hi]
        _const_adder_gates(lo, c_lo, lo_share[0], lo_share[1:], impl, out)
        _const_adder_gates(hi, c_hi, hi_share[0], hi_share[1:], impl, out)
    else:
        # sequential: each half may additionally borrow the other half
        _const_adder_gates(lo, c_lo, g, pool + hi, impl, out)
        _const_adder_gates(hi, c_hi, g, pool + lo, impl, out)


def synth_const_adder(
    n: int,
    c: int,
    layout: RegisterLayout | None = None,
    ladder_impl: str = "log",
) -> Circuit:
    """|v> -> |v + c mod 2^n> with one borrowed dirty qubit g."""
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    if layout is None:
        layout = RegisterLayout(a_qubits=list(range(n)), g_qubits=[n])
    v, g = layout.a_qubits, layout.g_qubits
    if v is None or len(v) != n:
        raise BadParameter("layout must provide the value register")
    if g is None or len(g) != 1:
        raise NotEnoughAncillae("constant adder needs one dirty qubit")
    gates: list[Gate] = []
    _const_adder_gates(v, c, g[0], [], ladder_impl, gates)
    return Circuit(max([*v, g[0]]) + 1, gates)
