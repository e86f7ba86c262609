"""Multi-controlled X decompositions over {Toffoli, CNOT, X}.

Two families:

* :func:`synth_mcx_log` — two borrowed (dirty) ancillae, O(k) gates and
  O(log k) depth, via the conditionally-clean-ancilla technique: a
  log-depth Toffoli ladder folds the controls into a short control list,
  a linear chain finishes the job, and a toggle-detection double pass
  makes the construction correct for *any* initial ancilla values.
* :func:`synth_mcx_linear` — k-2 borrowed ancillae, 4k-8 Toffoli gates,
  linear depth (the classic borrowed-bit chain).  Kept as an
  independently-coded baseline for cross-checking.

:func:`lower_layered` rewrites a layered MCX circuit gate-by-gate,
borrowing idle qubits of each layer as the dirty ancillae.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Circuit,
    Gate,
    InsufficientIdleQubits,
    LayeredCircuit,
    NotEnoughAncillae,
)


@dataclass
class McxDecomposition:
    body: Circuit
    main_qubits: list[int]  # k controls followed by the target
    ancilla_qubits: list[int]


# ---------------------------------------------------------------------------
# Linear-depth chain with one borrowed ancilla (used internally for the
# short control list left over by the log-depth ladder).
# ---------------------------------------------------------------------------


def _linear_ladder_ops(ctrls: list[int]) -> tuple[list[Gate], int]:
    """Toffoli/X chain over the control wires themselves; returns the gate
    list and the index of the control carrying the folded product."""
    n = len(ctrls)
    if n <= 2:
        raise NotEnoughAncillae("chain needs at least 3 controls")
    gates: list[Gate] = []
    for i in range(1, n - 2, 2):
        gates.append((tuple(sorted((ctrls[i + 1], ctrls[i + 2]))), ctrls[i]))
        gates.append(((), ctrls[i]))
    if n % 2 == 0:
        c1, c2, t = n - 3, n - 5, n - 6
    else:
        c1, c2, t = n - 1, n - 4, n - 5
    if t >= 0:
        gates.append((tuple(sorted((ctrls[c1], ctrls[c2]))), ctrls[t]))
        gates.append(((), ctrls[t]))
    for i in range(t, 1, -2):
        gates.append((tuple(sorted((ctrls[i], ctrls[i - 1]))), ctrls[i - 2]))
        gates.append(((), ctrls[i - 2]))
    final_ctrl = max(0, 5 - n)
    return gates, final_ctrl


def _mcx_chain(
    controls: list[int], target: int, work: int, dirty: bool
) -> list[Gate]:
    """MCX via one work wire and a linear chain; ``dirty=True`` adds the
    toggle-detection second pass so any work-wire value is restored."""
    k = len(controls)
    if k == 0:
        return [((), target)]
    if k == 1:
        return [((controls[0],), target)]
    if k == 2:
        return [(tuple(sorted(controls)), target)]
    gates: list[Gate] = []
    gates.append((tuple(sorted((controls[0], controls[1]))), work))
    ladder, final_ctrl = _linear_ladder_ops(controls)
    gates += ladder
    gates.append((tuple(sorted((work, controls[final_ctrl]))), target))
    gates += ladder[::-1]
    gates.append((tuple(sorted((controls[0], controls[1]))), work))
    if dirty:
        gates += ladder
        gates.append((tuple(sorted((work, controls[final_ctrl]))), target))
        gates += ladder[::-1]
    return gates


# ---------------------------------------------------------------------------
# Log-depth ladder with conditionally clean ancillae.
# ---------------------------------------------------------------------------


def _parallel_ccx_x(xs: list[int], ys: list[int], ts: list[int]) -> list[Gate]:
    gates: list[Gate] = []
    for x, y, t in zip(xs, ys, ts):
        gates.append(((), t))
        gates.append((tuple(sorted((x, y))), t))
    return gates


def _log_depth_ladder(
    work: int, controls: list[int]
) -> tuple[list[Gate], list[int]]:
    """Fold the controls into a short list using the work wire plus
    already-consumed controls as conditionally clean ancillae."""
    gates: list[Gate] = []
    # ancilla wires ordered by the time they become free, earliest first,
    # so consuming from the front lets consecutive rounds pipeline
    anc = [work]
    final_ctrls: list[int] = []
    remaining = list(controls)
    while len(remaining) > 1:
        batch_len = min(len(anc) + 1, len(remaining))
        batch, remaining = remaining[:batch_len], remaining[batch_len:]
        new_anc: list[int] = []
        while len(batch) > 1:
            half = len(batch) // 2
            st = len(batch) % 2
            xs = batch[st : st + half]
            ys = batch[st + half :]
            ts = anc[:half]
            if ts != [work]:
                gates += _parallel_ccx_x(xs, ys, ts)
            else:
                gates.append((tuple(sorted((xs[0], ys[0]))), ts[0]))
            new_anc += batch[st:]
            batch = ts + batch[:st]
            anc = anc[half:]
        anc = anc + new_anc
        final_ctrls += batch
    final_ctrls += remaining
    final_ctrls.remove(work)
    return gates, final_ctrls


def synth_mcx_log(
    controls: list[int], target: int, ancillae: list[int]
) -> McxDecomposition:
    """MCX over {Toffoli, CNOT, X} with two borrowed dirty ancillae.

    The body acts as MCX on ``controls``/``target`` and as the identity on
    both ancillae for every initial ancilla value.  O(k) gates, O(log k)
    depth.
    """
    k = len(controls)
    if k <= 2:
        return McxDecomposition(
            _trivial_mcx(controls, target), list(controls) + [target], list(ancillae)
        )
    if len(ancillae) < 2:
        raise NotEnoughAncillae("need 2 dirty ancillae for log-depth MCX")
    w0, w1 = ancillae[0], ancillae[1]
    ladder, final_ctrls = _log_depth_ladder(w0, list(controls))
    gates: list[Gate] = []
    gates += ladder
    if len(final_ctrls) == 1:
        mid = [(tuple(sorted((w0, final_ctrls[0]))), target)]
    elif len(final_ctrls) <= 3:
        # short leftover product: toggle-detected linear chain (exact for
        # any value of the borrowed wire)
        mid = _mcx_chain([w0] + final_ctrls, target, w1, dirty=True)
    else:
        # recurse on the leftover product, borrowing w1 plus any consumed
        # control that is not among the leftover controls
        spare = next(q for q in controls if q not in final_ctrls)
        mid = synth_mcx_log([w0] + final_ctrls, target, [w1, spare]).body.gates
    gates += mid
    gates += ladder[::-1]
    # toggle detection: repeat with the work wire's gates skipped once so
    # an arbitrary initial work-wire value cancels out
    gates += ladder[1:]
    gates += mid
    gates += ladder[1:][::-1]
    width = max([*controls, target, *ancillae]) + 1
    return McxDecomposition(
        Circuit(width, gates), list(controls) + [target], list(ancillae)
    )


def _trivial_mcx(controls: list[int], target: int) -> Circuit:
    width = max([*controls, target]) + 1
    return Circuit(width, [(tuple(sorted(controls)), target)])


def synth_mcx_linear(
    controls: list[int], target: int, ancillae: list[int]
) -> Circuit:
    """MCX with k-2 borrowed dirty ancillae: 4(k-2) Toffoli gates, linear
    depth.  Independent of :func:`synth_mcx_log` by construction."""
    k = len(controls)
    if k <= 2:
        return _trivial_mcx(controls, target)
    if len(ancillae) < k - 2:
        raise NotEnoughAncillae(
            f"need {k - 2} dirty ancillae for linear MCX with {k} controls"
        )
    g = [None] + list(ancillae[: k - 2])  # g[1] .. g[k-2]
    half: list[Gate] = [(tuple(sorted((controls[k - 1], g[k - 2]))), target)]
    for i in range(k - 2, 1, -1):
        half.append((tuple(sorted((controls[i], g[i - 1]))), g[i]))
    half.append((tuple(sorted((controls[0], controls[1]))), g[1]))
    for i in range(2, k - 1):
        half.append((tuple(sorted((controls[i], g[i - 1]))), g[i]))
    width = max([*controls, target, *ancillae[: k - 2]]) + 1
    return Circuit(width, half + half)


# ---------------------------------------------------------------------------
# Layer-by-layer lowering.
# ---------------------------------------------------------------------------


def lower_layered(lc: LayeredCircuit, policy: str = "log") -> Circuit:
    """Rewrite a layered MCX circuit over {Toffoli, CNOT, X}.

    Within each layer, every gate with more than two controls borrows
    idle qubits of that layer (the lowest-indexed ones not yet claimed)
    as dirty ancillae: two for ``policy="log"``, k-2 for
    ``policy="linear"``.  Gates with at most two controls pass through.
    """
    out: list[Gate] = []
    n = lc.qubit_count
    for li, layer in enumerate(lc.layers):
        busy = set()
        for controls, t in layer:
            busy.update(controls)
            busy.add(t)
        idle = [q for q in range(n) if q not in busy]
        cursor = 0
        for gi, g in enumerate(layer):
            controls, target = g
            k = len(controls)
            if k <= 2:
                out.append(g)
                continue
            need = 2 if policy == "log" else k - 2
            if cursor + need > len(idle):
                raise InsufficientIdleQubits(
                    f"layer {li}, gate {gi}: need {need} idle qubits, "
                    f"{len(idle) - cursor} left"
                )
            borrowed = idle[cursor : cursor + need]
            cursor += need
            if policy == "log":
                out.extend(synth_mcx_log(list(controls), target, borrowed).body.gates)
            else:
                out.extend(synth_mcx_linear(list(controls), target, borrowed).gates)
    return Circuit(n, out)
