"""Abstract machine models and the lowering passes they require.

Two models are built in:

* AC  -- abstract concurrent: any pair or triple of qubits may interact,
  Toffoli is native, one gate per timestep per qubit.
* NTC -- neighbor-only, two-qubit, concurrent: qubits sit on a 1-D line,
  gates touch at most two wires and operands must be line-adjacent.

Lowering to NTC means replacing each Toffoli by the standard five-gate
two-qubit sequence over controlled-V gates and then inserting SWAP chains
until every gate acts on neighbors.  Routing tracks the drifting layout
and reports the final qubit-to-position permutation instead of undoing it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import GATE_ARITY, Circuit, CircuitError, Gate, GateKind

__all__ = [
    "ArchModel",
    "AC",
    "NTC",
    "ConformanceReport",
    "check_conformance",
    "decompose_toffoli",
    "verify_toffoli_identity",
    "LayoutPermutation",
    "route_linear",
]


@dataclass(frozen=True, slots=True)
class ArchModel:
    name: str
    max_arity: int
    adjacency_required: bool


AC = ArchModel("AC", max_arity=3, adjacency_required=False)
NTC = ArchModel("NTC", max_arity=2, adjacency_required=True)


@dataclass(frozen=True, slots=True)
class ConformanceReport:
    conforms: bool
    first_violation: int | None = None


def check_conformance(circuit: Circuit, model: ArchModel) -> ConformanceReport:
    """Check every gate against the model's arity and adjacency rules."""
    for idx, g in enumerate(circuit.gates):
        ops = g.operands
        if len(ops) > model.max_arity:
            return ConformanceReport(False, idx)
        if model.adjacency_required and len(ops) == 2:
            if abs(ops[0] - ops[1]) != 1:
                return ConformanceReport(False, idx)
    return ConformanceReport(True, None)


# -- Toffoli decomposition ---------------------------------------------

def decompose_toffoli(circuit: Circuit) -> Circuit:
    """Rewrite each TOFFOLI(a,b,t) as CV(b,t) CNOT(a,b) CVDAG(b,t) CNOT(a,b) CV(a,t).

    Other gates pass through unchanged; order is otherwise preserved.
    """
    out = Circuit(circuit.width, circuit.registers)
    for g in circuit.gates:
        if g.kind is GateKind.TOFFOLI:
            a, b, t = g.operands
            out.cv(b, t)
            out.cx(a, b)
            out.cvdag(b, t)
            out.cx(a, b)
            out.cv(a, t)
        else:
            out.append(g)
    return out


# Exact dyadic entries: V = sqrt(NOT), so V^2 = NOT and V V^dag = I.
_V = np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]]) / 2
_VDAG = _V.conj().T
_X = np.array([[0, 1], [1, 0]], dtype=complex)


def _gate_matrix(gate: Gate, width: int) -> np.ndarray:
    """Unitary of one gate on ``width`` wires, basis bit i = wire i."""
    dim = 1 << width
    m = np.zeros((dim, dim), dtype=complex)
    ops = gate.operands
    for col in range(dim):
        if gate.kind is GateKind.NOT:
            m[col ^ (1 << ops[0]), col] = 1
        elif gate.kind is GateKind.CNOT:
            c, t = ops
            m[col ^ ((col >> c & 1) << t), col] = 1
        elif gate.kind is GateKind.TOFFOLI:
            c1, c2, t = ops
            m[col ^ ((col >> c1 & col >> c2 & 1) << t), col] = 1
        elif gate.kind is GateKind.SWAP:
            i, j = ops
            bi, bj = col >> i & 1, col >> j & 1
            row = col
            if bi != bj:
                row ^= (1 << i) | (1 << j)
            m[row, col] = 1
        elif gate.kind in (GateKind.CV, GateKind.CVDAG):
            c, t = ops
            block = _V if gate.kind is GateKind.CV else _VDAG
            if not col >> c & 1:
                m[col, col] = 1
            else:
                tb = col >> t & 1
                m[col, col] = block[tb, tb]
                m[col ^ (1 << t), col] = block[tb ^ 1, tb]
        else:  # pragma: no cover - kinds are exhaustive
            raise CircuitError(f"no matrix for {gate.kind}")
    return m


def _sequence_matrix(gates: list[Gate], width: int) -> np.ndarray:
    u = np.eye(1 << width, dtype=complex)
    for g in gates:
        u = _gate_matrix(g, width) @ u
    return u


def verify_toffoli_identity() -> bool:
    """Exact 8x8 check that the five-gate CV sequence equals TOFFOLI(0,1,2).

    All entries involved are dyadic rationals, so the float comparison is
    exact; no tolerance is applied.
    """
    a, b, t = 0, 1, 2
    seq = [
        Gate(GateKind.CV, (b, t)),
        Gate(GateKind.CNOT, (a, b)),
        Gate(GateKind.CVDAG, (b, t)),
        Gate(GateKind.CNOT, (a, b)),
        Gate(GateKind.CV, (a, t)),
    ]
    built = _sequence_matrix(seq, 3)
    want = _gate_matrix(Gate(GateKind.TOFFOLI, (a, b, t)), 3)
    return bool(np.array_equal(built, want))


# -- linear routing ----------------------------------------------------


@dataclass(frozen=True, slots=True)
class LayoutPermutation:
    """Forward map: logical qubit index -> final line position."""

    forward: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.forward) != list(range(len(self.forward))):
            raise CircuitError("forward map is not a permutation")

    def position(self, qubit: int) -> int:
        return self.forward[qubit]


def route_linear(circuit: Circuit) -> tuple[Circuit, LayoutPermutation]:
    """Insert SWAP chains so every gate acts on neighboring line positions.

    Initial layout is the identity (qubit i at position i, registers in
    declared order).  For a two-qubit gate at positions p < q the qubit at
    p marches right one SWAP at a time until it sits beside q; a Toffoli
    is made contiguous by marching its outer operands toward the middle
    one.  The layout drifts, and the final permutation is returned with
    the routed circuit; emitted operands are line positions.  Nothing is
    inserted for already-adjacent operands.
    """
    pos = list(range(circuit.width))  # qubit -> position
    holder = list(range(circuit.width))  # position -> qubit
    out = Circuit(circuit.width, circuit.registers)

    def swap_positions(p: int) -> None:
        """SWAP line positions p and p+1, updating the layout."""
        out.swap(p, p + 1)
        qa, qb = holder[p], holder[p + 1]
        holder[p], holder[p + 1] = qb, qa
        pos[qa], pos[qb] = p + 1, p

    def march_right(p: int, stop: int) -> None:
        while stop - p > 1:
            swap_positions(p)
            p += 1

    def march_left(p: int, stop: int) -> None:
        while p - stop > 1:
            swap_positions(p - 1)
            p -= 1

    for g in circuit.gates:
        arity = GATE_ARITY[g.kind]
        if arity == 2:
            p, q = sorted(pos[o] for o in g.operands)
            march_right(p, q)
        elif arity == 3:
            lo, mid, hi = sorted(pos[o] for o in g.operands)
            march_right(lo, mid)
            march_left(hi, mid)
        out.append(Gate(g.kind, tuple(pos[o] for o in g.operands)))

    return out, LayoutPermutation(tuple(pos))
