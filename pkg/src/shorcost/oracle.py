"""Basis-state oracle simulation for classical reversible circuits.

NOT / CNOT / TOFFOLI / SWAP permute computational basis states, so a
circuit built from them can be checked against plain integer arithmetic.
CV and CVDAG leave the basis and are rejected.

Two engines share one semantics: a single-state walker over Python ints
(``simulate``) and a packed engine that advances a whole batch of basis
states through the gate list with numpy bit tricks, which is what makes
exhaustive sweeps over 2^16-point domains cheap.  Register values decode
little-endian: the bit at a register's offset is its least significant.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .circuit import Circuit, CircuitError, GateKind, Register

__all__ = [
    "BasisState",
    "NonClassicalGateError",
    "Counterexample",
    "simulate",
    "simulate_mask",
    "exhaustive_check",
    "randomized_check",
]


class NonClassicalGateError(CircuitError):
    """Raised when simulation meets a gate with no basis-state action."""


_CLASSICAL = (GateKind.NOT, GateKind.CNOT, GateKind.TOFFOLI, GateKind.SWAP)


@dataclass(frozen=True, slots=True)
class BasisState:
    """A computational basis state: one bit per wire, packed in an int."""

    width: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.width < 1:
            raise CircuitError("width must be positive")
        if not 0 <= self.mask < (1 << self.width):
            raise CircuitError("mask out of range for width")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BasisState":
        mask = 0
        for i, b in enumerate(bits):
            if b:
                mask |= 1 << i
        return cls(len(bits), mask)

    def to_bits(self) -> list[int]:
        return [(self.mask >> i) & 1 for i in range(self.width)]

    def bit(self, q: int) -> int:
        return (self.mask >> q) & 1

    def get(self, reg: Register) -> int:
        """Little-endian integer value of a register."""
        return (self.mask >> reg.offset) & ((1 << reg.length) - 1)

    def put(self, reg: Register, value: int) -> "BasisState":
        if not 0 <= value < (1 << reg.length):
            raise CircuitError(
                f"value {value} does not fit register {reg.name}({reg.length})"
            )
        lo = ((1 << reg.length) - 1) << reg.offset
        return BasisState(self.width, (self.mask & ~lo) | (value << reg.offset))


def simulate_mask(circuit: Circuit, mask: int) -> int:
    """Advance one packed basis state through the circuit."""
    for g in circuit.gates:
        kind = g.kind
        ops = g.operands
        if kind is GateKind.NOT:
            mask ^= 1 << ops[0]
        elif kind is GateKind.CNOT:
            if mask >> ops[0] & 1:
                mask ^= 1 << ops[1]
        elif kind is GateKind.TOFFOLI:
            if mask >> ops[0] & 1 and mask >> ops[1] & 1:
                mask ^= 1 << ops[2]
        elif kind is GateKind.SWAP:
            i, j = ops
            if (mask >> i & 1) != (mask >> j & 1):
                mask ^= (1 << i) | (1 << j)
        else:
            raise NonClassicalGateError(
                f"non-classical gate {kind.value} has no basis-state semantics"
            )
    return mask


def simulate(circuit: Circuit, state: BasisState) -> BasisState:
    """Map a basis state through the circuit; errors on CV/CVDAG."""
    if state.width != circuit.width:
        raise CircuitError(
            f"state width {state.width} does not match circuit width {circuit.width}"
        )
    return BasisState(state.width, simulate_mask(circuit, state.mask))


# -- packed batch engine ----------------------------------------------

_ONE = np.uint64(1)


class _PackedBatch:
    """A batch of basis states, one uint64 lane per 64 wires."""

    def __init__(self, width: int, masks: Sequence[int]):
        self.width = width
        self.n_lanes = (width + 63) // 64
        self.count = len(masks)
        full = (1 << 64) - 1
        self.lanes = [
            np.array([(m >> (64 * l)) & full for m in masks], dtype=np.uint64)
            for l in range(self.n_lanes)
        ]

    def run(self, circuit: Circuit) -> None:
        lanes = self.lanes
        for g in circuit.gates:
            kind = g.kind
            if kind is GateKind.NOT:
                (t,) = g.operands
                lanes[t >> 6] ^= _ONE << np.uint64(t & 63)
            elif kind is GateKind.CNOT:
                c, t = g.operands
                bit = (lanes[c >> 6] >> np.uint64(c & 63)) & _ONE
                lanes[t >> 6] ^= bit << np.uint64(t & 63)
            elif kind is GateKind.TOFFOLI:
                c1, c2, t = g.operands
                b = (lanes[c1 >> 6] >> np.uint64(c1 & 63)) & (
                    lanes[c2 >> 6] >> np.uint64(c2 & 63)
                ) & _ONE
                lanes[t >> 6] ^= b << np.uint64(t & 63)
            elif kind is GateKind.SWAP:
                i, j = g.operands
                d = (
                    (lanes[i >> 6] >> np.uint64(i & 63))
                    ^ (lanes[j >> 6] >> np.uint64(j & 63))
                ) & _ONE
                lanes[i >> 6] ^= d << np.uint64(i & 63)
                lanes[j >> 6] ^= d << np.uint64(j & 63)
            else:
                raise NonClassicalGateError(
                    f"non-classical gate {kind.value} has no basis-state semantics"
                )

    def register_values(self, reg: Register) -> np.ndarray:
        """Little-endian values of one register across the batch."""
        out = np.zeros(self.count, dtype=np.uint64)
        for k, q in enumerate(reg.qubits):
            bit = (self.lanes[q >> 6] >> np.uint64(q & 63)) & _ONE
            out |= bit << np.uint64(k)
        return out

    def mask(self, index: int) -> int:
        m = 0
        for l, lane in enumerate(self.lanes):
            m |= int(lane[index]) << (64 * l)
        return m


# -- checking helpers --------------------------------------------------


@dataclass(frozen=True, slots=True)
class Counterexample:
    """First disagreement between a circuit and its integer reference."""

    input_registers: dict[str, int]
    expected: dict[str, int]
    actual: dict[str, int]

    def __str__(self) -> str:
        return (
            f"input={self.input_registers} expected={self.expected} "
            f"actual={self.actual}"
        )


SpecFn = Callable[[Mapping[str, int]], Mapping[str, int]]


def _pack_inputs(circuit: Circuit, assignments: list[dict[str, int]]) -> list[int]:
    regs = {r.name: r for r in circuit.registers}
    masks = []
    for a in assignments:
        m = 0
        for name, value in a.items():
            r = regs[name]
            if not 0 <= value < (1 << r.length):
                raise CircuitError(f"value {value} does not fit register {name}")
            m |= value << r.offset
        masks.append(m)
    return masks


def _check(
    circuit: Circuit,
    spec: SpecFn,
    assignments: list[dict[str, int]],
    check_untouched: bool,
) -> Counterexample | None:
    if not assignments:
        return None
    masks = _pack_inputs(circuit, assignments)
    batch = _PackedBatch(circuit.width, masks)
    batch.run(circuit)

    inputs = [
        {r.name: (m >> r.offset) & ((1 << r.length) - 1) for r in circuit.registers}
        for m in masks
    ]
    expected = [dict(spec(inp)) for inp in inputs]

    bad = np.zeros(len(masks), dtype=bool)
    actual_by_reg = {r.name: batch.register_values(r) for r in circuit.registers}
    for r in circuit.registers:
        actual = actual_by_reg[r.name]
        want = np.array(
            [
                e[r.name] if r.name in e else (inp[r.name] if check_untouched else None)
                for e, inp in zip(expected, inputs)
            ],
            dtype=object,
        )
        defined = np.array([w is not None for w in want])
        if defined.any():
            wv = np.array(
                [int(w) if w is not None else 0 for w in want], dtype=np.uint64
            )
            bad |= defined & (actual != wv)

    if not bad.any():
        return None
    i = int(np.argmax(bad))
    return Counterexample(
        input_registers=inputs[i],
        expected=expected[i],
        actual={name: int(vals[i]) for name, vals in actual_by_reg.items()},
    )


def exhaustive_check(
    circuit: Circuit,
    spec: SpecFn,
    domain: Mapping[str, Sequence[int]],
    *,
    check_untouched: bool = True,
) -> Counterexample | None:
    """Compare the circuit against an integer reference over a full domain.

    ``domain`` maps register names to the values they sweep; the check runs
    over the cartesian product, with unlisted registers starting at zero.
    ``spec`` maps input register values to the expected values of the
    registers it cares about; with ``check_untouched`` every other register
    must come back unchanged (which is how ancilla cleanliness is enforced).
    Returns the first counterexample in product order, or None on a clean pass.
    """
    names = list(domain.keys())
    assignments = [
        dict(zip(names, combo))
        for combo in itertools.product(*(domain[name] for name in names))
    ]
    return _check(circuit, spec, assignments, check_untouched)


def randomized_check(
    circuit: Circuit,
    spec: SpecFn,
    domain: Mapping[str, Sequence[int]],
    *,
    trials: int,
    seed: int,
    check_untouched: bool = True,
) -> Counterexample | None:
    """Seeded uniform sampling of each register's value sequence.

    Deterministic for a given seed; ``trials=0`` passes vacuously.
    """
    if trials < 0:
        raise CircuitError("trials must be non-negative")
    rng = random.Random(seed)
    assignments = [
        {name: rng.choice(space) for name, space in domain.items()}
        for _ in range(trials)
    ]
    return _check(circuit, spec, assignments, check_untouched)
