"""Reversible-circuit intermediate representation.

A circuit is a flat, ordered gate sequence over ``width`` qubit wires,
annotated with named registers (contiguous wire spans).  The gate set is
the classical reversible trio NOT / CNOT / TOFFOLI plus SWAP, and the two
non-classical helpers CV / CVDAG (controlled square root of NOT and its
adjoint) that appear only after Toffoli decomposition.

Gate order in ``gates`` is execution order.  There is no DAG here; data
dependencies are recovered by the scheduler from operand overlap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

__all__ = [
    "GateKind",
    "GATE_ARITY",
    "Gate",
    "Register",
    "Circuit",
    "CircuitError",
]


class CircuitError(ValueError):
    """Raised when a structural invariant of the IR is violated."""


class GateKind(Enum):
    NOT = "NOT"
    CNOT = "CNOT"
    TOFFOLI = "TOFFOLI"
    SWAP = "SWAP"
    CV = "CV"
    CVDAG = "CVDAG"


GATE_ARITY: dict[GateKind, int] = {
    GateKind.NOT: 1,
    GateKind.CNOT: 2,
    GateKind.TOFFOLI: 3,
    GateKind.SWAP: 2,
    GateKind.CV: 2,
    GateKind.CVDAG: 2,
}

# Every kind is its own inverse except the CV pair, which swap roles.
_INVERSE_KIND: dict[GateKind, GateKind] = {
    GateKind.NOT: GateKind.NOT,
    GateKind.CNOT: GateKind.CNOT,
    GateKind.TOFFOLI: GateKind.TOFFOLI,
    GateKind.SWAP: GateKind.SWAP,
    GateKind.CV: GateKind.CVDAG,
    GateKind.CVDAG: GateKind.CV,
}


@dataclass(frozen=True, slots=True)
class Gate:
    """One gate application.

    Controls come before the target in ``operands``; SWAP is symmetric so
    its operand order carries no meaning.
    """

    kind: GateKind
    operands: tuple[int, ...]

    def __post_init__(self) -> None:
        ops = tuple(self.operands)
        object.__setattr__(self, "operands", ops)
        want = GATE_ARITY[self.kind]
        if len(ops) != want:
            raise CircuitError(
                f"{self.kind.value} takes {want} operands, got {len(ops)}"
            )
        if len(set(ops)) != len(ops):
            raise CircuitError(f"{self.kind.value} operands must be distinct: {ops}")
        if any(q < 0 for q in ops):
            raise CircuitError(f"negative qubit index in {ops}")

    def inverse(self) -> "Gate":
        return Gate(_INVERSE_KIND[self.kind], self.operands)


@dataclass(frozen=True, slots=True)
class Register:
    """A named contiguous span of qubit wires."""

    name: str
    offset: int
    length: int

    def __post_init__(self) -> None:
        if not self.name:
            raise CircuitError("register name must be non-empty")
        if self.offset < 0 or self.length < 1:
            raise CircuitError(
                f"bad register geometry {self.name}: offset={self.offset} length={self.length}"
            )

    @property
    def qubits(self) -> range:
        return range(self.offset, self.offset + self.length)


class Circuit:
    """Ordered gate list over ``width`` wires with named registers.

    Builders append while constructing; consumers treat instances as
    immutable once handed over.
    """

    def __init__(
        self,
        width: int,
        registers: Iterable[Register | tuple[str, int, int]] = (),
    ) -> None:
        if width < 1:
            raise CircuitError(f"width must be positive, got {width}")
        self.width = width
        regs: list[Register] = []
        for r in registers:
            if not isinstance(r, Register):
                r = Register(*r)
            regs.append(r)
        self.registers: tuple[Register, ...] = tuple(regs)
        self._check_registers()
        self.gates: list[Gate] = []

    def _check_registers(self) -> None:
        seen: set[str] = set()
        used: set[int] = set()
        for r in self.registers:
            if r.name in seen:
                raise CircuitError(f"duplicate register name {r.name!r}")
            seen.add(r.name)
            span = set(r.qubits)
            if r.offset + r.length > self.width:
                raise CircuitError(f"register {r.name!r} exceeds width {self.width}")
            if span & used:
                raise CircuitError(f"register {r.name!r} overlaps another register")
            used |= span

    # -- construction ------------------------------------------------

    def append(self, gate: Gate) -> "Circuit":
        if max(gate.operands) >= self.width:
            raise CircuitError(
                f"gate {gate.kind.value}{gate.operands} out of range for width {self.width}"
            )
        self.gates.append(gate)
        return self

    def x(self, t: int) -> "Circuit":
        return self.append(Gate(GateKind.NOT, (t,)))

    def cx(self, c: int, t: int) -> "Circuit":
        return self.append(Gate(GateKind.CNOT, (c, t)))

    def ccx(self, c1: int, c2: int, t: int) -> "Circuit":
        return self.append(Gate(GateKind.TOFFOLI, (c1, c2, t)))

    def swap(self, a: int, b: int) -> "Circuit":
        return self.append(Gate(GateKind.SWAP, (a, b)))

    def cv(self, c: int, t: int) -> "Circuit":
        return self.append(Gate(GateKind.CV, (c, t)))

    def cvdag(self, c: int, t: int) -> "Circuit":
        return self.append(Gate(GateKind.CVDAG, (c, t)))

    # -- queries -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.gates)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return (
            self.width == other.width
            and self.registers == other.registers
            and self.gates == other.gates
        )

    def __repr__(self) -> str:
        return f"Circuit(width={self.width}, gates={len(self.gates)})"

    def register(self, name: str) -> Register:
        for r in self.registers:
            if r.name == name:
                return r
        raise KeyError(name)

    def census(self) -> dict[GateKind, int]:
        """Gate counts by kind; every kind is present, zero included."""
        counts = {kind: 0 for kind in GateKind}
        for g in self.gates:
            counts[g.kind] += 1
        return counts

    def inverse(self) -> "Circuit":
        """Reversed gate order with each gate replaced by its inverse."""
        inv = Circuit(self.width, self.registers)
        inv.gates = [g.inverse() for g in reversed(self.gates)]
        return inv

    # -- serialization -----------------------------------------------

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "registers": [
                {"name": r.name, "offset": r.offset, "length": r.length}
                for r in self.registers
            ],
            "gates": [
                {"kind": g.kind.value, "operands": list(g.operands)}
                for g in self.gates
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Circuit":
        try:
            width = data["width"]
            regs = [
                Register(r["name"], r["offset"], r["length"])
                for r in data["registers"]
            ]
            c = cls(width, regs)
            for g in data["gates"]:
                c.append(Gate(GateKind(g["kind"]), tuple(g["operands"])))
        except CircuitError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise CircuitError(f"malformed circuit document: {exc}") from exc
        return c

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> "Circuit":
        return cls.from_dict(json.loads(text))
