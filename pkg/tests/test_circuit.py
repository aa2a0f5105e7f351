import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shorcost.circuit import (
    GATE_ARITY,
    Circuit,
    CircuitError,
    Gate,
    GateKind,
    Register,
)


def test_empty_circuit_construction():
    c = Circuit(3, [("a", 0, 2), ("c", 2, 1)])
    assert c.width == 3
    assert len(c) == 0
    assert c.register("a").qubits == range(0, 2)
    assert c.register("c").qubits == range(2, 3)


def test_width_one_no_registers_is_valid():
    c = Circuit(1)
    assert c.width == 1 and len(c) == 0


@pytest.mark.parametrize(
    "width,regs",
    [
        (2, [("a", 0, 2), ("b", 1, 2)]),       # overlap
        (2, [("a", 1, 2)]),                    # out of range
        (3, [("a", 0, 1), ("a", 1, 1)]),       # duplicate name
        (0, []),                               # bad width
    ],
)
def test_bad_construction_rejected(width, regs):
    with pytest.raises(CircuitError):
        Circuit(width, regs)


def test_register_length_must_be_positive():
    with pytest.raises(CircuitError):
        Register("z", 0, 0)


@pytest.mark.parametrize(
    "kind,arity",
    [
        (GateKind.NOT, 1),
        (GateKind.CNOT, 2),
        (GateKind.TOFFOLI, 3),
        (GateKind.SWAP, 2),
        (GateKind.CV, 2),
        (GateKind.CVDAG, 2),
    ],
)
def test_gate_arities(kind, arity):
    assert GATE_ARITY[kind] == arity
    gate = Gate(kind, tuple(range(arity)))
    assert len(gate.operands) == arity


def test_gate_operand_validation():
    with pytest.raises(CircuitError):
        Gate(GateKind.CNOT, (1, 1))  # repeated operand
    with pytest.raises(CircuitError):
        Gate(GateKind.TOFFOLI, (0, 1))  # wrong arity
    with pytest.raises(CircuitError):
        Gate(GateKind.NOT, (-1,))


def test_append_range_check():
    c = Circuit(2)
    with pytest.raises(CircuitError):
        c.cx(0, 5)


def test_gate_inverse_kinds():
    assert Gate(GateKind.CV, (0, 1)).inverse().kind is GateKind.CVDAG
    assert Gate(GateKind.CVDAG, (0, 1)).inverse().kind is GateKind.CV
    for kind in (GateKind.NOT, GateKind.CNOT, GateKind.TOFFOLI, GateKind.SWAP):
        g = Gate(kind, tuple(range(GATE_ARITY[kind])))
        assert g.inverse() == g


def test_census_counts_every_kind():
    c = Circuit(3).x(0).cx(0, 1).cx(1, 2).ccx(0, 1, 2)
    census = c.census()
    assert census[GateKind.NOT] == 1
    assert census[GateKind.CNOT] == 2
    assert census[GateKind.TOFFOLI] == 1
    assert census[GateKind.SWAP] == 0  # zero-count kinds still present
    assert sum(census.values()) == len(c)


def test_json_round_trip_bit_exact():
    c = Circuit(3, [("a", 0, 2), ("b", 2, 1)]).x(0).cx(0, 1).ccx(0, 1, 2)
    text = c.dumps()
    again = Circuit.loads(text)
    assert again == c
    assert again.dumps() == text
    data = json.loads(text)
    assert set(data) == {"width", "registers", "gates"}
    assert data["gates"][0] == {"kind": "NOT", "operands": [0]}


def test_loads_rejects_unknown_kind():
    with pytest.raises(CircuitError):
        Circuit.from_dict(
            {"width": 1, "registers": [], "gates": [{"kind": "HADAMARD", "operands": [0]}]}
        )


# ---------------------------------------------------------------------------
# randomized structural properties


@st.composite
def circuits(draw, max_width=8, max_gates=40):
    width = draw(st.integers(min_value=2, max_value=max_width))
    c = Circuit(width)
    kinds = [k for k in GateKind if GATE_ARITY[k] <= width]
    for _ in range(draw(st.integers(min_value=0, max_value=max_gates))):
        kind = draw(st.sampled_from(kinds))
        arity = GATE_ARITY[kind]
        ops = draw(
            st.lists(
                st.integers(min_value=0, max_value=width - 1),
                min_size=arity,
                max_size=arity,
                unique=True,
            )
        )
        c.append(Gate(kind, tuple(ops)))
    return c


@given(circuits())
@settings(max_examples=60)
def test_round_trip_any_circuit(c):
    assert Circuit.loads(c.dumps()) == c


@given(circuits())
@settings(max_examples=60)
def test_inverse_is_an_involution(c):
    assert c.inverse().inverse() == c


@given(circuits())
@settings(max_examples=60)
def test_inverse_reverses_and_preserves_counts(c):
    inv = c.inverse()
    assert len(inv) == len(c)
    census, inv_census = c.census(), inv.census()
    # CV and CVDAG trade places, everything else keeps its count
    assert inv_census[GateKind.CV] == census[GateKind.CVDAG]
    assert inv_census[GateKind.CVDAG] == census[GateKind.CV]
    for kind in (GateKind.NOT, GateKind.CNOT, GateKind.TOFFOLI, GateKind.SWAP):
        assert inv_census[kind] == census[kind]
    assert [g.operands for g in inv.gates] == [g.operands for g in reversed(c.gates)]
