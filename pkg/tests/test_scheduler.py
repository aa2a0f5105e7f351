import random

from shorcost.circuit import GATE_ARITY, Circuit, Gate, GateKind
from shorcost.scheduler import asap_schedule, metrics


def longest_path_depth(circuit):
    """Independent depth oracle: last-writer recurrence per qubit."""
    finish = [0] * circuit.width
    depth = 0
    for g in circuit.gates:
        t = 1 + max(finish[q] for q in g.operands)
        for q in g.operands:
            finish[q] = t
        depth = max(depth, t)
    return depth


def test_disjoint_pair_shares_a_timestep():
    c = Circuit(4).cx(0, 1).cx(2, 3).cx(1, 2)
    sched = asap_schedule(c)
    assert sched.depth == 2
    assert [len(ts) for ts in sched.timesteps] == [2, 1]


def test_serial_chain():
    c = Circuit(1).x(0).x(0).x(0)
    assert asap_schedule(c).depth == 3


def test_empty_circuit():
    sched = asap_schedule(Circuit(2))
    assert sched.depth == 0
    assert sched.timesteps == ()
    m = metrics(Circuit(2))
    assert m.depth == 0 and m.total_gates == 0 and m.mean_concurrency == 0.0


def test_metrics_fields():
    c = Circuit(4).cx(0, 1).cx(2, 3).cx(1, 2)
    m = metrics(c)
    assert m.depth == 2
    assert m.total_gates == 3
    assert m.width == 4
    assert m.max_concurrency == 2
    assert m.mean_concurrency == 1.5


def _random_circuit(rng, width, n_gates):
    c = Circuit(width)
    kinds = [k for k in GateKind if GATE_ARITY[k] <= width]
    for _ in range(n_gates):
        kind = rng.choice(kinds)
        c.append(Gate(kind, tuple(rng.sample(range(width), GATE_ARITY[kind]))))
    return c


def test_depth_equals_longest_path_on_random_circuits():
    rng = random.Random(42)
    for _ in range(100):
        c = _random_circuit(rng, rng.randint(1, 10), rng.randint(0, 200))
        sched = asap_schedule(c)
        assert sched.depth == longest_path_depth(c)
        # schedule invariants
        m = metrics(c)
        assert m.depth * m.max_concurrency >= m.total_gates if m.total_gates else True
        assert sum(len(ts) for ts in sched.timesteps) == len(c)


def test_same_timestep_permutation_is_depth_neutral():
    rng = random.Random(7)
    for _ in range(25):
        c = _random_circuit(rng, 6, 40)
        sched = asap_schedule(c)
        # rebuild the gate list with each timestep's gates reversed
        shuffled = Circuit(c.width)
        for ts in sched.timesteps:
            for i in reversed(ts):
                shuffled.append(c.gates[i])
        assert asap_schedule(shuffled).depth == sched.depth


def test_concatenation_depths():
    rng = random.Random(9)
    a = _random_circuit(rng, 4, 30)
    b = _random_circuit(rng, 4, 30)

    disjoint = Circuit(8)
    for g in a.gates:
        disjoint.append(g)
    for g in b.gates:
        disjoint.append(Gate(g.kind, tuple(q + 4 for q in g.operands)))
    assert (
        asap_schedule(disjoint).depth
        == max(asap_schedule(a).depth, asap_schedule(b).depth)
    )

    # fully shared wires: a chain of NOTs on one qubit extends serially
    chain1 = Circuit(1)
    chain2 = Circuit(1)
    for _ in range(5):
        chain1.x(0)
    for _ in range(3):
        chain2.x(0)
    joined = Circuit(1)
    for g in chain1.gates + chain2.gates:
        joined.append(g)
    assert asap_schedule(joined).depth == 5 + 3
