"""Release-gating acceptance checks, one verdict line per area.

Each test prints ``acceptance N (<area>): PASS`` or ``FAIL`` so a run with
``pytest -s tests/test_acceptance.py`` reads as a checklist.  Failures also
carry the offending values in the assertion message.  Everything here is
deliberately re-derived from the public API only, without reaching into
helpers from the other test modules.
"""

import math
import random

from shorcost import (
    ALG_D,
    ALG_F,
    BCDP,
    MONTH_SECONDS,
    NTC,
    YEAR_SECONDS,
    AdderKind,
    Circuit,
    ClassicalModel,
    ModexpSpec,
    build_adder,
    build_const_modadd,
    build_controlled_adder,
    build_modexp,
    build_modmul_const,
    check_conformance,
    decompose_toffoli,
    exhaustive_check,
    metrics,
    nfs_seconds,
    quantum_seconds,
    randomized_check,
    required_clock,
    route_linear,
    verify_toffoli_identity,
)
from shorcost.cli import run
from shorcost.oracle import simulate_mask

ALL_ADDERS = (AdderKind.VBE_RIPPLE, AdderKind.CDKM_RIPPLE, AdderKind.CONDITIONAL_SUM)


def _verdict(number: int, area: str, problems: list[str]) -> None:
    status = "FAIL" if problems else "PASS"
    print(f"acceptance {number} ({area}): {status}")
    assert not problems, "; ".join(problems)


def _expect(problems: list[str], ok: bool, message: str) -> None:
    if not ok:
        problems.append(message)


def _within(value: float, target: float, rel: float) -> bool:
    return abs(value - target) <= rel * target


def test_acceptance_1_clock_rates():
    problems: list[str] = []

    hz = required_clock(BCDP, 576, MONTH_SECONDS)
    _expect(problems, _within(hz, 4000.0, 0.05),
            f"BCDP month clock at 576 bits: {hz} not within 5% of 4 kHz")
    _expect(problems, abs(hz - 3981.3) < 0.05, f"expected 3981.3 Hz, got {hz}")

    sec = quantum_seconds(BCDP, 576, 1e6)
    _expect(problems, _within(sec, 3 * 3600.0, 0.10),
            f"BCDP at 1 MHz: {sec} s not within 10% of three hours")
    _expect(problems, abs(sec - 10319.6) < 0.05, f"expected 10319.6 s, got {sec}")

    years = quantum_seconds(BCDP, 576, 1.0) / YEAR_SECONDS
    _expect(problems, years >= 300.0, f"BCDP at 1 Hz: {years} years < 300")

    hz_f = required_clock(ALG_F, 576, MONTH_SECONDS)
    _expect(problems, _within(hz_f, 27.0, 0.25),
            f"log-depth/2n^2 model month clock: {hz_f} not within 25% of 27 Hz")
    _expect(problems, abs(hz_f - 23.5) < 0.05, f"expected 23.5 Hz, got {hz_f}")

    # widest band: this curve's published headline rate was tuned per point,
    # the closed form lands near half of it
    hz_d = required_clock(ALG_D, 576, MONTH_SECONDS)
    _expect(problems, 0.3 / 2 <= hz_d <= 0.3 * 2,
            f"min-depth model month clock: {hz_d} not within 2x of 0.3 Hz")
    _expect(problems, abs(hz_d - 0.168) < 0.0005, f"expected 0.168 Hz, got {hz_d}")

    _verdict(1, "clock rates at 576 bits", problems)


def test_acceptance_2_speedup_ratios():
    problems: list[str] = []
    from shorcost import speedup

    ratio_d = speedup(BCDP, ALG_D, 6000)
    _expect(problems, 0.9e6 <= ratio_d <= 2e6,
            f"depth-optimized speedup at n=6000: {ratio_d} outside [0.9e6, 2e6]")
    ratio_f = speedup(BCDP, ALG_F, 6000)
    _expect(problems, 0.9e3 <= ratio_f <= 2e3,
            f"space-frugal speedup at n=6000: {ratio_f} outside [0.9e3, 2e3]")
    _verdict(2, "asymptotic speedup ratios", problems)


def test_acceptance_3_classical_anchor():
    problems: list[str] = []

    base = nfs_seconds(ClassicalModel(), 530)
    _expect(problems, base == 2_592_000.0, f"530-bit anchor: {base} != 2592000.0")
    fast = nfs_seconds(ClassicalModel(compute_factor=1000.0), 530)
    _expect(problems, fast == 2_592.0, f"factor-1000 anchor: {fast} != 2592.0")

    samples = [nfs_seconds(ClassicalModel(), n) for n in range(512, 8193, 512)]
    _expect(problems, len(samples) == 16, "expected 16 sample points")
    _expect(problems,
            all(lo < hi for lo, hi in zip(samples, samples[1:])),
            "sieve time not strictly increasing over 512..8192")
    _verdict(3, "classical factoring time anchors", problems)


def _series_from_csv(path) -> dict[tuple[str, float], list[tuple[int, float]]]:
    curves: dict[tuple[str, float], list[tuple[int, float]]] = {}
    lines = path.read_text().strip().split("\n")
    assert lines[0] == "n,series,clock_hz,compute_factor,seconds"
    for line in lines[1:]:
        n, name, clock, _factor, seconds = line.split(",")
        curves.setdefault((name, float(clock)), []).append((int(n), float(seconds)))
    return curves


def test_acceptance_4_cost_curve_tables(tmp_path):
    problems: list[str] = []

    first = tmp_path / "bcdp.csv"
    code = run(["scale", "--models", "bcdp", "--clocks", "1,1e3,1e6,1e9",
                "--compute-factors", "", "--from", "512", "--to", "65536",
                "--points", "8", "--csv", str(first)])
    _expect(problems, code == 0, f"scale exit {code} for the ripple-cost table")
    second = tmp_path / "df.csv"
    code = run(["scale", "--models", "d,f", "--clocks", "1,1e6",
                "--compute-factors", "", "--from", "512", "--to", "65536",
                "--points", "8", "--csv", str(second)])
    _expect(problems, code == 0, f"scale exit {code} for the log-depth table")

    curves = _series_from_csv(first)
    curves.update(_series_from_csv(second))
    _expect(problems, len(curves) == 8, f"expected 8 curves, got {len(curves)}")

    for (name, clock), pts in curves.items():
        pts.sort()
        seconds = [s for _, s in pts]
        _expect(problems,
                all(lo < hi for lo, hi in zip(seconds, seconds[1:])),
                f"{name}@{clock} Hz not monotone in n")
        slopes = [
            (math.log(s1) - math.log(s0)) / (math.log(n1) - math.log(n0))
            for (n0, s0), (n1, s1) in zip(pts, pts[1:])
        ]
        # curvature measured per octave once past the small-n regime
        high = [s for (n0, _), s in zip(pts, slopes) if n0 >= 1024]
        drift = max(
            (abs(b - a) for a, b in zip(high, high[1:])), default=0.0
        )
        _expect(problems, drift <= 0.15,
                f"{name}@{clock} Hz drifts {drift:.3f} per octave above n=1024")

    _verdict(4, "cost-curve table regeneration", problems)


def _plain_adder_contract(n: int):
    domain = {"a": range(1 << n), "b": range(1 << n), "carry_out": (0, 1)}

    def fn(vals):
        total = vals["a"] + vals["b"]
        return {"b": total % (1 << n), "carry_out": vals["carry_out"] ^ (total >> n)}

    return domain, fn


def test_acceptance_5_arithmetic_oracles():
    problems: list[str] = []

    for kind in ALL_ADDERS:
        for n in range(1, 5):
            domain, fn = _plain_adder_contract(n)
            cx = exhaustive_check(build_adder(kind, n), fn, domain)
            _expect(problems, cx is None, f"{kind.value} adder n={n}: {cx}")

    for kind in ALL_ADDERS:
        n = 3
        domain, plain = _plain_adder_contract(n)
        domain = dict(domain, ctl=(0, 1))

        def gated(vals):
            return plain(vals) if vals["ctl"] else {}

        cx = exhaustive_check(build_controlled_adder(kind, n), gated, domain)
        _expect(problems, cx is None, f"controlled {kind.value} adder: {cx}")

    for const in range(15):
        circ = build_const_modadd(4, const, 15)
        cx = exhaustive_check(
            circ, lambda v, c=const: {"t": (v["t"] + c) % 15}, {"t": range(15)}
        )
        _expect(problems, cx is None, f"modadd +{const} mod 15: {cx}")

    for const in (1, 2, 4, 7, 8, 11, 13, 14):
        circ = build_modmul_const(4, const, 15)
        cx = exhaustive_check(
            circ, lambda v, c=const: {"y": (v["y"] * c) % 15}, {"y": range(15)}
        )
        _expect(problems, cx is None, f"modmul *{const} mod 15: {cx}")

    for s in (1, 2):
        circ = build_modexp(ModexpSpec(n=4, modulus=15, base=7, s=s))
        cx = exhaustive_check(
            circ, lambda v: {"r": pow(7, v["e"], 15)}, {"e": range(256)}
        )
        _expect(problems, cx is None, f"modexp 7^e mod 15 s={s}: {cx}")

    for kind in (AdderKind.CDKM_RIPPLE, AdderKind.CONDITIONAL_SUM):
        domain, fn = _plain_adder_contract(8)
        cx = randomized_check(build_adder(kind, 8), fn, domain, trials=1000, seed=7)
        _expect(problems, cx is None, f"{kind.value} adder n=8 sampled: {cx}")

    _verdict(5, "arithmetic oracle sweeps", problems)


def test_acceptance_6_scaling_shapes():
    problems: list[str] = []

    sizes = [8, 16, 32, 64]
    cdkm = [metrics(build_adder(AdderKind.CDKM_RIPPLE, n)).depth for n in sizes]
    ratios = [hi / lo for lo, hi in zip(cdkm, cdkm[1:])]
    _expect(problems, all(1.7 <= r <= 2.3 for r in ratios),
            f"ripple adder depth doubling ratios {ratios} not linear-like")

    csum = [metrics(build_adder(AdderKind.CONDITIONAL_SUM, n)).depth
            for n in (4, 8, 16, 32, 64)]
    diffs = [hi - lo for lo, hi in zip(csum, csum[1:])]
    _expect(problems, len(set(diffs)) == 1,
            f"conditional-sum depth increments {diffs} not constant per octave")

    gates = [len(build_modexp(ModexpSpec(n=n, modulus=(1 << n) - 1, base=2)).gates)
             for n in (4, 8, 16)]
    for lo, hi in zip(gates, gates[1:]):
        _expect(problems, 0.5 * 8 <= hi / lo <= 2 * 8,
                f"modexp gate growth {hi}/{lo} not cubic within factor 2")

    _verdict(6, "depth and gate-count scaling shapes", problems)


def test_acceptance_7_linear_architecture():
    problems: list[str] = []

    _expect(problems, verify_toffoli_identity(),
            "five-gate Toffoli expansion failed the matrix check")

    modexp = build_modexp(ModexpSpec(n=4, modulus=15, base=7))
    ac_depth = metrics(modexp).depth
    routed, _ = route_linear(decompose_toffoli(modexp))
    report = check_conformance(routed, NTC)
    _expect(problems, report.conforms,
            f"routed modexp violates the line architecture: {report}")
    ntc_depth = metrics(routed).depth
    _expect(problems, ntc_depth > ac_depth,
            f"line depth {ntc_depth} not above unconstrained depth {ac_depth}")

    # route the Toffoli-bearing adder as-is so both sides stay simulable
    adder = build_adder(AdderKind.CDKM_RIPPLE, 4)
    routed_adder, perm = route_linear(adder)
    ok = True
    for mask in range(1 << adder.width):
        want = simulate_mask(adder, mask)
        got_positions = simulate_mask(routed_adder, mask)  # input layout is identity
        got = 0
        for q in range(adder.width):
            got |= ((got_positions >> perm.forward[q]) & 1) << q
        if got != want:
            ok = False
            break
    _expect(problems, ok, "routed ripple adder disagrees with the flat one")

    _verdict(7, "linear-array routing and decomposition", problems)


def test_acceptance_8_scheduler_depth_oracle():
    problems: list[str] = []

    def longest_path(circ: Circuit) -> int:
        free = [0] * circ.width
        for gate in circ.gates:
            t = 1 + max(free[q] for q in gate.operands)
            for q in gate.operands:
                free[q] = t
        return max(free, default=0)

    mismatches = 0
    for seed in range(100):
        rng = random.Random(seed)
        width = rng.randint(2, 10)
        circ = Circuit(width)
        for _ in range(rng.randint(0, 200)):
            arity = rng.choice((1, 2, 2, 3))
            ops = rng.sample(range(width), k=min(arity, width))
            if len(ops) == 1:
                circ.x(ops[0])
            elif len(ops) == 2:
                (circ.cx if rng.random() < 0.7 else circ.swap)(*ops)
            else:
                circ.ccx(*ops)
        if metrics(circ).depth != longest_path(circ):
            mismatches += 1
    _expect(problems, mismatches == 0,
            f"{mismatches}/100 random circuits disagree with the DP depth")

    _verdict(8, "scheduler depth oracle equivalence", problems)


def test_verdict_lines_cover_every_area():
    """The checklist above stays in sync with itself: 8 numbered areas."""
    names = [x for x in globals() if x.startswith("test_acceptance_")]
    assert len(names) == 8
