"""How fast would a quantum computer have to run to beat the sieve?

Evaluates the headline numbers for a 576-bit factoring instance: the
clock rate each modular-exponentiation construction needs to finish in
one month, and what a fixed clock buys you.
"""

from shorcost import (
    ALG_D,
    ALG_F,
    BCDP,
    MODELS,
    MONTH_SECONDS,
    YEAR_SECONDS,
    ClassicalModel,
    crossover_bits,
    nfs_seconds,
    quantum_seconds,
    required_clock,
    speedup,
)

BITS = 576


def main() -> None:
    print(f"classical sieve at {BITS} bits:"
          f" {nfs_seconds(ClassicalModel(), BITS) / MONTH_SECONDS:.2f} months")
    print()

    print(f"clock rate needed to factor a {BITS}-bit number in one month:")
    for model in MODELS.values():
        hz = required_clock(model, BITS, MONTH_SECONDS)
        print(f"  {model.name:>6}: {hz:12.5g} Hz"
              f"   (width {model.space(BITS):,.0f} qubits)")
    print()

    for hz, label in ((1e6, "1 MHz"), (1.0, "1 Hz")):
        sec = quantum_seconds(BCDP, BITS, hz)
        unit = f"{sec / 3600:.1f} hours" if sec < 1e6 else f"{sec / YEAR_SECONDS:.0f} years"
        print(f"serial ripple construction at {label}: {unit}")
    print()

    n = 6000
    print(f"depth speedups over the serial ripple construction at n={n}:")
    print(f"  minimum-depth curve : {speedup(BCDP, ALG_D, n):,.0f}x")
    print(f"  space-frugal curve  : {speedup(BCDP, ALG_F, n):,.0f}x")
    print()

    for hz in (4000.0, 1e6):
        bits = crossover_bits(BCDP, hz)
        where = f"{bits} bits" if bits is not None else "never in range"
        print(f"crossover vs the sieve at {hz:g} Hz: {where}")


if __name__ == "__main__":
    main()
