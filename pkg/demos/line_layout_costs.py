"""What a linear qubit layout really costs.

Takes the verified 4-bit modular-exponentiation circuit, expands each
Toffoli into two-qubit gates, routes the result onto a line where only
neighbors may interact, and compares depth before and after.  Then
anchors the analytic curves: the measured-to-model depth ratio for the
ripple adder construction at a couple of widths.
"""

from shorcost import (
    NTC,
    AdderKind,
    ModexpSpec,
    build_modexp,
    check_conformance,
    decompose_toffoli,
    empirical_bridge,
    metrics,
    route_linear,
)


def main() -> None:
    spec = ModexpSpec(n=4, modulus=15, base=7)
    circ = build_modexp(spec)
    flat = metrics(circ)

    routed, _ = route_linear(decompose_toffoli(circ))
    assert check_conformance(routed, NTC).conforms
    lined = metrics(routed)

    print("4-bit modular exponentiation, unconstrained vs linear layout:")
    print(f"  unconstrained: depth {flat.depth:>7,}  gates {flat.total_gates:>7,}")
    print(f"  line layout  : depth {lined.depth:>7,}  gates {lined.total_gates:>7,}")
    print(f"  slowdown     : {lined.depth / flat.depth:.1f}x")
    print()

    print("measured depth vs analytic curve (ripple construction):")
    for n, modulus in ((4, 15), (8, 247)):
        record = empirical_bridge(
            ModexpSpec(n=n, modulus=modulus, base=7, adder=AdderKind.CDKM_RIPPLE)
        )
        print(f"  n={n}: measured {record.measured_depth:>7,}"
              f"  model {record.model_depth:>9,.0f}"
              f"  ratio {record.ratio:.1f}")
    print()
    print("the ratio is the constant-factor gap between this artifact's")
    print("synthesized circuits and the tuned closed-form curves; it is")
    print("recorded, not assumed, and the tests watch its trend.")


if __name__ == "__main__":
    main()
