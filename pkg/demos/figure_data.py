"""Regenerate the cost-curve tables used for plotting.

Writes two CSV files next to this script: one sweeping the serial ripple
construction over four clock rates against the classical sieve, one
comparing the two parallel constructions at 1 Hz and 1 MHz.  Equivalent
command lines are printed so the tables can be rebuilt without Python.
"""

import shlex
from pathlib import Path

from shorcost.cli import run

HERE = Path(__file__).parent


def emit(name: str, argv: list[str]) -> None:
    out = HERE / name
    code = run(argv + ["--csv", str(out)])
    if code != 0:
        raise SystemExit(f"scale failed with exit {code}")
    rows = out.read_text().count("\n") - 1
    print(f"wrote {out.name}: {rows} rows")
    print("  shorcost " + shlex.join(argv + ["--csv", name]))


def main() -> None:
    emit("ripple_vs_sieve.csv", [
        "scale", "--models", "bcdp",
        "--clocks", "1,1e3,1e6,1e9",
        "--compute-factors", "1,1000",
        "--from", "512", "--to", "65536", "--points", "8",
    ])
    emit("parallel_designs.csv", [
        "scale", "--models", "d,f",
        "--clocks", "1,1e6",
        "--compute-factors", "",
        "--from", "512", "--to", "65536", "--points", "8",
    ])


if __name__ == "__main__":
    main()
