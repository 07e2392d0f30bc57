"""Timing comparison of the kernel backends and the two orbit routes.

Run from the repository root:

    python benchmarks/bench_backends.py [--repeats N]

The first table times the raw kernels (pure Python vs the compiled
extension) on the shapes the library actually hits.  The second table
compares the two ways of producing projective orbit coordinates: one
wedge expansion followed by repeated unit multiplication, against
re-deriving every codeword and taking its minors.
"""

from __future__ import annotations

import argparse
import random
import time

from orbitcode import (
    GF,
    GeneratorSpec,
    orbit,
    plucker_coordinates,
    plucker_orbit,
)
from orbitcode import _kernels as kernels
from orbitcode._kernels import pure

try:
    from orbitcode._kernels import _core as compiled
except ImportError:
    compiled = None


def best_us(fn, repeats: int, rounds: int = 3) -> float:
    """Microseconds per call, best of a few rounds."""
    best = float("inf")
    for _ in range(rounds):
        start = time.perf_counter()
        for _ in range(repeats):
            fn()
        best = min(best, (time.perf_counter() - start) / repeats)
    return best * 1e6


def kernel_cases(rng: random.Random):
    t3 = GF(3).tables
    t9 = GF(9).tables
    a46 = [[rng.randrange(3) for _ in range(6)] for _ in range(4)]
    b66 = [[rng.randrange(3) for _ in range(6)] for _ in range(6)]
    s66 = [[rng.randrange(9) for _ in range(6)] for _ in range(6)]
    rows2 = [[rng.randrange(3) for _ in range(6)] for _ in range(2)]
    col_sets = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    return [
        ("matmul 4x6 @ 6x6 GF(3)", lambda impl: impl.matmul(a46, b66, t3)),
        ("rref 4x6 GF(3)", lambda impl: impl.rref(a46, t3)),
        ("det 6x6 GF(9)", lambda impl: impl.det(s66, t9)),
        (
            "batch_minors 2x6, 15 col sets GF(3)",
            lambda impl: impl.batch_minors(rows2, [(0, 1)], col_sets, t3),
        ),
    ]


def orbit_routes():
    from orbitcode import Subspace

    F3 = GF(3)
    g = GeneratorSpec(F3, ["x^6+x^3+x^2+1"])
    seed = Subspace.from_text(F3, "1,0,0,0,1,2;0,1,0,2,0,1")

    def via_wedge():
        plucker_orbit(g, seed)

    def via_minors():
        for w in orbit(g, seed).codewords:
            plucker_coordinates(w)

    return len(orbit(g, seed).codewords), via_wedge, via_minors


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=2000, help="calls per timing round")
    args = parser.parse_args()

    rng = random.Random(1)
    impls = [("pure", pure)]
    if compiled is not None:
        impls.append(("compiled", compiled))
    else:
        print("compiled extension not built; timing the pure backend only\n")

    width = 38
    header = f"{'kernel op':<{width}}" + "".join(f"{name:>12}" for name, _ in impls)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, call in kernel_cases(rng):
        times = [best_us(lambda impl=impl: call(impl), args.repeats) for _, impl in impls]
        row = f"{label:<{width}}" + "".join(f"{t:>10.2f}us" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)

    length, via_wedge, via_minors = orbit_routes()
    repeats = max(1, args.repeats // 100)
    print(f"\norbit coordinates, {length} codewords at n=6 over GF(3) "
          f"({kernels.current_backend()} backend)")
    wedge_us = best_us(via_wedge, repeats)
    minors_us = best_us(via_minors, repeats)
    print(f"{'one wedge + unit steps':<{width}}{wedge_us / 1000:>10.2f}ms")
    print(f"{'per-codeword minors':<{width}}{minors_us / 1000:>10.2f}ms")
    print(f"{'minors time / wedge time':<{width}}{minors_us / wedge_us:>10.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
