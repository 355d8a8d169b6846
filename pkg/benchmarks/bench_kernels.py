"""Benchmark: compiled Euler-Maclaurin kernel vs pure-Python fallback.

Run from the repo root:

    python benchmarks/bench_kernels.py

Times the raw kernel on representative arguments and a realistic
workload (log Gamma_25(12.5), which drives ~25 zeta-derivative
evaluations through the adaptive driver), then reports the speedup.
The two backends produce bit-identical results; this is asserted first.
"""

from __future__ import annotations

import time

from spindet import _ddem, _ddem_py
from spindet.hurwitz import _C2J

KERNEL_CASES = [
    ("zeta'(-2, z) core, small shift", (-2.0, 0.5, 12, 12, 64, 1e-33)),
    ("zeta'(-12, z) core", (-12.0, 0.5, 16, 12, 64, 1e-33)),
    ("zeta'(-24, 12.5) core, no shift", (-24.0, 12.5, 0, 12, 64, 1e-33)),
    ("zeta(3) core", (3.0, 1.0, 24, 12, 64, 1e-33)),
]


def _time(fn, *args, repeat: int = 200) -> float:
    fn(*args)  # warm-up
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - t0) / repeat


def main() -> None:
    for _, args in KERNEL_CASES:
        assert _ddem.em_hurwitz(*args, _C2J) == _ddem_py.em_hurwitz(*args, _C2J), \
            "backends diverged; benchmark would be meaningless"

    print(f"{'case':<36}{'compiled':>12}{'python':>12}{'speedup':>9}")
    for name, args in KERNEL_CASES:
        tc = _time(_ddem.em_hurwitz, *args, _C2J)
        tp = _time(_ddem_py.em_hurwitz, *args, _C2J, repeat=20)
        print(f"{name:<36}{tc * 1e6:>10.1f}us{tp * 1e6:>10.1f}us"
              f"{tp / tc:>8.1f}x")

    # realistic workload through the public API, switching backends in-place
    from spindet import barnes, hurwitz
    from spindet.barnes import BarnesPoint, log_barnes_gamma

    def workload():
        barnes._b_values_dd.cache_clear()
        return log_barnes_gamma(BarnesPoint(25, 12.5))

    results = {}
    for label, kernel in (("compiled", _ddem), ("python", _ddem_py)):
        hurwitz.em_hurwitz = kernel.em_hurwitz
        try:
            t0 = time.perf_counter()
            value = workload()
            results[label] = (time.perf_counter() - t0, value)
        finally:
            hurwitz.em_hurwitz = _ddem.em_hurwitz
    assert results["compiled"][1] == results["python"][1]
    tc, tp = results["compiled"][0], results["python"][0]
    print(f"{'log Gamma_25(12.5) end-to-end':<36}{tc * 1e3:>10.1f}ms"
          f"{tp * 1e3:>10.1f}ms{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
