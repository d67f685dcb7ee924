"""Wall-time comparison of the pure-Python path against the compiled kernels.

Both paths always exist in the same process: the public entry points
dispatch to the extension for 64-bit array buffers, and the interpreted
implementations back them.  Timing the two directly keeps the comparison
free of interpreter startup noise.

    python3 benchmarks/compare_backends.py --sizes 256,1024,4096 --trials 5
"""

import argparse
import random
import time

from tftmul import backend
from tftmul.modring import default_config, make_buffer, zeros
from tftmul.polymul import _multiply_py, multiply
from tftmul.transforms import _tft_py, tft


def best_of(trials, fn):
    best = None
    for _ in range(trials):
        t0 = time.perf_counter_ns()
        fn()
        dt = time.perf_counter_ns() - t0
        best = dt if best is None else min(best, dt)
    return best


def measure(n, trials, cfg, rng):
    data = [rng.randrange(cfg.p) for _ in range(n)]
    pure_t = best_of(trials, lambda: _tft_py(list(data), 0, n, cfg))
    comp_t = best_of(trials, lambda: tft(make_buffer(data, cfg), cfg))
    m = (n + 1) // 2
    a = [rng.randrange(cfg.p) for _ in range(m)]
    b = [rng.randrange(cfg.p) for _ in range(n + 1 - m)]
    pure_m = best_of(trials, lambda: _multiply_py(a, b, [0] * n, cfg))
    aa, bb = make_buffer(a, cfg), make_buffer(b, cfg)
    comp_m = best_of(trials, lambda: multiply(aa, bb, zeros(n, cfg), cfg))
    return pure_t, comp_t, pure_m, comp_m


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="64,256,1024,4096,16384")
    ap.add_argument("--trials", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    cfg = default_config()
    rng = random.Random(1)
    if backend.backend_name() != "compiled":
        print("note: compiled kernels not available; both columns run interpreted")
    hdr = f"{'n':>7} {'tft pure':>12} {'tft fast':>12} {'ratio':>7} {'mul pure':>12} {'mul fast':>12} {'ratio':>7}"
    print(hdr)
    for n in sizes:
        pt, ct, pm, cm = measure(n, args.trials, cfg, rng)
        print(
            f"{n:>7} {pt:>10}ns {ct:>10}ns {pt / ct:>6.1f}x"
            f" {pm:>10}ns {cm:>10}ns {pm / cm:>6.1f}x"
        )


if __name__ == "__main__":
    main()
