"""Compare the jitted and pure-numpy kernel paths.

Run: python3 benchmarks/bench_kernels.py [--repeats N]
The jitted path is only reported when numba imported successfully and
OPA_NO_NUMBA is unset.
"""

import argparse
import time

import numpy as np

from opa import kernels


def time_call(fn, *args, repeats=200):
    fn(*args)  # warmup (jit compilation, cache effects)
    start = time.perf_counter()
    for _ in range(repeats):
        fn(*args)
    return (time.perf_counter() - start) / repeats * 1e3


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=200)
    parser.add_argument("--size", type=int, default=8, help="grid side length")
    parser.add_argument("--channels", type=int, default=80, help="input channels")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    h = w = args.size
    cin, cout = args.channels, 32
    x = rng.standard_normal((h, w, cin)).astype(np.float32)
    wt = rng.standard_normal((3, 3, cin, cout)).astype(np.float32)
    b = rng.standard_normal(cout).astype(np.float32)
    g = rng.standard_normal((h, w, cout)).astype(np.float32)
    deltas = rng.standard_normal(4096).astype(np.float32)
    dones = (rng.random(4096) < 0.02).astype(np.float32)

    cases = [
        ("conv3x3 forward", kernels.conv3x3_forward_np, (x, wt, b)),
        ("conv3x3 backward", kernels.conv3x3_backward_np, (x, wt, g)),
        ("gae scan (4096)", kernels.gae_scan_np, (deltas, dones, np.float32(0.855))),
    ]
    print(f"{'kernel':<20} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for name, np_fn, call_args in cases:
        t_np = time_call(np_fn, *call_args, repeats=args.repeats)
        if kernels.HAVE_NUMBA:
            nb_fn = getattr(kernels, np_fn.__name__.replace("_np", "_nb"))
            t_nb = time_call(nb_fn, *call_args, repeats=args.repeats)
            print(f"{name:<20} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{name:<20} {t_np:>10.4f} {'n/a':>10} {'n/a':>8}")


if __name__ == "__main__":
    main()
