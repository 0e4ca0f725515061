"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import math
import timeit

import numpy as np

from uaed import _pykernels

try:
    from uaed import _ckernels
except ImportError:
    _ckernels = None


def cases():
    rng = np.random.default_rng(0)
    imgs = rng.random((512, 28, 28)).astype(np.float32)
    c, s = math.cos(math.pi / 4), math.sin(math.pi / 4)
    pi = rng.dirichlet(np.ones(8))
    r = rng.random(8)
    return {
        "rotate_bilinear (512 images)": lambda m: m.rotate_bilinear(imgs, c, s),
        "entropic_dual_golden (200 iters)": lambda m: m.entropic_dual_golden(pi, r, 0.3, 1e-3, 1e3, 200),
        "kl_ball_tilt (2000 grid)": lambda m: m.kl_ball_tilt(pi, r, 0.3, 1e-4, 1e4, 2000, 80),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':34s} {'python (ms)':>12s} {'cython (ms)':>12s} {'speedup':>8s}")
    for name, fn in cases().items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        if _ckernels is None:
            print(f"{name:34s} {py:12.2f} {'n/a':>12s} {'':>8s}")
            continue
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:34s} {py:12.2f} {cy:12.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
