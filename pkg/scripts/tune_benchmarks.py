#!/usr/bin/env python3
"""Grid-search clustering parameters for the synthetic benchmarks.

Calibration runs on seeds disjoint from the regression suite (which uses
0..9) so the frozen presets are not tuned to the test seeds.

Usage: python scripts/tune_benchmarks.py TP --q 8,12,16 --alpha 150,160,168 \\
           --M 12,16 --n 1500 --seeds 100:104
"""

import argparse
import math
import sys
import time

import numpy as np

from pathclust import StageError, accuracy, make_benchmark, pbc_pipeline
from pathclust.datagen import benchmark_info
from pathclust.presets import default_noise


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("name")
    ap.add_argument("--q", default="8,12,16")
    ap.add_argument("--alpha", default="140,150,160,168", help="degrees")
    ap.add_argument("--M", default="12")
    ap.add_argument("--n", type=int, default=1500)
    ap.add_argument("--noise", type=float, default=None)
    ap.add_argument("--seeds", default="100:105")
    args = ap.parse_args()

    info = benchmark_info(args.name)
    noise = args.noise if args.noise is not None else default_noise(args.name)
    lo, hi = args.seeds.split(":")
    seeds = range(int(lo), int(hi))
    datasets = {s: make_benchmark(args.name, args.n, noise, s) for s in seeds}

    print(f"# {info.name} K={info.k} n={args.n} noise={noise:g} seeds={args.seeds}")
    print(f"{'q':>3} {'alpha':>6} {'M':>3} {'mean':>7} {'min':>7} {'sec':>6}  accs")
    best = None
    for q in map(int, args.q.split(",")):
        for alpha_deg in map(float, args.alpha.split(",")):
            alpha = math.radians(alpha_deg)
            for m in map(int, args.M.split(",")):
                accs = []
                t0 = time.perf_counter()
                for s in seeds:
                    d = datasets[s]
                    try:
                        r = pbc_pipeline(d.points, q, info.k, m, alpha, s)
                        accs.append(accuracy(r.labels, d.labels))
                    except StageError:
                        accs.append(0.0)
                dt = time.perf_counter() - t0
                mean = float(np.mean(accs))
                row = (mean, min(accs), q, alpha_deg, m)
                if best is None or row > best:
                    best = row
                print(f"{q:>3} {alpha_deg:>6.1f} {m:>3} {mean:>7.4f} {min(accs):>7.4f} "
                      f"{dt:>6.2f}  {' '.join(f'{a:.3f}' for a in accs)}")
    print(f"# best: mean={best[0]:.4f} min={best[1]:.4f} "
          f"q={best[2]} alpha={best[3]}deg M={best[4]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
