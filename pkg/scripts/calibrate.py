"""Calibration runs behind the frozen test thresholds.

Re-running this prints the raw statistics from which the constants in
tests/test_acceptance.py were frozen: leaf-depth bounds for seeded
trees of 2^16 elements (1000 trials), the step-per-depth constant for
unfocus-after-focus, first-exposure trim cost, and the per-move scan
constant.  Thresholds were frozen once from these numbers; the test
suite never recalibrates them.
"""

import math
import sys
import time

from zipseq import checker
from zipseq.levels import mix64


def depth_calibration(n, trials, seed):
    means = []
    maxes = []
    for trial in range(trials):
        t = checker.build_tree(n, mix64(seed + trial))
        ds = checker.leaf_depths(t)
        means.append(sum(ds) / len(ds))
        maxes.append(max(ds))
    return means, maxes


def main():
    t0 = time.time()
    seed = 20260810

    print("== leaf depth, n=2^16, 1000 trials ==")
    means, maxes = depth_calibration(2 ** 16, 1000, seed)
    print(f"mean depth: avg={sum(means)/len(means):.3f} "
          f"min={min(means):.3f} max={max(means):.3f}")
    print(f"max depth:  avg={sum(maxes)/len(maxes):.1f} "
          f"min={min(maxes)} max={max(maxes)}")

    print("== leaf depth, n=2^8, 1000 trials ==")
    means8, maxes8 = depth_calibration(2 ** 8, 1000, seed)
    print(f"mean depth: avg={sum(means8)/len(means8):.3f} "
          f"min={min(means8):.3f} max={max(means8):.3f}")
    print(f"max depth:  max={max(maxes8)}")
    print(f"growth ratio mean(2^16)/mean(2^8) = "
          f"{(sum(means)/len(means)) / (sum(means8)/len(means8)):.3f}")

    print("== unfocus-after-focus steps vs depth, n=2^16 ==")
    worst_ratio = 0.0
    all_ratios = []
    for trial in range(100):
        t = checker.build_tree(2 ** 16, mix64(seed + 5000 + trial))
        ds = checker.leaf_depths(t)
        depth = max(ds)
        for k in range(16):
            p = (k * 65536) // 16 + (trial % 97)
            steps = checker.unfocus_steps(t, p % 65536)
            ratio = steps / depth
            all_ratios.append(ratio)
            if ratio > worst_ratio:
                worst_ratio = ratio
    print(f"steps/maxdepth: avg={sum(all_ratios)/len(all_ratios):.3f} "
          f"max={worst_ratio:.3f}")

    print("== focus steps vs depth (sanity) ==")
    worst = 0
    for trial in range(50):
        t = checker.build_tree(2 ** 16, mix64(seed + 9000 + trial))
        depth = max(checker.leaf_depths(t))
        for k in range(8):
            p = (k * 65536) // 8
            fs = checker.focus_steps(t, p)
            worst = max(worst, fs - depth)
    print(f"max(focus_steps - max_depth) = {worst} (must be <= 0)")

    print("== first-exposure trim steps after focus, n=2^16 ==")
    tot = 0
    cnt = 0
    worst = 0
    for trial in range(200):
        t = checker.build_tree(2 ** 16, mix64(seed + 13000 + trial))
        for k in range(16):
            p = 1 + (k * 65534) // 16
            for d in ("L", "R"):
                s = checker.first_exposure_steps(t, p, d)
                tot += s
                cnt += 1
                worst = max(worst, s)
    print(f"first exposure steps: mean={tot/cnt:.3f} max={worst}")

    print("== k moves with trim, n=2^16, k=1000 ==")
    n = 2 ** 16
    k = 1000
    ratios = []
    for trial in range(100):
        t = checker.build_tree(n, mix64(seed + 17000 + trial))
        steps = checker.move_scan_steps(t, n - 1, k, "L")
        ratios.append(steps / (k * math.log2(n)))
    print(f"steps/(k*log2 n): avg={sum(ratios)/len(ratios):.4f} "
          f"max={max(ratios):.4f}")

    print(f"(calibration took {time.time()-t0:.1f}s)")


if __name__ == "__main__":
    sys.exit(main())
