"""
Running time against the number of crossings
============================================

A 5x5 grid with k crossed cells. The core stays fixed, so every extra
crossing doubles the number of planar base cases.
"""

import time

import numpy as np

from crossmax.generators import crossing_family
from crossmax.solver import solve

ks = np.arange(0, 9)
seconds = np.empty(len(ks))
for i, k in enumerate(ks):
    d = crossing_family(int(k))
    start = time.perf_counter()
    res = solve(d.graph, d.config)
    seconds[i] = time.perf_counter() - start
    print(f"k={k:2d}  base cases {res.stats.base_cases:4d}  value {res.value:4d}  {1000 * seconds[i]:8.1f} ms")

ratios = seconds[2:] / seconds[1:-1]
print("ratio per extra crossing:", np.round(ratios, 2))
print(f"median {np.median(ratios):.2f}")

# log2 of the time should grow by about one per crossing
slope, _ = np.polyfit(ks[1:], np.log2(seconds[1:]), 1)
print(f"fitted doubling exponent {slope:.2f}")
