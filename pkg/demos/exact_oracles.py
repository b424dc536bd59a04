#!/usr/bin/env python3
"""Exact small-n answers: longest increasing paths and Hamiltonian counts.

Processing edges in ascending label order over (visited-set, endpoint)
states gives exact answers up to n = 20: the longest increasing path
length, the number H_n of increasing Hamiltonian vertex sequences, and
existence.  E[H_n] = n on the nose, yet increasing Hamiltonian paths
exist far more often than that tiny expectation suggests.
"""

import numpy as np

from incpaths.core import random_ordering
from incpaths.exact import (
    brute_force_longest,
    count_increasing_ham_paths,
    longest_increasing_path_len,
)

print("=== subset DP vs brute-force DFS (n=7) ===")
agree = all(
    longest_increasing_path_len(random_ordering(7, seed))
    == brute_force_longest(random_ordering(7, seed))
    for seed in range(25)
)
print(f"25 random orderings: oracles agree = {agree}")

print("\n=== the count H_n is tiny on average, existence is common ===")
for n in (8, 10, 12):
    counts = []
    exists = 0
    for seed in range(400):
        ordering = random_ordering(n, seed)
        h = count_increasing_ham_paths(ordering)
        counts.append(h)
        exists += h > 0
    print(f"n={n:2d}: mean H = {np.mean(counts):6.2f} (E[H] = {n}),  "
          f"max H = {max(counts):4d},  Pr[H > 0] = {exists / 400:.3f}")

print("\nexistence probability stays near 0.9+ here even though the mean")
print("count is only n: a few orderings carry many paths, most carry a few.")
