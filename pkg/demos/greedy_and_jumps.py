#!/usr/bin/env python3
"""The greedy increasing path reaches a (1 - 1/e) fraction of the vertices.

With i.i.d. uniform labels, each greedy step's label gap beyond the
previous label (its "jump") is the minimum of the remaining fresh
uniforms, so the expected jump after t steps is about 1/(n-t).  The
greedy path survives while the jump total stays below 1, which happens
up to t with sum 1/n + ... + 1/(n-t) = log(n/(n-t)) = 1, i.e. a fraction
1 - 1/e = 0.6321... of the vertices.
"""

import numpy as np

from incpaths.core import REAL, random_ordering
from incpaths.walks import greedy_path, jumps

n = 2000
fractions = []
for seed in range(40):
    ordering = random_ordering(n, seed, REAL)
    path = greedy_path(ordering, 0)
    fractions.append((len(path) - 1) / n)
print(f"greedy fraction over 40 runs at n={n}: mean {np.mean(fractions):.4f}"
      f"  (limit 1 - 1/e = {1 - np.exp(-1):.4f})")

# the jump decomposition of one run: the sum telescopes to the final
# label plus the number of descents, so an increasing path keeps it <= 1
ordering = random_ordering(200, 0, REAL)
path = greedy_path(ordering, 0)
decomposition = jumps(ordering, path)
print(f"\none run at n=200: path length {len(path) - 1}")
print(f"  jump total        {decomposition.prefix_sums[-1]:.6f}  (stays below 1)")
print(f"  final edge label  {ordering.label(path[-2], path[-1]):.6f}")
print(f"  largest jump      {decomposition.jumps.max():.6f}")
print(f"  mean jump         {decomposition.jumps.mean():.6f}")
