"""Increasing paths in randomly edge-ordered complete graphs.

Simulation algorithms (pedestrian walks, greedy, k-greedy), exact
longest-cycle statistics of random permutations, exact small-n path
oracles, and the second-moment machinery for increasing Hamiltonian
paths.
"""

__version__ = "0.1.0"

from .core import (
    CapacityError,
    EdgeOrdering,
    PERMUTATION,
    REAL,
    UnsupportedModelError,
    edge_index,
    edge_endpoints,
    is_increasing,
    matching_ordering,
    random_ordering,
    read_ordering,
    to_permutation_model,
    write_ordering,
)
