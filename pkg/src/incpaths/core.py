"""Edge orderings of K_n: canonical edge indexing, ordering generation, and
increasing-walk validation.

An edge ordering assigns every edge of the complete graph K_n a distinct
label; only the relative order of labels matters.  Two label models are
supported: ``permutation`` (labels are a bijection onto 1..n(n-1)/2) and
``real`` (distinct reals in the open interval (0,1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

PERMUTATION = "permutation"
REAL = "real"
MODELS = (PERMUTATION, REAL)

#: PRNG pinned for reproducibility; recorded in every harness report.
PRNG_NAME = f"numpy-PCG64-{np.__version__}"


class CapacityError(ValueError):
    """A size parameter exceeds the configured capacity cap."""


class UnsupportedModelError(ValueError):
    """The operation requires the other label model."""


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(u: int, v: int, n: int) -> int:
    """Rank of the unordered pair {u, v} in lexicographic (min, max) order.

    Bijective onto 0..n(n-1)/2 - 1; every module uses this as the canonical
    edge numbering.
    """
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"vertex out of range for n={n}: ({u}, {v})")
    if u == v:
        raise ValueError(f"self-loop ({u}, {u}) is not an edge")
    if u > v:
        u, v = v, u
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def edge_endpoints(index: int, n: int) -> tuple[int, int]:
    """Inverse of edge_index."""
    m = num_edges(n)
    if not 0 <= index < m:
        raise ValueError(f"edge index {index} out of range for n={n}")
    u = 0
    # row u holds n-1-u consecutive indices
    while index >= n - 1 - u:
        index -= n - 1 - u
        u += 1
    return u, u + 1 + index


@lru_cache(maxsize=8)
def all_edges(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Endpoint arrays (us, vs) for all edges in edge_index order."""
    us, vs = np.triu_indices(n, k=1)
    us = us.astype(np.int64)
    vs = vs.astype(np.int64)
    us.setflags(write=False)
    vs.setflags(write=False)
    return us, vs


@dataclass(frozen=True)
class EdgeOrdering:
    """An edge ordering of K_n.

    ``labels[i]`` is the label of the edge with canonical index i: an
    integer in 1..n(n-1)/2 for the permutation model, a real in (0,1) for
    the real model.  Instances are immutable and safe to share across
    threads.
    """

    n: int
    model: str
    labels: np.ndarray
    seed: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2, got n={self.n}")
        if self.model not in MODELS:
            raise ValueError(f"unknown label model {self.model!r}")
        if len(self.labels) != num_edges(self.n):
            raise ValueError("label array length != n(n-1)/2")
        self.labels.setflags(write=False)

    def label(self, u: int, v: int):
        """Label of edge {u, v} (int for permutation model, float for real)."""
        return self.labels[edge_index(u, v, self.n)].item()

    @cached_property
    def matrix(self) -> np.ndarray:
        """Symmetric n-by-n label matrix (float64) with +inf on the diagonal.

        Permutation labels fit float64 exactly for any practical n.
        """
        mat = np.full((self.n, self.n), np.inf)
        us, vs = all_edges(self.n)
        mat[us, vs] = self.labels
        mat[vs, us] = self.labels
        return mat

    @cached_property
    def edges_by_label(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays (us, vs) of all edges sorted by ascending label."""
        order = np.argsort(self.labels)  # labels are distinct
        us, vs = all_edges(self.n)
        return us[order], vs[order]


def _detie_real(labels: np.ndarray) -> np.ndarray:
    """Make real labels pairwise distinct and strictly inside (0,1).

    Ties are broken by perturbing the higher-edge-index label upward by the
    smallest representable increment; a stable sort puts the lower edge
    index first within each tie group, so the bump lands on the higher one.
    """
    labels = labels.copy()
    labels[labels <= 0.0] = np.nextafter(0.0, 1.0)
    sorted_view = np.sort(labels)
    if np.all(sorted_view[1:] > sorted_view[:-1]):
        return labels  # no ties, the overwhelmingly common case
    order = np.argsort(labels, kind="stable")
    prev = 0.0
    for i in order:
        if labels[i] <= prev:
            labels[i] = np.nextafter(prev, np.inf)
        prev = labels[i]
    return labels


def random_ordering(n: int, seed: int, model: str = PERMUTATION) -> EdgeOrdering:
    """Uniformly random edge ordering, deterministic given (n, seed, model)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if model not in MODELS:
        raise ValueError(f"unknown label model {model!r}")
    rng = np.random.default_rng(seed)
    m = num_edges(n)
    if model == PERMUTATION:
        labels = rng.permutation(m).astype(np.int64) + 1
    else:
        labels = _detie_real(rng.random(m))
    return EdgeOrdering(n=n, model=model, labels=labels, seed=seed)


def matching_ordering(n: int) -> EdgeOrdering:
    """Adversarial ordering from a round-robin 1-factorization of K_n.

    K_n (n even) splits into n-1 perfect matchings by the circle method
    (vertex n-1 fixed, the rest rotating); matching i receives the label
    block i*(n/2)+1 .. (i+1)*(n/2), assigned in ascending edge_index order
    within the block.  The longest increasing walk is then exactly n-1.
    """
    if n < 2 or n % 2 != 0:
        raise ValueError(f"need even n >= 2, got n={n}")
    labels = np.zeros(num_edges(n), dtype=np.int64)
    label = 1
    for r in range(n - 1):
        matching = [(n - 1, r)]
        for i in range(1, n // 2):
            matching.append(((r + i) % (n - 1), (r - i) % (n - 1)))
        for idx in sorted(edge_index(u, v, n) for u, v in matching):
            labels[idx] = label
            label += 1
    return EdgeOrdering(n=n, model=PERMUTATION, labels=labels)


def check_walk(n: int, vertices: Sequence[int]) -> None:
    """Raise ValueError unless ``vertices`` is a valid walk in K_n."""
    if len(vertices) < 1:
        raise ValueError("walk must contain at least one vertex")
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
    for a, b in zip(vertices, vertices[1:]):
        if a == b:
            raise ValueError("consecutive walk vertices must differ")


def is_path(vertices: Sequence[int]) -> bool:
    """True iff the walk is self-avoiding."""
    return len(set(vertices)) == len(vertices)


def walk_labels(ordering: EdgeOrdering, vertices: Sequence[int]) -> list:
    """Labels of the walk's edges, in traversal order."""
    check_walk(ordering.n, vertices)
    return [ordering.label(a, b) for a, b in zip(vertices, vertices[1:])]


def is_increasing(ordering: EdgeOrdering, vertices: Sequence[int]) -> bool:
    """True iff consecutive edge labels strictly increase along the walk.

    Single-vertex and single-edge walks are vacuously increasing.
    """
    labels = walk_labels(ordering, vertices)
    return all(a < b for a, b in zip(labels, labels[1:]))


def to_permutation_model(ordering: EdgeOrdering) -> EdgeOrdering:
    """Permutation-model ordering inducing the same relative label order."""
    ranks = np.empty(len(ordering.labels), dtype=np.int64)
    ranks[np.argsort(ordering.labels)] = np.arange(1, len(ordering.labels) + 1)
    return EdgeOrdering(n=ordering.n, model=PERMUTATION, labels=ranks)


def write_ordering(ordering: EdgeOrdering, path) -> None:
    """Write the text format: "n <n> <model>", then "<u> <v> <label>" per
    edge in edge_index order.  Real labels round-trip bit-exactly."""
    us, vs = all_edges(ordering.n)
    with open(path, "w") as fh:
        fh.write(f"n {ordering.n} {ordering.model}\n")
        for u, v, lab in zip(us, vs, ordering.labels):
            if ordering.model == PERMUTATION:
                fh.write(f"{u} {v} {lab}\n")
            else:
                fh.write(f"{u} {v} {lab:.17g}\n")


def read_ordering(path) -> EdgeOrdering:
    """Read an ordering written by write_ordering."""
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 3 or header[0] != "n":
            raise ValueError(f"bad ordering file header: {header}")
        n, model = int(header[1]), header[2]
        if model not in MODELS:
            raise ValueError(f"unknown label model {model!r}")
        dtype = np.int64 if model == PERMUTATION else np.float64
        labels = np.zeros(num_edges(n), dtype=dtype)
        for line in fh:
            u, v, lab = line.split()
            idx = edge_index(int(u), int(v), n)
            labels[idx] = int(lab) if model == PERMUTATION else float(lab)
    return EdgeOrdering(n=n, model=model, labels=labels)
