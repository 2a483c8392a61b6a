"""Single-linkage deduplication of complex value lists.

Orbit sweeps produce many floating-point copies of each mathematically
distinct value; counting claims ("twelve values", "five values") need an
explicit, auditable clustering rule.  Values within ``tol * scale`` of each
other (single linkage, ``scale = max(1, max|v|)``) belong to one cluster.  An
instance is rejected as ambiguous when some inter-cluster gap comes within a
factor 10 of the linking threshold, since the count would then depend on the
tolerance choice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import NumericFailureError

__all__ = ["ClusterResult", "cluster_values", "DEDUP_TOL", "DEDUP_TOL_FLOOR"]

DEDUP_TOL = 1e-7
DEDUP_TOL_FLOOR = 1e-10

# Inter-cluster gaps closer than AMBIGUITY_FACTOR * threshold reject as ambiguous.
AMBIGUITY_FACTOR = 10.0


@dataclass(frozen=True)
class ClusterResult:
    """Deduplicated values, ordered by first occurrence in the input."""

    centers: tuple[complex, ...]
    sizes: tuple[int, ...]
    threshold: float
    min_gap: float  # smallest distance between members of different clusters

    @property
    def count(self) -> int:
        return len(self.centers)


def cluster_values(values, tol: float = DEDUP_TOL) -> ClusterResult:
    """Cluster ``values`` with relative tolerance ``tol`` (floor 1e-10)."""
    vals = np.asarray(values, dtype=complex)
    if vals.ndim != 1 or vals.size == 0:
        raise NumericFailureError("clustering needs a nonempty 1-d value list")
    scale = max(1.0, float(np.max(np.abs(vals))))
    threshold = max(float(tol), DEDUP_TOL_FLOOR) * scale

    dist = np.abs(vals[:, None] - vals[None, :])
    adjacency = csr_matrix(dist <= threshold)
    n_clusters, labels = connected_components(adjacency, directed=False)

    first_index = np.full(n_clusters, vals.size, dtype=int)
    for i, lab in enumerate(labels):
        if i < first_index[lab]:
            first_index[lab] = i
    order = np.argsort(first_index)

    centers = []
    sizes = []
    for lab in order:
        members = vals[labels == lab]
        centers.append(complex(members.mean()))
        sizes.append(int(members.size))

    if n_clusters > 1:
        different = labels[:, None] != labels[None, :]
        min_gap = float(dist[different].min())
    else:
        min_gap = float("inf")

    if min_gap < AMBIGUITY_FACTOR * threshold:
        raise NumericFailureError(
            f"ambiguous clustering: inter-cluster gap {min_gap:.3e} is within "
            f"10x of the linking threshold {threshold:.3e}; use a smaller "
            "tolerance or treat the instance as near-degenerate"
        )

    return ClusterResult(
        centers=tuple(centers),
        sizes=tuple(sizes),
        threshold=threshold,
        min_gap=min_gap,
    )
