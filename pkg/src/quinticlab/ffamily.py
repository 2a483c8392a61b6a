"""The sine-weighted root function f, its labeled six-member family, orbit
analysis under even relabelings, and the rank of the family's linear relations.

``f`` is a degree-5 form in an ordered tuple of five roots.  Relabeling the
roots by the 60 even permutations produces exactly 12 distinct values for
generic input; they close under negation into 6 sign pairs and coincide with
the labeled family ``(+-f, +-f_0, ..., +-f_4)``.  Stacked family rows from
independent instances span only a 3-dimensional complement: the six values
satisfy three linear relations, which :func:`relation_rank` recovers
numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .clustering import DEDUP_TOL, ClusterResult, cluster_values
from .errors import InvalidInputError, NumericFailureError
from .kernels import eval_f_rows
from .permutations import Perm5, all_a5
from .polynomials import as_root_tuple, is_degenerate

__all__ = [
    "FFamily",
    "OrbitReport",
    "RelationReport",
    "eval_f",
    "f_family",
    "family_values_for_perms",
    "a5_orbit",
    "relation_rank",
    "RANK_TOL",
]

RANK_TOL = 1e-6

# Family argument patterns: row 0 is f itself, row 1+k reorders the tuple to
# (x_k, x_{k+3}, x_{k+4}, x_{k+1}, x_{k+2}), indices mod 5.
FAMILY_PATTERNS = np.array(
    [[0, 1, 2, 3, 4]] + [[(k + d) % 5 for d in (0, 3, 4, 1, 2)] for k in range(5)],
    dtype=np.int64,
)

_LABELS = ("f", "f0", "f1", "f2", "f3", "f4")


@dataclass(frozen=True)
class FFamily:
    """The six labeled values computed from one ordered root tuple."""

    f: complex
    fk: tuple[complex, complex, complex, complex, complex]

    def values(self) -> tuple[complex, ...]:
        """(f, f_0, ..., f_4) in label order."""
        return (self.f, *self.fk)


@dataclass(frozen=True)
class OrbitReport:
    """Deduplicated even-relabeling orbit of f with sign pairing and labels.

    When ``degenerate`` is False: ``values`` has exactly 12 entries,
    ``pair_map`` holds 6 disjoint index pairs (i, j) with values[j] = -values[i],
    and ``family_match[i]`` is the signed label (e.g. '+f', '-f3') matching
    values[i].
    """

    values: tuple[complex, ...]
    pair_map: tuple[tuple[int, int], ...]
    family_match: tuple[str, ...]
    degenerate: bool


@dataclass(frozen=True)
class RelationReport:
    """Numerical rank analysis of stacked (f, f_0..f_4) sample rows."""

    rank: int
    singular_values: tuple[float, ...]
    null_basis: tuple[tuple[complex, ...], ...] | None
    integer_relations: tuple[tuple[int, ...], ...] | None


def eval_f(roots: Sequence[complex]) -> complex:
    """The 20-term sine-weighted form on an ordered 5-tuple of roots.

    sum over m in 0..4, n in 1..4 of
        sin(2*pi*n/5) * x_m * x_{m+n}^2 * x_{m+2n}^2   (indices mod 5)

    Homogeneous of total degree 5 in the roots.
    """
    rt = as_root_tuple(roots)
    return complex(eval_f_rows(rt, FAMILY_PATTERNS[:1])[0])


def f_family(roots: Sequence[complex]) -> FFamily:
    """f together with f_k = f(x_k, x_{k+3}, x_{k+4}, x_{k+1}, x_{k+2})."""
    rt = as_root_tuple(roots)
    vals = eval_f_rows(rt, FAMILY_PATTERNS)
    return FFamily(f=complex(vals[0]), fk=tuple(complex(v) for v in vals[1:]))


def family_values_for_perms(roots, perms: Sequence[Perm5]) -> np.ndarray:
    """Family values of every relabeled tuple, shape (len(perms), 6).

    Row p equals ``f_family(apply(perms[p], roots)).values()``; the whole
    sweep is a single batched kernel call.
    """
    rt = as_root_tuple(roots)
    images = np.array([p.image for p in perms], dtype=np.int64)
    rows = images[:, FAMILY_PATTERNS]  # (P, 6, 5)
    flat = eval_f_rows(rt, rows.reshape(-1, 5))
    return flat.reshape(len(perms), 6)


def _signed_targets(fam: FFamily) -> tuple[list[complex], list[str]]:
    targets, labels = [], []
    for sign, tag in ((1.0, "+"), (-1.0, "-")):
        for label, value in zip(_LABELS, fam.values()):
            targets.append(sign * value)
            labels.append(tag + label)
    return targets, labels


def a5_orbit(roots, tol: float = DEDUP_TOL) -> OrbitReport:
    """Orbit of f under all 60 even relabelings, deduplicated.

    Generic input yields exactly 12 values closing under negation into 6
    pairs, each matching one signed family member.  Near-degenerate input
    (by the |sqrt disc| floor) is reported with ``degenerate=True`` and no
    pairing analysis.
    """
    rt = as_root_tuple(roots)
    perms = all_a5()
    images = np.array([p.image for p in perms], dtype=np.int64)
    evals = eval_f_rows(rt, images)

    if is_degenerate(rt):
        clusters = cluster_values(evals, tol)
        return OrbitReport(
            values=clusters.centers, pair_map=(), family_match=(), degenerate=True
        )

    clusters: ClusterResult = cluster_values(evals, tol)
    values = clusters.centers
    if len(values) != 12:
        raise NumericFailureError(
            f"expected 12 orbit values, found {len(values)}; "
            "instance is likely near-degenerate"
        )
    scale = max(1.0, max(abs(v) for v in values))
    threshold = clusters.threshold

    # Sign pairing: each value must match the negation of exactly one other.
    partner = []
    for i, v in enumerate(values):
        dists = [abs(v + w) for w in values]
        j = int(np.argmin(dists))
        if dists[j] > threshold or j == i:
            raise NumericFailureError(
                f"orbit value {v:.6g} has no negation partner within tolerance"
            )
        partner.append(j)
    if any(partner[partner[i]] != i for i in range(12)):
        raise NumericFailureError("sign pairing is not an involution")
    pair_map = tuple(
        (i, partner[i]) for i in range(12) if i < partner[i]
    )

    # Optimal assignment of the 12 values to the 12 signed family members.
    targets, labels = _signed_targets(f_family(rt))
    cost = np.array([[abs(v - t) for t in targets] for v in values])
    rows_idx, cols_idx = linear_sum_assignment(cost)
    if float(cost[rows_idx, cols_idx].max()) > max(tol, 1e-10) * scale:
        raise NumericFailureError(
            "orbit values do not match the signed family within tolerance"
        )
    family_match = tuple(labels[c] for c in cols_idx[np.argsort(rows_idx)])

    return OrbitReport(
        values=values, pair_map=pair_map, family_match=family_match, degenerate=False
    )


def _rref(mat: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    m = mat.copy()
    nrows, ncols = m.shape
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        pivot = row + int(np.argmax(np.abs(m[row:, col])))
        if abs(m[pivot, col]) <= tol:
            continue
        m[[row, pivot]] = m[[pivot, row]]
        m[row] = m[row] / m[row, col]
        for r in range(nrows):
            if r != row:
                m[r] = m[r] - m[r, col] * m[row]
        row += 1
    return m


def _integer_relation_search(
    matrix: np.ndarray, projector: np.ndarray
) -> tuple[tuple[int, ...], ...] | None:
    """Integer 6-vectors (entries -4..4) in the null space, if any exist.

    A candidate must lie in the numerical null space (projector residual) and
    annihilate every sample row to 1e-6 relative.  Returns up to three
    linearly independent vectors, or None when none survive.
    """
    rng = range(-4, 5)
    grid = np.stack(
        np.meshgrid(*[list(rng)] * 6, indexing="ij"), axis=-1
    ).reshape(-1, 6)
    grid = grid[np.any(grid != 0, axis=1)]
    norms = np.linalg.norm(grid, axis=1)
    diff = grid.astype(complex) - grid @ projector.T
    resid = np.linalg.norm(diff, axis=1) / norms
    candidates = grid[resid <= 1e-8]
    if candidates.size == 0:
        return None

    row_norms = np.linalg.norm(matrix, axis=1)
    kept = []
    for u in candidates[np.argsort(np.linalg.norm(candidates, axis=1))]:
        g = np.gcd.reduce(np.abs(u[u != 0]))
        if g != 1:
            continue
        first = u[np.nonzero(u)[0][0]]
        if first < 0:
            continue
        errs = np.abs(matrix @ u) / (row_norms * np.linalg.norm(u))
        if float(errs.max()) > 1e-6:
            continue
        trial = kept + [u]
        if np.linalg.matrix_rank(np.array(trial, dtype=float)) == len(trial):
            kept.append(u)
        if len(kept) == 3:
            break
    if not kept:
        return None
    return tuple(tuple(int(x) for x in u) for u in kept)


def relation_rank(samples: Sequence[FFamily], rank_tol: float = RANK_TOL) -> RelationReport:
    """Numerical rank of the N x 6 matrix of (f, f_0..f_4) sample rows.

    Needs at least 10 samples.  Rank counts singular values above
    ``rank_tol * sigma_1``.  When the rank is 3, returns a reduced null-space
    basis and attempts to round it to small integer coefficient vectors;
    integer relations are only reported when they annihilate all rows to
    1e-6 relative, otherwise the floating basis stands alone.
    """
    if len(samples) < 10:
        raise InvalidInputError(f"need at least 10 samples, got {len(samples)}")
    matrix = np.array([s.values() for s in samples], dtype=complex)
    singular = np.linalg.svd(matrix, compute_uv=False)
    top = float(singular[0])
    rank = int(np.sum(singular > rank_tol * top)) if top > 0.0 else 0

    null_basis = None
    integer_relations = None
    if rank == 3:
        _, _, vh = np.linalg.svd(matrix)
        basis = np.conj(vh[3:])  # rows span the null space of the sample matrix
        projector = basis.T @ np.conj(basis)
        null_basis = tuple(
            tuple(complex(x) for x in row) for row in _rref(basis)
        )
        integer_relations = _integer_relation_search(matrix, projector)

    return RelationReport(
        rank=rank,
        singular_values=tuple(float(s) for s in singular),
        null_basis=null_basis,
        integer_relations=integer_relations,
    )
