"""Complex monic polynomials: construction, evaluation, simultaneous root
finding, symmetric-function utilities, and the signed discriminant root.

All comparisons in this package are relative to ``max(1, magnitude)`` so the
same tolerances are meaningful across coefficient scales.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInputError, NumericFailureError

__all__ = [
    "MonicPoly",
    "as_root_tuple",
    "poly_from_roots",
    "eval_poly",
    "find_roots",
    "power_sums",
    "elementary_symmetric",
    "sqrt_discriminant",
    "is_degenerate",
    "DEGENERACY_FLOOR",
]

MAX_DEGREE = 12

# |sqrt(disc)| below DEGENERACY_FLOOR * scale**10 flags a root tuple as
# (near-)degenerate; scale**10 because the product has total degree 10.
DEGENERACY_FLOOR = 1e-8

_ROOT_FINDER_RESIDUAL = 1e-12
_ROOT_FINDER_STEP = 1e-13


def _is_finite(z: complex) -> bool:
    return cmath.isfinite(complex(z))


@dataclass(frozen=True)
class MonicPoly:
    """Monic polynomial; ``coeffs`` are the coefficients of z^(degree-1)..z^0.

    The leading coefficient is implicitly 1 and not stored.
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coeffs)
        if not coeffs:
            raise InvalidInputError("a monic polynomial needs degree >= 1")
        if len(coeffs) > MAX_DEGREE:
            raise InvalidInputError(f"degree {len(coeffs)} exceeds {MAX_DEGREE}")
        if not all(_is_finite(c) for c in coeffs):
            raise InvalidInputError("polynomial coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full_coeffs(self) -> np.ndarray:
        """Coefficients including the leading 1, highest power first."""
        return np.concatenate([[1.0 + 0j], np.asarray(self.coeffs, dtype=complex)])


def as_root_tuple(roots: Sequence[complex]) -> tuple[complex, ...]:
    """Validate and normalize an ordered labeling of five roots.

    The ordering is semantically meaningful: every labeled value downstream is
    defined relative to it.  Repeated roots are allowed here; degeneracy is a
    separate check (:func:`is_degenerate`).
    """
    rt = tuple(complex(r) for r in roots)
    if len(rt) != 5:
        raise InvalidInputError(f"expected exactly 5 roots, got {len(rt)}")
    if not all(_is_finite(r) for r in rt):
        raise InvalidInputError("roots must be finite")
    return rt


def poly_from_roots(roots: Sequence[complex]) -> MonicPoly:
    """Expand prod(z - r_i) by iterated multiplication."""
    roots = [complex(r) for r in roots]
    if not roots:
        raise InvalidInputError("need at least one root")
    if len(roots) > MAX_DEGREE:
        raise InvalidInputError(f"more than {MAX_DEGREE} roots")
    c = np.array([1.0 + 0j])
    for r in roots:
        c = np.convolve(c, np.array([1.0 + 0j, -r]))
    return MonicPoly(tuple(c[1:]))


def eval_poly(p: MonicPoly, z: complex) -> complex:
    """Horner evaluation of the monic polynomial at z."""
    acc = 1.0 + 0j
    for c in p.coeffs:
        acc = acc * z + c
    return acc


def _horner_many(full: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.full_like(z, full[0])
    for c in full[1:]:
        acc = acc * z + c
    return acc


def find_roots(p: MonicPoly, max_iter: int = 500) -> list[complex]:
    """All roots by simultaneous (Aberth-Ehrlich) iteration.

    Converged when every residual satisfies
    ``|p(z)| <= 1e-12 * max(1, max|coeff|)`` and the last correction step was
    negligible (a fixed point).  When a root's magnitude makes that bound
    tighter than evaluation roundoff (|p(z)| cannot beat
    ``eps * sum |c_j| |z|^j`` in doubles), the roundoff floor applies for that
    root instead.  Raises :class:`NumericFailureError` carrying the worst
    residual if the iteration cap is hit.
    """
    n = p.degree
    full = p.full_coeffs()
    scale = max(1.0, float(np.max(np.abs(full))))
    resid_tol = _ROOT_FINDER_RESIDUAL * scale
    abs_coeffs = np.abs(full)
    eval_floor_factor = 4.0 * np.finfo(float).eps
    deriv = full[:-1] * np.arange(n, 0, -1)

    # Fujiwara-style bound on root magnitudes gives the starting circle.
    mags = np.abs(full[1:])
    nonzero = [m ** (1.0 / (k + 1)) for k, m in enumerate(mags) if m > 0.0]
    radius = max(2.0 * max(nonzero) if nonzero else 0.0, 1e-3)

    k = np.arange(n)
    # Angle offset and slight radius stagger break symmetric stalls.
    z = radius * (1.0 + 0.05 * k / n) * np.exp(2j * np.pi * (k + 0.35) / n)

    last_step = np.inf
    for _ in range(max_iter):
        pv = _horner_many(full, z)
        resid = np.abs(pv)
        eval_scale = _horner_many(abs_coeffs, np.abs(z))
        tol_per_root = np.maximum(resid_tol, eval_floor_factor * eval_scale)
        step_ok = last_step <= _ROOT_FINDER_STEP * (1.0 + float(np.max(np.abs(z))))
        if bool(np.all(resid <= tol_per_root)) and step_ok:
            return [complex(v) for v in z]
        dv = _horner_many(deriv, z)
        dv = np.where(np.abs(dv) == 0.0, 1e-300, dv)
        newton = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        repulse = np.sum(1.0 / diff, axis=1) - 1.0  # subtract the diagonal fill
        denom = 1.0 - newton * repulse
        denom = np.where(np.abs(denom) == 0.0, 1e-300, denom)
        w = newton / denom
        z = z - w
        if not np.all(np.isfinite(z.view(np.float64))):
            raise NumericFailureError(
                "root iteration diverged to non-finite values",
                worst_residual=float(np.max(resid)),
            )
        last_step = float(np.max(np.abs(w)))

    worst = float(np.max(np.abs(_horner_many(full, z))))
    raise NumericFailureError(
        f"root finding did not converge within {max_iter} iterations "
        f"(worst residual {worst:.3e}, tolerance {resid_tol:.3e})",
        worst_residual=worst,
    )


def power_sums(values: Sequence[complex], k_max: int) -> list[complex]:
    """p_1..p_k_max with p_k = sum(v_i ** k)."""
    if k_max < 1:
        raise InvalidInputError("k_max must be >= 1")
    vals = np.asarray([complex(v) for v in values], dtype=complex)
    out = []
    acc = np.ones_like(vals)
    for _ in range(k_max):
        acc = acc * vals
        out.append(complex(np.sum(acc)))
    return out


def elementary_symmetric(values: Sequence[complex]) -> list[complex]:
    """e_1..e_n of the given values, by incremental expansion of prod(1 + v t)."""
    vals = [complex(v) for v in values]
    if not vals:
        raise InvalidInputError("need at least one value")
    e = [1.0 + 0j] + [0j] * len(vals)
    for i, v in enumerate(vals, start=1):
        for j in range(i, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e[1:]


def sqrt_discriminant(roots: Sequence[complex]) -> complex:
    """Signed square root of the discriminant: prod over i<j of (x_i - x_j).

    The sign is fixed by the labeling as given (no re-sorting); an odd
    relabeling negates the value, an even one preserves it.
    """
    rt = as_root_tuple(roots)
    out = 1.0 + 0j
    for i in range(5):
        for j in range(i + 1, 5):
            out *= rt[i] - rt[j]
    return out


def is_degenerate(roots: Sequence[complex]) -> bool:
    """True when the tuple has (near-)repeated roots by the |sqrt disc| floor."""
    rt = as_root_tuple(roots)
    scale = max(1.0, max(abs(r) for r in rt))
    return abs(sqrt_discriminant(rt)) < DEGENERACY_FLOOR * scale**10
