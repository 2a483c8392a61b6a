"""The sextic satisfied by the squared family values, the three-parameter
resolvent form that over-determines it, and the two-valuedness of the fitted
coefficients.

Writing the monic sextic in F as F^6 + s5 F^5 + ... + s0, the resolvent form
with parameters (a, b, c), expanded in G = F + a as

    G^6 + 4a G^5 + 10b G^3 + 4c G - 4ac + 5b^2,

has F-coefficients

    s5 = 10 a                    s4 = 35 a^2
    s3 = 60 a^3 + 10 b           s2 = 55 a^4 + 30 a b
    s1 = 26 a^5 + 30 a^2 b + 4c  s0 = 5 a^6 + 10 a^3 b + 5 b^2

(derived by binomial expansion; note s0 is independent of c).  The expansion
is triangular in (a, b, c): fitting uses s5, s3, s1 and the remaining three
coefficients become genuine verification residuals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInstanceError, InvalidInputError
from .ffamily import FFamily, family_values_for_perms
from .permutations import all_s5, compose
from .polynomials import MonicPoly, as_root_tuple, is_degenerate, poly_from_roots

__all__ = [
    "FitResiduals",
    "ResolventCoeffs",
    "TwoValuednessReport",
    "sextic_from_family",
    "square_gap",
    "fit_abc",
    "eval_resolvent_form",
    "resolvent_form_residual",
    "degree12_poly",
    "two_valuedness_check",
]


@dataclass(frozen=True)
class FitResiduals:
    """Relative mismatches of the three coefficients the fit does not use."""

    r4: float
    r2: float
    r0: float

    def worst(self) -> float:
        return max(self.r4, self.r2, self.r0)


@dataclass(frozen=True)
class ResolventCoeffs:
    a: complex
    b: complex
    c: complex
    residuals: FitResiduals


@dataclass(frozen=True)
class TwoValuednessReport:
    """(a, b, c) swept over all 120 relabelings, grouped by parity.

    ``even_triple`` is the reference from the identity labeling; all even
    relabelings must reproduce it (spread = max relative deviation), all odd
    ones must agree on ``odd_triple``.  ``pair_symmetric_spread`` checks that
    the symmetric combinations (a + a', a*a', ...) of the unordered triple
    pair are invariant under every relabeling of either parity.
    """

    even_triple: tuple[complex, complex, complex]
    odd_triple: tuple[complex, complex, complex]
    even_spread: float
    odd_spread: float
    pair_symmetric_spread: float


def sextic_from_family(fam: FFamily) -> MonicPoly:
    """Monic degree-6 polynomial with the six squared family values as roots."""
    return poly_from_roots([v * v for v in fam.values()])


def square_gap(fam: FFamily) -> float:
    """Smallest relative gap between the six squared family values.

    Near-equal squares cluster the sextic's roots and inflate the fit's
    residual sensitivity; callers flag instances with a small gap instead of
    accepting them silently.
    """
    squares = [v * v for v in fam.values()]
    scale = max(1.0, max(abs(s) for s in squares))
    gaps = [
        abs(squares[i] - squares[j])
        for i in range(6)
        for j in range(i + 1, 6)
    ]
    return min(gaps) / scale


def fit_abc(sextic: MonicPoly) -> ResolventCoeffs:
    """Fit (a, b, c) from s5, s3, s1; report the s4, s2, s0 mismatches.

    Residuals are relative to max(1, |s_j|) per coefficient.  The form
    constrains six coefficients by three parameters, so small residuals are
    genuine verification, not a consequence of the fit.
    """
    if sextic.degree != 6:
        raise InvalidInputError(f"expected a sextic, got degree {sextic.degree}")
    s5, s4, s3, s2, s1, s0 = sextic.coeffs
    a = s5 / 10.0
    b = (s3 - 60.0 * a**3) / 10.0
    c = (s1 - 26.0 * a**5 - 30.0 * a**2 * b) / 4.0
    r4 = abs(s4 - 35.0 * a**2) / max(1.0, abs(s4))
    r2 = abs(s2 - 55.0 * a**4 - 30.0 * a * b) / max(1.0, abs(s2))
    r0 = abs(s0 - 5.0 * a**6 - 10.0 * a**3 * b - 5.0 * b**2) / max(1.0, abs(s0))
    return ResolventCoeffs(a=a, b=b, c=c, residuals=FitResiduals(r4=r4, r2=r2, r0=r0))


def eval_resolvent_form(F: complex, a: complex, b: complex, c: complex) -> complex:
    """Direct evaluation of the form at F, via G = F + a."""
    G = F + a
    return G**6 + 4.0 * a * G**5 + 10.0 * b * G**3 + 4.0 * c * G - 4.0 * a * c + 5.0 * b**2


def resolvent_form_residual(F: complex, a: complex, b: complex, c: complex) -> float:
    """|form value| relative to the largest term magnitude in the sum.

    This measures how completely the six terms cancel, which is the honest
    notion of "F satisfies the form" in floating point.
    """
    G = F + a
    terms = (
        G**6,
        4.0 * a * G**5,
        10.0 * b * G**3,
        4.0 * c * G,
        -4.0 * a * c,
        5.0 * b**2,
    )
    scale = max(1.0, max(abs(t) for t in terms))
    return abs(sum(terms)) / scale


def degree12_poly(coeffs: ResolventCoeffs) -> MonicPoly:
    """The monic degree-12 polynomial in f obtained by substituting F = f^2.

    Built from the expansion identities at the fitted (a, b, c), so all
    odd-degree coefficients are exactly zero.
    """
    a, b, c = coeffs.a, coeffs.b, coeffs.c
    t = [
        1.0 + 0j,  # F^6
        10.0 * a,
        35.0 * a**2,
        60.0 * a**3 + 10.0 * b,
        55.0 * a**4 + 30.0 * a * b,
        26.0 * a**5 + 30.0 * a**2 * b + 4.0 * c,
        5.0 * a**6 + 10.0 * a**3 * b + 5.0 * b**2,
    ]
    out = [0j] * 12  # coefficients of f^11 .. f^0
    for power_f in range(0, 12, 2):
        out[11 - power_f] = t[6 - power_f // 2]
    return MonicPoly(tuple(out))


def _triple_from_family_row(row: np.ndarray) -> tuple[complex, complex, complex]:
    sextic = poly_from_roots([complex(v) ** 2 for v in row])
    fit = fit_abc(sextic)
    return (fit.a, fit.b, fit.c)


def _rel_dev(t, ref) -> float:
    return max(
        abs(x - r) / max(1.0, abs(r)) for x, r in zip(t, ref)
    )


def two_valuedness_check(roots) -> TwoValuednessReport:
    """Sweep (a, b, c) over all 120 relabelings and verify two-valuedness."""
    rt = as_root_tuple(roots)
    if is_degenerate(rt):
        raise DegenerateInstanceError("two-valuedness needs distinct roots")

    perms = all_s5()
    fam_rows = family_values_for_perms(rt, perms)
    triples = [_triple_from_family_row(row) for row in fam_rows]

    even_idx = [i for i, p in enumerate(perms) if p.parity == 1]
    odd_idx = [i for i, p in enumerate(perms) if p.parity == -1]
    even_ref = triples[0]  # identity labels come first in all_s5 order
    odd_ref = triples[odd_idx[0]]

    even_spread = max(_rel_dev(triples[i], even_ref) for i in even_idx)
    odd_spread = max(_rel_dev(triples[i], odd_ref) for i in odd_idx)

    # Symmetric functions of the unordered pair {triple(sigma), triple(tau o sigma)}
    # for a fixed odd tau must not depend on sigma at all.
    index_of = {p.image: i for i, p in enumerate(perms)}
    tau = perms[odd_idx[0]]

    def sym_vector(i: int) -> tuple[complex, ...]:
        j = index_of[compose(tau, perms[i]).image]
        t, u = triples[i], triples[j]
        out = []
        for x, y in zip(t, u):
            out.append(x + y)
            out.append(x * y)
        return tuple(out)

    sym_ref = sym_vector(0)
    pair_symmetric_spread = max(
        _rel_dev(sym_vector(i), sym_ref) for i in range(len(perms))
    )

    return TwoValuednessReport(
        even_triple=even_ref,
        odd_triple=odd_ref,
        even_spread=even_spread,
        odd_spread=odd_spread,
        pair_symmetric_spread=pair_symmetric_spread,
    )
