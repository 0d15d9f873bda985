"""Polynomials orthogonal with respect to the generalized Kesten-McKay density.

P_m is the signed elementary-symmetric combination of the last n + 1
Chebyshev-U polynomials, with negative indices folded through U_{-1} = 0 and
U_{-m-2} = -U_m.  The family is neither monic nor orthonormal, and the plain
three-term recurrence 2x P_m = P_{m+1} + P_{m-1} holds only for m >= n.

Caveat: truncating the signed sum at j = 2m + 2 (required to keep the degree
equal to m) drops terms whenever n > 2m + 2, and the dropped terms are
exactly the ones the alternating coefficient identity needs for
orthogonality.  In that regime the formula still defines a degree-m
polynomial, but its inner product with lower-degree members is a small
nonzero quantity expressible through the dropped S_j B_k products (for
m = 1: S_6 B_3 - S_5 B_2).  Within n <= 6 only the degree-1 member at
n = 5, 6 is affected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chebyshev import USeries
from .core import B_prefix, ParamSet
from .symfun import elementary_all


@dataclass(frozen=True)
class OrthoPoly:
    m: int
    series: USeries

    def __call__(self, x):
        return self.series(x)


def P_coeffs(m: int, p: ParamSet) -> OrthoPoly:
    """U-basis representation sum_{j=0}^{min(n, 2m+2)} (-1)^j S_j U_{m-j}.

    P_0 is pinned to the constant 1 (the signed-sum display would give the
    constant 1 - S_2 instead, an irrelevant rescaling of the same degree-0
    member).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return OrthoPoly(m=0, series=USeries((1.0,)))
    S = elementary_all(np.asarray(p.a, dtype=float)).S.real
    jmax = min(p.n, 2 * m + 2)
    pairs = [(m - j, (-1.0) ** j * S[j]) for j in range(jmax + 1)]
    return OrthoPoly(m=m, series=USeries.from_signed(pairs))


def P_eval(m: int, p: ParamSet, x):
    """Value of P_m at x in [-1, 1]."""
    return P_coeffs(m, p)(x)


def P_recur_check(m: int, p: ParamSet, x) -> float:
    """2x P_m - P_{m+1} - P_{m-1}; vanishes for m >= n."""
    if m < p.n or m < 1:
        raise ValueError("three-term recurrence requires m >= n >= 1")
    return float(
        2.0 * np.asarray(x, dtype=float) * P_eval(m, p, x)
        - P_eval(m + 1, p, x)
        - P_eval(m - 1, p, x)
    )


def gram(m: int, k: int, p: ParamSet) -> float:
    """integral of P_m P_k against the density, bilinearly through the exact
    U-product expansion (no quadrature)."""
    cm = P_coeffs(m, p).series.coeffs
    ck = P_coeffs(k, p).series.coeffs
    if not cm or not ck:
        return 0.0
    B = B_prefix(p, len(cm) + len(ck)).values
    total = 0.0
    for i, ci in enumerate(cm):
        if ci == 0.0:
            continue
        for j, cj in enumerate(ck):
            if cj == 0.0:
                continue
            # U_i U_j = sum_{l=0}^{min(i,j)} U_{|i-j|+2l}
            lo = abs(i - j)
            total += ci * cj * float(np.sum(B[lo : i + j + 1 : 2]))
    return total
