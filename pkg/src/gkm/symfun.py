"""Elementary symmetric and complete homogeneous sums of a parameter vector.

Both are computed by coefficient-array dynamic programming, never by
enumerating monomials: S_k comes from multiplying out prod(1 + t a_i),
h_m from the prefix recurrence of the complete homogeneous polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SymTable:
    """S_0..S_n of one parameter vector; S[k] is the k-th elementary symmetric."""

    S: np.ndarray

    @property
    def n(self) -> int:
        return len(self.S) - 1

    def __getitem__(self, k: int) -> float:
        return float(self.S[k])


def elementary_all(a) -> SymTable:
    """All elementary symmetric functions S_0..S_n of a_1..a_n.

    Multiplies out prod_i (1 + t a_i) one factor at a time, so the only
    subtractions are those present in the data itself.
    """
    a = np.asarray(a)
    coeffs = np.zeros(len(a) + 1, dtype=a.dtype if a.dtype.kind == "c" else float)
    coeffs[0] = 1.0
    for x in a:
        coeffs[1:] += x * coeffs[:-1]
    return SymTable(S=coeffs)


def delta(m: int, a) -> float:
    """Complete homogeneous sum of degree m: all monomials of total degree m.

    DP over growing prefixes: h_m(a_1..a_i) = h_m(a_1..a_{i-1}) + a_i * h_{m-1}(a_1..a_i).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    a = np.asarray(a, dtype=float)
    if len(a) == 0:
        return 1.0 if m == 0 else 0.0
    h = np.zeros(m + 1)
    h[0] = 1.0
    for x in a:
        for d in range(1, m + 1):
            h[d] += x * h[d - 1]
    return float(h[m])


def delta_all(mmax: int, a) -> np.ndarray:
    """h_0..h_mmax in one DP sweep."""
    a = np.asarray(a, dtype=float)
    h = np.zeros(mmax + 1)
    h[0] = 1.0
    for x in a:
        for d in range(1, mmax + 1):
            h[d] += x * h[d - 1]
    return h
