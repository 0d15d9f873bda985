"""Chebyshev polynomials of the first and second kind on [-1, 1].

Evaluation goes through the forward three-term recurrence, which is
numerically benign on the whole interval (the trigonometric form loses
digits near the endpoints and is kept only as a test oracle).  The module
also provides the signed-index convention U_{-1} = 0, U_{-m-2} = -U_m,
exact conversion of monomials and U-products into the U basis, and the
Gauss quadrature rule for the semicircle weight (2/pi) sqrt(1 - x^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, Unsupported

# power_to_U uses float binomials; beyond this degree they lose precision.
POWER_DEGREE_CAP = 64


def _check_x(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise DomainError("x outside [-1, 1]")
    return x


def u_all(kmax: int, x):
    """Values U_0(x)..U_kmax(x), stacked along the first axis."""
    x = _check_x(x)
    out = np.empty((kmax + 1,) + x.shape)
    out[0] = 1.0
    if kmax >= 1:
        out[1] = 2.0 * x
    for j in range(2, kmax + 1):
        out[j] = 2.0 * x * out[j - 1] - out[j - 2]
    return out


def eval_U(k: int, x):
    """U_k(x) by the forward recurrence; k >= 0, |x| <= 1."""
    if k < 0:
        raise ValueError("k must be non-negative; use eval_U_signed")
    x = _check_x(x)
    prev = np.ones_like(x)
    if k == 0:
        return prev if prev.shape else float(prev)
    cur = 2.0 * x
    for _ in range(k - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur if cur.shape else float(cur)


def eval_U_signed(k: int, x):
    """U_k(x) extended to negative index: U_{-1} = 0, U_{-m-2} = -U_m."""
    if k >= 0:
        return eval_U(k, x)
    x = _check_x(x)
    if k == -1:
        z = np.zeros_like(x)
        return z if z.shape else 0.0
    r = eval_U(-k - 2, x)
    return -r


def eval_T(k: int, x):
    """Chebyshev polynomial of the first kind T_k(x)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    x = _check_x(x)
    prev = np.ones_like(x)
    if k == 0:
        return prev if prev.shape else float(prev)
    cur = x.copy()
    for _ in range(k - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur if cur.shape else float(cur)


@dataclass(frozen=True)
class USeries:
    """Finite coefficient sequence over the U basis; index j is the U_j weight."""

    coeffs: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        for j in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[j] != 0.0:
                return j
        return -1

    def __call__(self, x):
        x = _check_x(x)
        if not self.coeffs:
            z = np.zeros_like(x)
            return z if z.shape else 0.0
        basis = u_all(len(self.coeffs) - 1, x)
        r = np.tensordot(np.asarray(self.coeffs), basis, axes=(0, 0))
        return r if r.shape else float(r)

    @staticmethod
    def from_dict(d: dict) -> "USeries":
        if not d:
            return USeries(())
        coeffs = [0.0] * (max(d) + 1)
        for j, c in d.items():
            if j < 0:
                raise ValueError("negative U index; fold with the signed rule first")
            coeffs[j] += c
        return USeries(coeffs)

    @staticmethod
    def from_signed(pairs) -> "USeries":
        """Build from (index, coeff) pairs, folding negative indices through
        U_{-1} = 0 and U_{-m-2} = -U_m."""
        d: dict = {}
        for j, c in pairs:
            if j == -1:
                continue
            if j < -1:
                j, c = -j - 2, -c
            d[j] = d.get(j, 0.0) + c
        return USeries.from_dict(d)


def _binomial_row(k: int):
    """C(k, 0..k) by the multiplicative recurrence, in floats."""
    row = np.empty(k + 1)
    row[0] = 1.0
    for j in range(1, k + 1):
        row[j] = row[j - 1] * (k - j + 1) / j
    return row


def power_to_U(k: int) -> USeries:
    """U-basis expansion of the monomial x^k.

    x^k = 2^{-k} sum_{j=0}^{floor(k/2)} (C(k,j) - C(k,j-1)) U_{k-2j}.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > POWER_DEGREE_CAP:
        raise Unsupported(f"degree {k} exceeds the float-binomial cap {POWER_DEGREE_CAP}")
    binom = _binomial_row(k)
    scale = 0.5 ** k
    coeffs = {}
    for j in range(k // 2 + 1):
        c = binom[j] - (binom[j - 1] if j >= 1 else 0.0)
        coeffs[k - 2 * j] = c * scale
    return USeries.from_dict(coeffs)


def product_linearize(k: int, m: int) -> USeries:
    """U_k * U_m = sum_{j=0}^{min(k,m)} U_{|k-m|+2j} (all coefficients one)."""
    if k < 0 or m < 0:
        raise ValueError("indices must be non-negative")
    return USeries.from_dict({abs(k - m) + 2 * j: 1.0 for j in range(min(k, m) + 1)})


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for integration against (2/pi) sqrt(1 - x^2) dx."""

    nodes: np.ndarray
    weights: np.ndarray

    @property
    def count(self) -> int:
        return len(self.nodes)

    def apply(self, g) -> float:
        return float(np.dot(self.weights, g(self.nodes)))


def gauss_chebU_rule(N: int) -> QuadratureRule:
    """Gauss rule for the U-weight: exact for polynomial degree <= 2N - 1.

    Nodes cos(i pi/(N+1)), weights (2/(N+1)) sin^2(i pi/(N+1)), i = 1..N.
    """
    if N < 1:
        raise ValueError("N must be positive")
    i = np.arange(1, N + 1)
    theta = i * np.pi / (N + 1)
    nodes = np.cos(theta)
    weights = (2.0 / (N + 1)) * np.sin(theta) ** 2
    return QuadratureRule(nodes=nodes, weights=weights)
