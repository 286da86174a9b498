"""Jacobi polynomials, log-Pochhammer ratios and Gauss-Jacobi quadrature.

This is the analytic kernel the representation-theoretic modules sit on:
matrix elements carry a Jacobi polynomial in their radial variable, their
normalization is a square root of factorial/Gamma ratios, and every radial
integral reduces to a polynomial against the weight (1-x)^a (1+x)^b, which
Gauss-Jacobi quadrature evaluates exactly.

Everything here is a pure function; :class:`QuadratureRule` is frozen after
construction, so concurrent use needs no locking.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidParams


@dataclass(frozen=True)
class JacobiParams:
    """Exponent pair and degree of a Jacobi polynomial P_degree^{(a, b)}."""

    a: float
    b: float
    degree: int

    def __post_init__(self) -> None:
        if self.a <= -1.0 or self.b <= -1.0:
            raise InvalidParams(f"Jacobi exponents must exceed -1, got ({self.a}, {self.b})")
        if self.degree < 0:
            raise InvalidParams(f"degree must be >= 0, got {self.degree}")


def jacobi_sequence(a: float, b: float, max_degree: int, x):
    """All Jacobi polynomial values P_0 ... P_max_degree at x.

    Runs the classical three-term recurrence once and returns every degree,
    which is what block assembly and quadrature integrands actually consume.

    Parameters
    ----------
    a, b : float
        Weight exponents, each > -1.
    max_degree : int
        Highest degree to evaluate.
    x : float or ndarray
        Evaluation point(s).

    Returns
    -------
    list
        ``[P_0(x), ..., P_max_degree(x)]``, scalars or arrays matching x.
    """
    if a <= -1.0 or b <= -1.0:
        raise InvalidParams(f"Jacobi exponents must exceed -1, got ({a}, {b})")
    if max_degree < 0:
        raise InvalidParams(f"max_degree must be >= 0, got {max_degree}")
    is_array = isinstance(x, np.ndarray)
    values = [np.ones_like(x) if is_array else 1.0]
    if max_degree == 0:
        return values
    apb = a + b
    values.append((a + 1.0) + (apb + 2.0) * (x - 1.0) / 2.0)
    for n in range(2, max_degree + 1):
        c1 = 2.0 * n * (n + apb) * (2.0 * n + apb - 2.0)
        c2 = 2.0 * n + apb - 1.0
        c3 = (2.0 * n + apb) * (2.0 * n + apb - 2.0)
        c4 = a * a - b * b
        c5 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * (2.0 * n + apb)
        values.append((c2 * (c3 * x + c4) * values[n - 1] - c5 * values[n - 2]) / c1)
    return values


def jacobi_p(params: JacobiParams, x):
    """Value of the Jacobi polynomial described by params at x."""
    return jacobi_sequence(params.a, params.b, params.degree, x)[-1]


def log_poch_ratio(two_eta: int, n: int, m: int) -> float:
    """log of (m! * Gamma(2*eta + n)) / (n! * Gamma(2*eta + m)).

    The half-power of this ratio is the matrix-element prefactor; keeping it
    in log space lets indices run into the hundreds without Gamma overflow.
    ``two_eta`` is the integer 2*eta of a discrete-series label.
    """
    if n == m:
        return 0.0
    return (
        math.lgamma(m + 1)
        + math.lgamma(two_eta + n)
        - math.lgamma(n + 1)
        - math.lgamma(two_eta + m)
    )


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights integrating (1-x)^a (1+x)^b * polynomial on [-1, 1]."""

    nodes: np.ndarray
    weights: np.ndarray
    weight_exponents: tuple

    def integrate(self, f) -> float:
        """Apply the rule to a callable evaluated at the nodes."""
        return float(np.dot(self.weights, f(self.nodes)))


@lru_cache(maxsize=None)
def gauss_jacobi(order: int, a: float, b: float) -> QuadratureRule:
    """Gauss-Jacobi rule of the given order for the weight (1-x)^a (1+x)^b.

    Built the Golub-Welsch way: the monic-recurrence coefficients form a
    symmetric tridiagonal matrix whose eigenvalues are the nodes and whose
    first eigenvector components give the weights.  Exact (up to round-off)
    for polynomials of degree <= 2*order - 1.

    Parameters
    ----------
    order : int
        Number of nodes, >= 1.
    a, b : float
        Weight exponents, each > -1.

    Returns
    -------
    QuadratureRule
    """
    if order < 1:
        raise InvalidParams(f"order must be >= 1, got {order}")
    if a <= -1.0 or b <= -1.0:
        raise InvalidParams(f"weight exponents must exceed -1, got ({a}, {b})")
    apb = a + b
    diag = np.empty(order)
    offsq = np.empty(order)  # squared off-diagonal terms; offsq[0] holds the 0th moment
    diag[0] = (b - a) / (apb + 2.0)
    offsq[0] = 2.0 ** (apb + 1.0) * math.exp(
        math.lgamma(a + 1.0) + math.lgamma(b + 1.0) - math.lgamma(apb + 2.0)
    )
    if order > 1:
        # i = 1 written with the (1 + a + b) factor cancelled, valid for a + b -> -1.
        offsq[1] = 4.0 * (a + 1.0) * (b + 1.0) / ((apb + 2.0) ** 2 * (apb + 3.0))
    for i in range(1, order):
        two_i = 2.0 * i + apb
        diag[i] = (b * b - a * a) / (two_i * (two_i + 2.0))
        if i >= 2:
            offsq[i] = (
                4.0 * i * (i + a) * (i + b) * (i + apb)
                / (two_i * two_i * (two_i * two_i - 1.0))
            )
    matrix = np.diag(diag)
    if order > 1:
        off = np.sqrt(offsq[1:])
        matrix += np.diag(off, 1) + np.diag(off, -1)
    nodes, vectors = np.linalg.eigh(matrix)
    weights = offsq[0] * vectors[0, :] ** 2
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes, weights, (a, b))


def quadrature_order_for_degree(degree: int) -> int:
    """Order exact for a polynomial integrand of the given degree, plus guard."""
    return (degree + 2) // 2 + 2


def gr_7391(a: float, b: float, m: int) -> float:
    """Closed form of the diagonal Jacobi norm against the shifted weight.

    Returns the value of

        integral_{-1}^{1} (1-x)^a (1+x)^{b-1} [P_m^{(a, b)}(x)]^2 dx
            = 2^{a+b} / b * Gamma(a+m+1) Gamma(b+m+1) / (m! Gamma(a+b+m+1)),

    valid for a > -1 and b > 0.  This is what the diagonal orthogonality
    integrals collapse to.
    """
    if a <= -1.0:
        raise InvalidParams(f"a must exceed -1, got {a}")
    if b <= 0.0:
        raise InvalidParams(f"b must be positive, got {b}")
    if m < 0:
        raise InvalidParams(f"m must be >= 0, got {m}")
    return math.exp(
        (a + b) * math.log(2.0)
        - math.log(b)
        + math.lgamma(a + m + 1.0)
        + math.lgamma(b + m + 1.0)
        - math.lgamma(m + 1.0)
        - math.lgamma(a + b + m + 1.0)
    )
