"""Matrix elements of the holomorphic discrete-series operators.

In the normalized monomial basis e_n(z) of the weighted Bergman space, the
operator of a group element g has matrix elements

    U_{n n'}(g) = sqrt(n_<! Gamma(2 eta + n_>) / (n_>! Gamma(2 eta + n_<)))
                  * alpha^{-(2 eta + n_>)} * conj(alpha)^{n_<}
                  * gamma^{n_> - n_<} * P_{n_<}^{(n_> - n_<, 2 eta - 1)}(1 - 2|z|^2),

with z = beta / conj(alpha), n_< = min(n, n'), n_> = max(n, n'), and
gamma = -beta when n' >= n, gamma = conj(beta) when n >= n'.  Because
2*eta is a positive integer, every alpha power is an exact integer power
and no branch cuts arise.

The same element in the hyperbolic-angle chart separates into a magnitude
in x = 1 - 2 tanh^2(tau/2) and pure phases in phi and psi:

    U_{n n'} = s * 2^{(n_< - n_>)/2 - eta} * (same sqrt prefactor)
               * (1-x)^{(n_> - n_<)/2} (1+x)^{eta} P_{n_<}^{(n_> - n_<, 2 eta - 1)}(x)
               * exp(-i (eta + n) phi) * exp(-i (eta + n') psi),

with s = (-1)^{n' - n} for n' >= n and s = +1 otherwise.  The phase split is
the one forced by factorizing the operator as rotation * boost * rotation
(rotations act diagonally with phases exp(-i (eta + n) angle)); it is
cross-checked against the algebraic form in the test suite.

Pure functions throughout; MatrixBlock entries are frozen read-only arrays.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import InvalidParams
from .group import CartanCoords, GroupElement, multiply
from .halfint import RepLabel, as_rep_label
from .jacobi import jacobi_sequence, log_poch_ratio

# Above this index, magnitudes are assembled in log space: |beta| > 1 raised
# to a large index power would otherwise overflow before the alpha powers
# can balance it.
_LOGSPACE_MIN = 170


def _ipow(base: complex, exponent: int) -> complex:
    """Integer power by binary exponentiation; exact branch-free semantics."""
    if exponent < 0:
        base = 1.0 / base
        exponent = -exponent
    out = complex(1.0)
    while exponent:
        if exponent & 1:
            out *= base
        base *= base
        exponent >>= 1
    return out


@dataclass(frozen=True)
class IndexPair:
    """An ordered index pair (n, n') with its min/max bookkeeping."""

    n: int
    n_prime: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.n_prime < 0:
            raise InvalidParams("basis indices must be >= 0")

    @property
    def n_less(self) -> int:
        return min(self.n, self.n_prime)

    @property
    def n_greater(self) -> int:
        return max(self.n, self.n_prime)

    @property
    def is_n_prime_greater(self) -> bool:
        return self.n_prime >= self.n


def _pref(two_eta: int, n_less: int, n_greater: int) -> float:
    return math.exp(0.5 * log_poch_ratio(two_eta, n_greater, n_less))


@lru_cache(maxsize=None)
def _pref_table(two_eta: int, size: int) -> tuple:
    """Prefactors indexed [offset][lower index]; shared by every block."""
    return tuple(
        tuple(_pref(two_eta, m, m + d) for m in range(size - d))
        for d in range(size)
    )


def _combine(pref: float, alpha_pow: complex, alpha_conj_pow: complex,
             gamma_pow: complex, jac: float) -> complex:
    return pref * alpha_pow * alpha_conj_pow * gamma_pow * jac


def _entry(two_eta: int, n_less: int, n_greater: int, gamma: complex,
           alpha: complex, jac: float) -> complex:
    return _combine(
        _pref(two_eta, n_less, n_greater),
        _ipow(alpha, -(two_eta + n_greater)),
        _ipow(alpha.conjugate(), n_less),
        _ipow(gamma, n_greater - n_less),
        jac,
    )


def _entry_logspace(two_eta: int, n_less: int, n_greater: int, gamma: complex,
                    alpha: complex, jac: float) -> complex:
    diff = n_greater - n_less
    if jac == 0.0 or (diff > 0 and gamma == 0):
        return 0j
    log_mag = (
        0.5 * log_poch_ratio(two_eta, n_greater, n_less)
        - (two_eta + n_greater - n_less) * math.log(abs(alpha))
        + math.log(abs(jac))
    )
    angle = -(two_eta + n_greater + n_less) * cmath.phase(alpha)
    if diff > 0:
        log_mag += diff * math.log(abs(gamma))
        angle += diff * cmath.phase(gamma)
    value = cmath.exp(complex(log_mag, angle))
    return -value if jac < 0.0 else value


def matrix_element(eta, n: int, n_prime: int, g: GroupElement) -> complex:
    """Matrix element U_{n n'}(g) in the algebraic (alpha, beta) form."""
    label = as_rep_label(eta)
    pair = IndexPair(n, n_prime)
    m, big = pair.n_less, pair.n_greater
    gamma = -g.beta if pair.is_n_prime_greater else g.beta.conjugate()
    z = g.beta / g.alpha.conjugate()
    xarg = 1.0 - 2.0 * (z.real * z.real + z.imag * z.imag)
    jac = jacobi_sequence(float(big - m), float(label.two_eta - 1), m, xarg)[-1]
    if big <= _LOGSPACE_MIN:
        return _entry(label.two_eta, m, big, gamma, g.alpha, jac)
    return _entry_logspace(label.two_eta, m, big, gamma, g.alpha, jac)


def matrix_element_cartan(eta, n: int, n_prime: int, c: CartanCoords) -> complex:
    """Matrix element in the chart form: explicit magnitude times phases."""
    label = as_rep_label(eta)
    te = label.two_eta
    pair = IndexPair(n, n_prime)
    m, big = pair.n_less, pair.n_greater
    x = c.x
    jac = jacobi_sequence(float(big - m), float(te - 1), m, x)[-1]
    pref = math.exp(0.5 * log_poch_ratio(te, big, m))
    magnitude = (
        2.0 ** (0.5 * (m - big - te))
        * (1.0 - x) ** (0.5 * (big - m))
        * (1.0 + x) ** (0.5 * te)
        * pref
        * jac
    )
    sign = -1.0 if (n_prime > n and (n_prime - n) % 2 == 1) else 1.0
    angle = -0.5 * ((te + 2 * n) * c.phi + (te + 2 * n_prime) * c.psi)
    return sign * magnitude * cmath.exp(1j * angle)


def matrix_element_batch(eta, n: int, n_prime: int, alpha: np.ndarray,
                         beta: np.ndarray) -> np.ndarray:
    """Algebraic-form U_{n n'} evaluated over arrays of (alpha, beta) pairs.

    Vectorized workhorse for Monte Carlo integration over the group; the
    inputs are parallel arrays of matrix entries of valid elements.
    """
    label = as_rep_label(eta)
    te = label.two_eta
    pair = IndexPair(n, n_prime)
    m, big = pair.n_less, pair.n_greater
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    gamma = -beta if pair.is_n_prime_greater else np.conj(beta)
    z = beta / np.conj(alpha)
    xarg = 1.0 - 2.0 * (z.real**2 + z.imag**2)
    jac = jacobi_sequence(float(big - m), float(te - 1), m, xarg)[-1]
    pref = math.exp(0.5 * log_poch_ratio(te, big, m))
    return (
        pref
        * alpha ** (-(te + big))
        * np.conj(alpha) ** m
        * gamma ** (big - m)
        * jac
    )


@dataclass(frozen=True, eq=False)
class MatrixBlock:
    """Finite truncation of an operator to the first ``size`` basis vectors."""

    eta: RepLabel
    size: int
    entries: np.ndarray = field(repr=False)
    group_element: GroupElement


def truncated_operator(eta, g: GroupElement, size: int) -> MatrixBlock:
    """Assemble the size x size block of U(g); entries match matrix_element.

    The assembly shares the scalar entry kernel and runs one Jacobi
    recurrence per diagonal offset, so entries[i, j] reproduces
    matrix_element(eta, i, j, g) bit for bit at a fraction of the cost.
    """
    label = as_rep_label(eta)
    if size < 1:
        raise InvalidParams(f"size must be >= 1, got {size}")
    te = label.two_eta
    alpha, beta = g.alpha, g.beta
    z = beta / alpha.conjugate()
    xarg = 1.0 - 2.0 * (z.real * z.real + z.imag * z.imag)
    out = np.empty((size, size), dtype=complex)
    if size - 1 > _LOGSPACE_MIN:
        for d in range(size):
            jac = jacobi_sequence(float(d), float(te - 1), size - 1 - d, xarg)
            for m in range(size - d):
                out[m, m + d] = _entry_logspace(te, m, m + d, -beta, alpha, jac[m])
                out[m + d, m] = (
                    _entry_logspace(te, m, m + d, beta.conjugate(), alpha, jac[m])
                    if d else out[m, m + d]
                )
        out.setflags(write=False)
        return MatrixBlock(label, size, out, g)
    # Everything an entry needs is a pure function of one index or the
    # offset; tabulating those factors keeps each entry bit-identical to
    # matrix_element while removing the per-entry power/Gamma work.
    prefs = _pref_table(te, size)
    conj_alpha = alpha.conjugate()
    alpha_neg = [_ipow(alpha, -(te + j)) for j in range(size)]
    alpha_conj = [_ipow(conj_alpha, m) for m in range(size)]
    gamma_upper = [_ipow(-beta, d) for d in range(size)]
    gamma_lower = [_ipow(beta.conjugate(), d) for d in range(size)]
    for d in range(size):
        jac = jacobi_sequence(float(d), float(te - 1), size - 1 - d, xarg)
        pref_d = prefs[d]
        gu, gl = gamma_upper[d], gamma_lower[d]
        for m in range(size - d):
            upper = _combine(pref_d[m], alpha_neg[m + d], alpha_conj[m], gu, jac[m])
            out[m, m + d] = upper
            out[m + d, m] = (
                _combine(pref_d[m], alpha_neg[m + d], alpha_conj[m], gl, jac[m])
                if d else upper
            )
    out.setflags(write=False)
    return MatrixBlock(label, size, out, g)


def unitarity_defect(block: MatrixBlock, k: int) -> float:
    """Max-norm of (B^dag B - I) on the leading k x k corner.

    The defect is pure truncation error; for fixed k it decays like
    size^{2(k-1)} |z|^{2 (size - k)} as the block size grows.  The default
    budget (size 60, k 10) keeps it below 1e-8 for |z| <= 0.6.
    """
    if not 1 <= k <= block.size:
        raise InvalidParams(f"k must lie in [1, size], got {k}")
    b = block.entries
    gram = b.conj().T @ b
    corner = gram[:k, :k] - np.eye(k)
    return float(np.max(np.abs(corner)))


def homomorphism_defect(eta, g1: GroupElement, g2: GroupElement,
                        size: int, k: int) -> float:
    """Max-norm on the k x k corner of U(g1 g2) - U(g1) U(g2), truncated."""
    if not 1 <= k <= size:
        raise InvalidParams(f"k must lie in [1, size], got {k}")
    product = truncated_operator(eta, multiply(g1, g2), size).entries
    composed = truncated_operator(eta, g1, size).entries @ truncated_operator(eta, g2, size).entries
    return float(np.max(np.abs((product - composed)[:k, :k])))
