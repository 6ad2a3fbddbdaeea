"""Hot loops for complex log-gamma, digamma and trigamma.

Two interchangeable implementations of one algorithm live here:

* ``*_loop`` functions: scalar kernels compiled with numba, applied
  element by element over a flat complex128 array;
* ``*_vec`` functions: the same recurrence and asymptotic series written as
  masked numpy array operations.

Algorithm: shift ``z`` upward with the recurrence until it lies in
``|z| >= 12`` with ``Re z >= 0``, then sum the Stirling-type asymptotic
series through the B14 Bernoulli term.  At ``|w| = 12`` the first omitted
term is below 1e-17 relative.

Inputs are assumed pole-free and finite; ``specfun`` checks that.
"""
import cmath
import math

import numpy as np

from ._accel import njit

R_MIN = 12.0
HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# Bernoulli numbers B2..B14
_B = np.array([1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
               5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0])
_K = np.arange(1, 8, dtype=np.float64)
# coefficient of w**(1-2k) in ln Gamma, w**(-2k) in psi, w**(-2k-1) in psi_1
LGAMMA_COEF = _B / (2.0 * _K * (2.0 * _K - 1.0))
DIGAMMA_COEF = _B / (2.0 * _K)
TRIGAMMA_COEF = _B.copy()


# ----------------------------------------------------------------------------
# numba path
# ----------------------------------------------------------------------------

@njit
def _shift_count(z):
    if abs(z) >= R_MIN and z.real >= 0.0:
        return 0
    return int(math.ceil(R_MIN - z.real))


@njit
def _horner(coef, x):
    s = 0.0 + 0.0j
    for i in range(coef.shape[0] - 1, -1, -1):
        s = s * x + coef[i]
    return s


@njit
def loggamma_scalar(z):
    n = _shift_count(z)
    acc = 0.0 + 0.0j
    # summing logs (not log of the product) keeps the principal branch
    # continuous off the negative real axis
    for k in range(n):
        acc += cmath.log(z + k)
    w = z + n
    r = 1.0 / w
    series = r * _horner(LGAMMA_COEF, r * r)
    return (w - 0.5) * cmath.log(w) - w + HALF_LOG_2PI + series - acc


@njit
def digamma_scalar(z):
    n = _shift_count(z)
    acc = 0.0 + 0.0j
    for k in range(n):
        acc += 1.0 / (z + k)
    w = z + n
    r = 1.0 / w
    r2 = r * r
    series = r2 * _horner(DIGAMMA_COEF, r2)
    return cmath.log(w) - 0.5 * r - series - acc


@njit
def trigamma_scalar(z):
    n = _shift_count(z)
    acc = 0.0 + 0.0j
    for k in range(n):
        t = 1.0 / (z + k)
        acc += t * t
    w = z + n
    r = 1.0 / w
    r2 = r * r
    series = r2 * r * _horner(TRIGAMMA_COEF, r2)
    return r + 0.5 * r2 + series + acc


@njit
def loggamma_loop(z):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        out[i] = loggamma_scalar(z[i])
    return out


@njit
def digamma_loop(z):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        out[i] = digamma_scalar(z[i])
    return out


@njit
def trigamma_loop(z):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        out[i] = trigamma_scalar(z[i])
    return out


# ----------------------------------------------------------------------------
# numpy path
# ----------------------------------------------------------------------------

def _shift_counts_vec(z):
    done = (np.abs(z) >= R_MIN) & (z.real >= 0.0)
    n = np.ceil(R_MIN - z.real)
    return np.where(done, 0, n).astype(np.int64)


def _horner_vec(coef, x):
    s = np.zeros_like(x)
    for c in coef[::-1]:
        s = s * x + c
    return s


def _shifted(z, term):
    """Return ``(w, acc)`` with ``w = z + n`` and ``acc = sum_k term(z + k)``."""
    n = _shift_counts_vec(z)
    w = z.copy()
    acc = np.zeros_like(z)
    for k in range(int(n.max(initial=0))):
        m = n > k
        acc[m] += term(w[m])
        w[m] += 1.0
    return w, acc


def loggamma_vec(z):
    w, acc = _shifted(z, np.log)
    r = 1.0 / w
    series = r * _horner_vec(LGAMMA_COEF, r * r)
    return (w - 0.5) * np.log(w) - w + HALF_LOG_2PI + series - acc


def digamma_vec(z):
    w, acc = _shifted(z, np.reciprocal)
    r = 1.0 / w
    r2 = r * r
    return np.log(w) - 0.5 * r - r2 * _horner_vec(DIGAMMA_COEF, r2) - acc


def trigamma_vec(z):
    w, acc = _shifted(z, lambda u: 1.0 / (u * u))
    r = 1.0 / w
    r2 = r * r
    return r + 0.5 * r2 + r2 * r * _horner_vec(TRIGAMMA_COEF, r2) + acc


KERNELS = {
    "numba": {"loggamma": loggamma_loop, "digamma": digamma_loop,
              "trigamma": trigamma_loop},
    "numpy": {"loggamma": loggamma_vec, "digamma": digamma_vec,
              "trigamma": trigamma_vec},
}
