"""Complex log-gamma, digamma and trigamma, and the Gaussian entropy kernel.

All three gamma-family functions accept a scalar or array (real or complex)
and return complex128 of the same shape.  The evaluation backend (numba or
numpy) is picked once at import, see ``qlandauer._accel``.
"""
import numpy as np

from . import _accel
from ._kernels import KERNELS
from .errors import DomainError, NumericalError, PoleError

__all__ = ["log_gamma", "digamma", "trigamma", "entropy_kernel", "BACKEND"]

BACKEND = _accel.BACKEND

# v this close to 1/2 is rounding noise on a pure state, not a violation
_HEISENBERG_SLACK = 1e-12


def _prepare(z):
    z = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(z)):
        raise DomainError("non-finite argument")
    on_pole = (z.imag == 0.0) & (z.real <= 0.0) & (z.real == np.floor(z.real))
    if np.any(on_pole):
        raise PoleError(f"pole at z = {z[on_pole].ravel()[0].real:g}")
    return z


def _evaluate(name, z, backend):
    z = _prepare(z)
    kernel = KERNELS[backend or BACKEND][name]
    flat = np.ascontiguousarray(z.ravel())
    out = kernel(flat).reshape(z.shape)
    if not np.all(np.isfinite(out)):
        raise NumericalError(f"{name} overflowed")
    return out[()] if out.ndim == 0 else out


def log_gamma(z, backend=None):
    """Principal branch of ln Gamma(z).

    Branch cut on the negative real axis; ``log_gamma(conj(z)) ==
    conj(log_gamma(z))``.  Raises ``PoleError`` at z = 0, -1, -2, ...
    """
    return _evaluate("loggamma", z, backend)


def digamma(z, backend=None):
    """psi(z) = d ln Gamma / dz."""
    return _evaluate("digamma", z, backend)


def trigamma(z, backend=None):
    """psi_1(z) = d psi / dz."""
    return _evaluate("trigamma", z, backend)


def entropy_kernel(v):
    """Von Neumann entropy (nats) of a single-mode Gaussian state.

    ``S(v) = (v + 1/2) ln(v + 1/2) - (v - 1/2) ln(v - 1/2)`` with ``v`` the
    phase-space volume sqrt(<q^2><p^2>)/hbar.  Evaluated as
    ``log1p(x) + x log1p(1/x)``, ``x = v - 1/2``, which is exact at the pure
    state (x = 0) and free of cancellation for large v.
    """
    v = np.asarray(v, dtype=np.float64)
    if np.any(np.isnan(v)):
        raise DomainError("entropy_kernel got NaN")
    x = v - 0.5
    if np.any(x < -_HEISENBERG_SLACK * 0.5):
        raise DomainError(
            f"phase-space volume {v.min():.17g} < 1/2 violates the uncertainty bound")
    x = np.maximum(x, 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        tail = np.where(x > 0.0, x * np.log1p(1.0 / np.where(x > 0.0, x, 1.0)), 0.0)
    s = np.log1p(x) + tail
    return s[()] if s.ndim == 0 else s
