"""Finite-N oscillator bath: an independent check on the closed forms.

The oscillator plus N bath modes with the counter-term (completed-square)
coupling is a quadratic "star" network.  Its global Gibbs state is Gaussian
and follows from one symmetric eigendecomposition, so the reduced variances
and the bath-referenced free energy can be computed with no input from the
characteristic-frequency formulas.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import DomainError, NumericalError
from .specfun import entropy_kernel

__all__ = [
    "BathDiscretization",
    "QuadraticModel",
    "ReducedState",
    "drude_spectral_density",
    "discretize_bath",
    "spectral_weight",
    "quadratic_model",
    "normal_modes",
    "reduced_state",
    "oracle_free_energy",
]

OMEGA_MAX_FACTOR = 10.0


def drude_spectral_density(nu, eta, omega_D):
    """J(nu) = eta nu omega_D^2 / (nu^2 + omega_D^2)."""
    nu = np.asarray(nu, dtype=float)
    return eta * nu * omega_D ** 2 / (nu ** 2 + omega_D ** 2)


@dataclass(frozen=True)
class BathDiscretization:
    omega: np.ndarray   # mode frequencies omega_j
    m: np.ndarray       # mode masses m_j
    C: np.ndarray       # couplings C_j
    omega_max: float

    @property
    def N(self):
        return self.omega.shape[0]

    @property
    def spacing(self):
        return self.omega_max / self.N


@dataclass(frozen=True)
class QuadraticModel:
    masses: np.ndarray     # diag(M, m_1, ..., m_N)
    stiffness: np.ndarray  # (N+1, N+1) potential-energy Hessian


class ReducedState(NamedTuple):
    q2: float
    p2: float
    v: float
    S: float


def discretize_bath(p, N, omega_max=None):
    """N modes on the right-endpoint grid ``omega_j = j * omega_max / N``.

    Unit masses; ``C_j^2 = (2/pi) m_j omega_j J(omega_j) d_omega`` so each
    mode carries the spectral weight of its cell ``(omega_j - d_omega, omega_j]``.
    """
    if N < 2:
        raise DomainError("need at least two bath modes")
    if omega_max is None:
        omega_max = OMEGA_MAX_FACTOR * p.omega_D
    d_omega = omega_max / N
    omega = d_omega * np.arange(1, N + 1, dtype=float)
    m = np.ones(N)
    C = np.sqrt(2.0 / np.pi * m * omega * drude_spectral_density(omega, p.eta, p.omega_D) * d_omega)
    return BathDiscretization(omega=omega, m=m, C=C, omega_max=float(omega_max))


def spectral_weight(bath, lo, hi):
    """Discrete weight sum (pi/2) C_j^2 / (m_j omega_j) over modes with lo < omega_j <= hi."""
    sel = (bath.omega > lo) & (bath.omega <= hi)
    return float(np.sum(0.5 * np.pi * bath.C[sel] ** 2 / (bath.m[sel] * bath.omega[sel])))


def quadratic_model(p, bath, counterterm=True):
    """Mass matrix and stiffness of oscillator + bath.

    ``counterterm=False`` drops the ``sum C_j^2 / (m_j omega_j^2)``
    renormalisation of the oscillator's spring constant; that is only useful
    to demonstrate the resulting instability at strong coupling.
    """
    n = bath.N + 1
    K = np.zeros((n, n))
    K[0, 0] = p.M * p.omega ** 2
    if counterterm:
        K[0, 0] += np.sum(bath.C ** 2 / (bath.m * bath.omega ** 2))
    K[0, 1:] = -bath.C
    K[1:, 0] = -bath.C
    idx = np.arange(1, n)
    K[idx, idx] = bath.m * bath.omega ** 2
    masses = np.concatenate(([p.M], bath.m))
    return QuadraticModel(masses=masses, stiffness=K)


@lru_cache(maxsize=32)
def normal_modes(p, N):
    """Normal-mode frequencies and each mode's overlap with the system coordinate.

    Returns ``(Omega, u0)``: ``u0[k]`` is the system component of the k-th
    eigenvector of the mass-weighted stiffness ``M^-1/2 K M^-1/2``.
    """
    bath = discretize_bath(p, N)
    model = quadratic_model(p, bath)
    s = 1.0 / np.sqrt(model.masses)
    dyn = model.stiffness * s[:, None] * s[None, :]
    try:
        ev, vecs = np.linalg.eigh(dyn)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed: {exc}") from exc
    if ev[0] <= 0:
        raise NumericalError("stiffness matrix is not positive definite")
    omega_k = np.sqrt(ev)
    u0 = vecs[0].copy()
    omega_k.setflags(write=False)
    u0.setflags(write=False)
    return omega_k, u0


def _coth_half(x):
    with np.errstate(divide="ignore", over="ignore"):
        return np.where(np.isinf(x), 1.0, 1.0 / np.tanh(x / 2.0))


def reduced_state(p, T, N):
    """Reduced ``<q^2>``, ``<p^2>``, ``v`` and entropy from the global Gibbs state."""
    if not T >= 0:
        raise DomainError("temperature must be non-negative")
    omega_k, u0 = normal_modes(p, N)
    x = np.inf if T == 0 else p.hbar * omega_k / (p.kB * T)
    c = _coth_half(np.broadcast_to(x, omega_k.shape))
    w = u0 ** 2
    q2 = float(np.sum(w * p.hbar / (2.0 * omega_k) * c) / p.M)
    p2 = float(p.M * np.sum(w * p.hbar * omega_k / 2.0 * c))
    v = np.sqrt(q2 * p2) / p.hbar
    return ReducedState(q2=q2, p2=p2, v=float(v), S=float(entropy_kernel(v)))


def _mode_free_energy(omega, hbar, kT):
    x = hbar * omega / kT
    return kT * (0.5 * x + np.log1p(-np.exp(-x)))


def oracle_free_energy(p, T, N):
    """System free energy ``F_total - F_bath`` of the discretised model, T > 0."""
    if not T > 0:
        raise DomainError("oracle_free_energy needs T > 0")
    omega_k, _ = normal_modes(p, N)
    bath = discretize_bath(p, N)
    kT = p.kB * T
    return float(np.sum(_mode_free_energy(omega_k, p.hbar, kT))
                 - np.sum(_mode_free_energy(bath.omega, p.hbar, kT)))
