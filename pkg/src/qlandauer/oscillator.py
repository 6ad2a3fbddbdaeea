"""Exact stationary thermodynamics of the Drude-damped harmonic oscillator.

The damping kernel of the Ohmic bath with Drude cutoff, ``gamma(s) =
(eta/M) omega_D / (omega_D + s)``, turns the oscillator's response poles
into the three roots of

    lambda^3 - omega_D lambda^2 + (omega^2 + eta omega_D / M) lambda - omega^2 omega_D = 0.

Every closed form below (variances, free energy and their mass derivatives)
is a sum over these characteristic frequencies.
"""
from dataclasses import dataclass, replace
from functools import lru_cache
import math
import warnings

import numpy as np

from .errors import DegenerateRootsError, DomainError, HeisenbergError, NumericalError
from .specfun import digamma, entropy_kernel, log_gamma, trigamma

__all__ = [
    "OscillatorParams",
    "CharacteristicFrequencies",
    "StationaryState",
    "characteristic_frequencies",
    "stationary_variances",
    "free_energy",
    "build_state",
    "mean_force_effective_oscillator",
    "variance_mass_derivatives",
    "uncoupled_variances",
    "uncoupled_free_energy",
]

TWO_PI = 2.0 * math.pi
DEGENERACY_TOL = 1e-8
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class OscillatorParams:
    """Oscillator mass and frequency, bath damping and Drude cutoff, units.

    Defaults ``hbar = kB = 1``.  ``eta = 0`` is the isolated oscillator.
    """

    M: float
    omega: float
    eta: float
    omega_D: float
    hbar: float = 1.0
    kB: float = 1.0

    def __post_init__(self):
        for name in ("M", "omega", "omega_D", "hbar", "kB"):
            val = getattr(self, name)
            if not (np.isfinite(val) and val > 0):
                raise DomainError(f"{name} must be a positive finite number, got {val!r}")
        if not (np.isfinite(self.eta) and self.eta >= 0):
            raise DomainError(f"eta must be non-negative and finite, got {self.eta!r}")
        if self.omega_D <= self.omega:
            warnings.warn(f"Drude cutoff omega_D={self.omega_D} does not exceed "
                          f"omega={self.omega}", RuntimeWarning, stacklevel=3)

    def with_(self, **changes):
        return replace(self, **changes)

    def beta(self, T):
        return 1.0 / (self.kB * T)


@dataclass(frozen=True)
class CharacteristicFrequencies:
    lam: np.ndarray       # (3,) complex roots, Re > 0
    dlam_dM: np.ndarray   # (3,) complex d lambda_i / dM

    def denominators(self):
        """``(lam[i+1] - lam[i]) (lam[i-1] - lam[i])`` with cyclic indices."""
        lam = self.lam
        return (np.roll(lam, -1) - lam) * (np.roll(lam, 1) - lam)


@dataclass(frozen=True)
class StationaryState:
    T: float
    q2: float
    p2: float
    v: float
    S: float
    U: float
    F: float
    dH: float


def _cubic_coefficients(p):
    return (p.omega_D, p.omega ** 2 + p.eta * p.omega_D / p.M, p.omega ** 2 * p.omega_D)


def _polish(lam, c2, c1, c0):
    val = ((lam - c2) * lam + c1) * lam - c0
    der = (3.0 * lam - 2.0 * c2) * lam + c1
    return lam - val / der


@lru_cache(maxsize=8192)
def characteristic_frequencies(p):
    """Roots of the characteristic cubic and their mass derivatives.

    Companion-matrix eigenvalues followed by one Newton step per root.  Real
    roots are made exactly real and a complex pair exactly conjugate, so the
    variance sums come out real up to rounding.  Results are cached per
    parameter set; the arrays are read-only.
    """
    c2, c1, c0 = _cubic_coefficients(p)
    companion = np.array([[c2, -c1, c0],
                          [1.0, 0.0, 0.0],
                          [0.0, 1.0, 0.0]])
    lam = np.linalg.eigvals(companion).astype(np.complex128)
    lam = _polish(lam, c2, c1, c0)

    scale = float(np.abs(lam).max())
    pair = np.abs(lam.imag) > 1e-13 * scale
    if pair.sum() == 2:
        i, j = np.flatnonzero(pair)
        z = 0.5 * (lam[i] + np.conj(lam[j]))
        lam[i], lam[j] = z, np.conj(z)
        lam[~pair] = lam[~pair].real
    else:
        lam = lam.real.astype(np.complex128)
    lam = lam[np.lexsort((lam.imag, -lam.real))]

    gaps = np.abs(lam - np.roll(lam, 1))
    if gaps.min() < DEGENERACY_TOL * scale:
        raise DegenerateRootsError(
            f"characteristic frequencies nearly coincide (min gap {gaps.min():.3g}); "
            "perturb eta by ~1e-9 relative to leave critical damping")
    residual = np.abs(((lam - c2) * lam + c1) * lam - c0)
    if residual.max() > RESIDUAL_TOL * scale ** 3:
        raise NumericalError(f"cubic residual {residual.max():.3g} too large")
    # eta = 0 (or damping below rounding) leaves the pair on the imaginary axis
    if np.any(lam.real < -1e-13 * scale):
        raise NumericalError("characteristic frequency with non-positive real part")

    der = (3.0 * lam - 2.0 * c2) * lam + c1
    dlam = (p.eta * p.omega_D * lam / p.M ** 2) / der
    lam.setflags(write=False)
    dlam.setflags(write=False)
    return CharacteristicFrequencies(lam, dlam)


# -- uncoupled closed forms --------------------------------------------------

def _coth_half(p, T):
    """coth(beta hbar omega / 2), equal to 1 at T = 0."""
    T = np.asarray(T, dtype=float)
    with np.errstate(divide="ignore"):
        x = np.where(T > 0, p.hbar * p.omega / (2.0 * p.kB * np.where(T > 0, T, 1.0)), np.inf)
    return 1.0 / np.tanh(x)


def uncoupled_variances(p, T):
    c = _coth_half(p, T)
    q2 = p.hbar / (2.0 * p.M * p.omega) * c
    p2 = p.hbar * p.M * p.omega / 2.0 * c
    return q2[()], p2[()]


def _log_2sinh_half(x):
    """ln(2 sinh(x/2)) without overflow for large x."""
    return 0.5 * x + np.log1p(-np.exp(-x))


def uncoupled_free_energy(p, T):
    kT = p.kB * np.asarray(T, dtype=float)
    return (kT * _log_2sinh_half(p.hbar * p.omega / kT))[()]


# -- coupled oscillator ------------------------------------------------------

def _divided_sums(lam, den, psi, omega_D):
    """Re sum (lam - omega_D) psi / den and Re sum lam psi / den over roots.

    ``psi`` has a trailing axis of length 3 matching ``lam``.
    """
    sq = np.sum((lam - omega_D) * psi / den, axis=-1)
    sp = np.sum(lam * psi / den, axis=-1)
    return sq.real, sp.real


def _psi_values(p, lam, T):
    """psi(1 + beta hbar lam / 2pi), replaced by its T -> 0 stand-in ln(lam).

    At T = 0 the beta-dependent part ln(beta hbar / 2pi) of the large-argument
    law drops out of both divided-difference sums, leaving ln(lam).
    """
    T = np.asarray(T, dtype=float)
    if np.any(T < 0) or np.any(~np.isfinite(T)):
        raise DomainError("temperature must be finite and non-negative")
    psi = np.empty(T.shape + (3,), dtype=np.complex128)
    hot = T > 0
    if np.any(hot):
        beta = 1.0 / (p.kB * T[hot])
        psi[hot] = digamma(1.0 + beta[:, None] * p.hbar * lam / TWO_PI)
    if not np.all(hot):
        psi[~hot] = np.log(lam)
    return psi


def stationary_variances(p, T):
    """Stationary ``<q^2>`` and ``<p^2>`` of the damped oscillator.

    ``T`` may be a scalar or array; ``T = 0`` is the exact ground-state
    limit.  For ``eta = 0`` the uncoupled coth forms are returned.
    """
    if p.eta == 0:
        return uncoupled_variances(p, T)
    fr = characteristic_frequencies(p)
    T = np.asarray(T, dtype=float)
    psi = _psi_values(p, fr.lam, T)
    sq, sp = _divided_sums(fr.lam, fr.denominators(), psi, p.omega_D)
    classical = p.kB * T / (p.M * p.omega ** 2)
    q2 = p.hbar / (p.M * math.pi) * sq + classical
    p2 = p.hbar * p.eta * p.omega_D / math.pi * sp + (p.M * p.omega) ** 2 * q2
    return q2[()], p2[()]


def free_energy(p, T):
    """Free energy of the damped oscillator (bath-referenced), T > 0.

    ``beta F = ln Gamma(u omega_D) - sum_i ln Gamma(u lam_i) - ln(beta hbar omega / 4 pi^2)``
    with ``u = beta hbar / 2pi``.
    """
    T = np.asarray(T, dtype=float)
    if np.any(~(T > 0)) or np.any(~np.isfinite(T)):
        raise DomainError("free_energy needs T > 0; use the asymptotics module at T = 0")
    if p.eta == 0:
        return uncoupled_free_energy(p, T)[()]
    fr = characteristic_frequencies(p)
    beta = 1.0 / (p.kB * T)
    u = beta * p.hbar / TWO_PI
    lg = log_gamma(u[..., None] * fr.lam)
    lg = np.asarray(lg).reshape(T.shape + (3,))
    total = (log_gamma(u * p.omega_D)
             - lg.sum(axis=-1)
             - np.log(beta * p.hbar * p.omega / (4.0 * math.pi ** 2)))
    total = np.asarray(total)
    if np.any(np.abs(total.imag) > 1e-10 * np.maximum(1.0, np.abs(total.real))):
        raise NumericalError("imaginary parts of the log-gamma sum do not cancel")
    return (total.real / beta)[()]


def build_state(p, T):
    """All stationary quantities at one temperature ``T > 0``.

    ``dH`` is the mean-force shift ``<H*_S - H_S>``, obtained from the
    identity ``S = beta (U - F + <dH>)``.
    """
    T = float(T)
    if not T > 0:
        raise DomainError("build_state needs T > 0")
    q2, p2 = stationary_variances(p, T)
    v = math.sqrt(q2 * p2) / p.hbar
    if v < 0.5 * (1.0 - 1e-12):
        raise HeisenbergError(f"v = {v!r} < 1/2 at T = {T}")
    S = float(entropy_kernel(v))
    U = p2 / (2.0 * p.M) + p.M * p.omega ** 2 * q2 / 2.0
    F = float(free_energy(p, T))
    kT = p.kB * T
    dH = float(kT * S - U + F)
    return StationaryState(T=T, q2=float(q2), p2=float(p2), v=v, S=S, U=float(U), F=F, dH=dH)


def mean_force_effective_oscillator(s, p):
    """Effective oscillator whose Gibbs state reproduces the reduced state.

    Returns ``(M_star, omega_star, offset)`` such that
    ``H*_S = p^2 / (2 M_star) + M_star omega_star^2 q^2 / 2 + offset``
    has ``exp(-beta (H*_S - F)) = rho_S`` with ``F`` the damped-oscillator
    free energy.
    """
    if not s.v > 0.5:
        raise DomainError("pure state (v = 1/2) has no finite-temperature effective oscillator")
    kT = p.kB * s.T
    omega_star = 2.0 * kT / p.hbar * math.atanh(1.0 / (2.0 * s.v))
    m_omega = math.sqrt(s.p2 / s.q2)
    M_star = m_omega / omega_star
    offset = s.F - kT * float(_log_2sinh_half(p.hbar * omega_star / kT))
    return M_star, omega_star, offset


def variance_mass_derivatives(p, T):
    """Analytic ``(d<q^2>/dM, d<p^2>/dM)`` at fixed eta, omega, omega_D, T > 0."""
    T = np.asarray(T, dtype=float)
    if np.any(~(T > 0)):
        raise DomainError("variance_mass_derivatives needs T > 0")
    q2, p2 = stationary_variances(p, T)
    if p.eta == 0:
        return -q2 / p.M, p2 / p.M

    fr = characteristic_frequencies(p)
    lam, dlam = fr.lam, fr.dlam_dM
    den = fr.denominators()
    lam_n, lam_p = np.roll(lam, -1), np.roll(lam, 1)
    dlam_n, dlam_p = np.roll(dlam, -1), np.roll(dlam, 1)
    dden = (dlam_n - dlam) * (lam_p - lam) + (lam_n - lam) * (dlam_p - dlam)

    beta = 1.0 / (p.kB * T)
    x = 1.0 + beta[..., None] * p.hbar * lam / TWO_PI
    psi = np.asarray(digamma(x)).reshape(x.shape)
    dpsi = np.asarray(trigamma(x)).reshape(x.shape) * (beta[..., None] * p.hbar * dlam / TWO_PI)

    def d_sum(num, dnum):
        # d/dM of sum num * psi / den
        terms = (dnum * psi + num * dpsi) / den - num * psi * dden / den ** 2
        return terms.sum(axis=-1).real

    dsq = d_sum(lam - p.omega_D, dlam)
    dsp = d_sum(lam, dlam)
    dq2 = -q2 / p.M + p.hbar / (p.M * math.pi) * dsq
    dp2 = (p.hbar * p.eta * p.omega_D / math.pi * dsp
           + 2.0 * p.M * p.omega ** 2 * q2 + (p.M * p.omega) ** 2 * dq2)
    return dq2[()], dp2[()]
