"""Closed-form low-temperature, strong-coupling expansions.

Everything here is leading order in the dimensionless ratios

    a = beta hbar omega / 2,   b_i = eta / (M_i omega),   c_i = M_i omega_D / eta

and is meant for ``a, b, c >> 1``.  Outside the gate (a >= 5, b >= 10,
c >= 10) results are still returned, with an ``AsymptoticValidityWarning``.
The T^2 corrections also need ``kT b << hbar omega``; at moderate b the
next-order terms (relative size ~ ln b / b) are visible.
"""
from dataclasses import dataclass
import math
import warnings

from .errors import DomainError

__all__ = [
    "AsymptoticValidityWarning",
    "DimensionlessParams",
    "dimensionless",
    "validity_flags",
    "lowT_variances",
    "lowT_mass_process",
    "lowT_coupling_process",
    "lowT_combined_delta",
    "combined_remainder",
]

A_MIN, B_MIN, C_MIN = 5.0, 10.0, 10.0
LN_2_OVER_PI2 = math.log(2.0 / math.pi ** 2)


class AsymptoticValidityWarning(RuntimeWarning):
    pass


@dataclass(frozen=True)
class DimensionlessParams:
    a: float
    b0: float
    b1: float
    c0: float
    c1: float


def dimensionless(p, M1, T):
    """``a``, ``b0, b1``, ``c0, c1`` for a mass change ``p.M -> M1`` at temperature ``T``."""
    if p.eta <= 0:
        raise DomainError("strong-coupling expansions need eta > 0")
    a = math.inf if T == 0 else p.hbar * p.omega / (2.0 * p.kB * T)
    return DimensionlessParams(
        a=a,
        b0=p.eta / (p.M * p.omega), b1=p.eta / (M1 * p.omega),
        c0=p.M * p.omega_D / p.eta, c1=M1 * p.omega_D / p.eta,
    )


def validity_flags(dp):
    """Names of the gated ratios that are too small (empty when all pass)."""
    flags = []
    if dp.a < A_MIN:
        flags.append("a")
    if min(dp.b0, dp.b1) < B_MIN:
        flags.append("b")
    if min(dp.c0, dp.c1) < C_MIN:
        flags.append("c")
    return flags


def _gate(dp):
    if min(dp.b0, dp.b1, dp.c0, dp.c1) <= 1.0:
        raise DomainError("expansion needs b > 1 and c > 1 (logarithms of logarithms)")
    flags = validity_flags(dp)
    if flags:
        warnings.warn(f"outside the strong-coupling/low-T regime: {', '.join(flags)} too small",
                      AsymptoticValidityWarning, stacklevel=3)
    return flags


def lowT_variances(p, T):
    """Leading-order ``(<q^2>, <p^2>)``; the q^2 term is kept through T^2."""
    dp = dimensionless(p, p.M, T)
    _gate(dp)
    kT = p.kB * T
    q2 = (2.0 * p.hbar / (math.pi * p.eta) * math.log(dp.b0)
          + math.pi * p.eta * kT ** 2 / (3.0 * p.hbar * p.M ** 2 * p.omega ** 4))
    p2 = p.hbar * p.eta / math.pi * math.log(dp.c0)
    return q2, p2


def _thermal_factor(a):
    return 1.0 - math.pi ** 2 / (6.0 * a * a)


def lowT_mass_process(dp, p):
    """Heat, entropy change and Clausius excess for the mass change ``M0 -> M1``.

    ``delta`` is the combined closed form, which keeps terms through
    O(hbar omega / a^2) and so drops the T^2 entropy piece multiplied by kT.
    """
    _gate(dp)
    scale = p.hbar * p.omega / (2.0 * math.pi)
    db = dp.b0 - dp.b1
    Q = db * scale * _thermal_factor(dp.a)
    loglog = (math.log(math.log(dp.c1) / math.log(dp.c0))
              - math.log(math.log(dp.b0) / math.log(dp.b1)))
    dS = 0.5 * (loglog - math.pi ** 2 / (24.0 * dp.a ** 2)
                * (dp.b0 ** 2 / math.log(dp.b0) - dp.b1 ** 2 / math.log(dp.b1)))
    if db == 0:
        delta = 0.0
    else:
        delta = db * scale * (1.0 - math.pi / (db * 2.0 * dp.a) * loglog
                              - math.pi ** 2 / (6.0 * dp.a ** 2))
    return Q, dS, delta


def lowT_coupling_process(dp, p):
    """Heat and entropy change for switching the coupling on at mass ``M0``."""
    _gate(dp)
    Q = -p.hbar * p.omega * dp.b0 / (2.0 * math.pi) * _thermal_factor(dp.a)
    lb = math.log(dp.b0)
    dS = 1.0 + 0.5 * (LN_2_OVER_PI2 + math.log(math.log(dp.c0)) + math.log(lb)
                      + math.pi ** 2 * dp.b0 ** 2 / (24.0 * dp.a ** 2 * lb))
    return Q, dS


def lowT_combined_delta(dp, p, T):
    """Clausius excess of coupling followed by mass change, leading order."""
    _gate(dp)
    kT = p.kB * T
    bracket = (1.0
               + math.pi / (dp.b1 * 2.0 * dp.a)
               * (LN_2_OVER_PI2 + math.log(math.log(dp.c1)) + math.log(math.log(dp.b1)))
               - math.pi ** 2 / (6.0 * dp.a ** 2))
    return -kT - p.hbar * p.omega * dp.b1 / (2.0 * math.pi) * bracket


def combined_remainder(dp, p, T):
    """The O(hbar omega b^2 / a^3) term separating the two low-T routes.

    ``lowT_combined_delta == mass delta + (Q_C - kT dS_C) + combined_remainder``
    holds identically: the combined expression drops the kT-weighted T^2
    entropy piece of the coupling step.
    """
    kT = p.kB * T
    return kT * math.pi ** 2 * dp.b0 ** 2 / (48.0 * dp.a ** 2 * math.log(dp.b0))
