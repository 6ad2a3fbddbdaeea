"""Strong-coupling thermodynamics of a damped quantum harmonic oscillator.

Exact stationary variances, entropy and free energy of an oscillator coupled
to an Ohmic bath with Drude cutoff; heat and entropy for quasistatic mass
variation and bath coupling; low-temperature closed forms; and a finite-bath
normal-mode oracle.
"""
from .errors import (DegenerateRootsError, DomainError, HeisenbergError, NumericalError,
                     PoleError, QLandauerError, QuadratureError)
from .oscillator import (CharacteristicFrequencies, OscillatorParams, StationaryState,
                         build_state, characteristic_frequencies, free_energy,
                         mean_force_effective_oscillator, stationary_variances,
                         variance_mass_derivatives)
from .processes import (ClausiusVerdict, ProcessResult, clausius_landauer_check,
                        combined_process, coupling_process, erasure_protocol, mass_variation)
from .specfun import BACKEND, digamma, entropy_kernel, log_gamma, trigamma

__version__ = "0.1.0"

STRONG_PARAMS = OscillatorParams(M=1.1, omega=1.2, eta=48.0, omega_D=1200.0)
STRONG_M1 = 1.11
