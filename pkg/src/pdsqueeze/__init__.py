"""Parity-dependent squeezed states of a single bosonic mode.

Closed-form photon statistics, quadrature moments, and phase-space functions,
cross-validated against a truncated Fock-space oracle, plus evolution under
the parity-dependent quadratic Hamiltonian that generates these states.
"""

from . import dynamics, fock, specfun
from .analytic import (
    MomentSet,
    QuadratureMoments,
    SectorPairCoeffs,
    characteristic_function,
    coherent_overlap,
    fock_amplitude,
    fock_amplitude_range,
    overlap,
    pair_coeffs,
    photon_distribution,
    photon_distribution_range,
    photon_moments,
    position_moments,
    position_wavefunction,
    q_function,
    quadrature_moments,
    truncation_cutoff,
    wigner,
)
from .errors import InternalConsistencyError, TruncationError, UnsupportedParametersError
from .states import BogoliubovCoeffs, PDState, SectorParams, bogoliubov_coeffs, normalize_angle

__version__ = "0.1.0"

__all__ = [
    "BogoliubovCoeffs",
    "InternalConsistencyError",
    "MomentSet",
    "PDState",
    "QuadratureMoments",
    "SectorPairCoeffs",
    "SectorParams",
    "TruncationError",
    "UnsupportedParametersError",
    "bogoliubov_coeffs",
    "characteristic_function",
    "coherent_overlap",
    "dynamics",
    "fock",
    "fock_amplitude",
    "fock_amplitude_range",
    "normalize_angle",
    "overlap",
    "pair_coeffs",
    "photon_distribution",
    "photon_distribution_range",
    "photon_moments",
    "position_moments",
    "position_wavefunction",
    "q_function",
    "quadrature_moments",
    "specfun",
    "truncation_cutoff",
    "wigner",
]
