"""Evolution under the parity-dependent quadratic Hamiltonian.

The Hamiltonian omega a^dag a + Pi0 (g0 a^dag^2 + g0* a^2)
                             + Pi1 (g1 a^dag^2 + g1* a^2)
drives coherent states into sector-squeezed states. For omega = 0 the
correspondence between evolution time and squeeze parameters is closed form;
for omega != 0 only numerical propagation is provided.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import TruncationError, UnsupportedParametersError
from .fock import (
    DEFAULT_LEAK_TOL,
    FockVector,
    OperatorMatrix,
    ladder_matrices,
    projector_and_parity,
)
from .states import SectorParams


@dataclass(frozen=True)
class HamiltonianParams:
    """Free-evolution frequency and the two parity-sector coupling strengths."""

    omega: float
    g0: complex
    g1: complex

    def __post_init__(self):
        g0, g1 = complex(self.g0), complex(self.g1)
        values = (self.omega, g0.real, g0.imag, g1.real, g1.imag)
        if not all(math.isfinite(v) for v in values):
            raise ValueError("Hamiltonian parameters must be finite")
        object.__setattr__(self, "omega", float(self.omega))
        object.__setattr__(self, "g0", g0)
        object.__setattr__(self, "g1", g1)


def hamiltonian_matrix(dim: int, h: HamiltonianParams) -> OperatorMatrix:
    """Dense Hamiltonian matrix; self-adjoint by construction."""
    if dim < 4:
        raise ValueError(f"dimension must be at least 4, got {dim}")
    a, ad = ladder_matrices(dim)
    pi0, pi1, _ = projector_and_parity(dim)
    ad2 = ad.entries @ ad.entries
    a2 = a.entries @ a.entries
    mat = (
        h.omega * ad.entries @ a.entries
        + pi0.entries @ (h.g0 * ad2 + np.conj(h.g0) * a2)
        + pi1.entries @ (h.g1 * ad2 + np.conj(h.g1) * a2)
    )
    return OperatorMatrix(dim, mat, "hamiltonian")


def evolve(
    h: HamiltonianParams,
    t: float,
    v: FockVector,
    leak_tol: float = DEFAULT_LEAK_TOL,
) -> FockVector:
    """Propagate v by exp(-i H t), using a padded dense exponential.

    The exponential is taken at twice the vector dimension and the result
    cropped back, so support that grows during the evolution is tracked and
    excessive loss raises rather than silently denormalizing.
    """
    if not math.isfinite(t):
        raise ValueError(f"time must be finite, got {t!r}")
    pad = 2 * v.dim
    ham = hamiltonian_matrix(pad, h)
    padded = np.zeros(pad, dtype=complex)
    padded[: v.dim] = v.amplitudes
    moved = expm(-1j * t * ham.entries) @ padded
    cropped = moved[: v.dim]
    leak = max(0.0, 1.0 - float(np.sum(np.abs(cropped) ** 2)))
    if leak > leak_tol:
        raise TruncationError(f"evolved state no longer fits in dim {v.dim}", leak)
    return FockVector(v.dim, cropped, leak)


def squeeze_correspondence(h: HamiltonianParams, t: float) -> tuple[SectorParams, SectorParams]:
    """Sector squeeze parameters produced by evolving for time t at omega = 0.

    The splitting of the propagator over the parity projectors gives
    xi_j = -2 i g_j t with lam_j = 0, i.e. r_j = 2|g_j t| and, under the
    xi = -r e^{-i theta} convention, theta_j = -phase(2 i g_j t).
    """
    if h.omega != 0.0:
        raise UnsupportedParametersError(
            "closed-form correspondence requires omega = 0; use evolve() instead"
        )
    if not math.isfinite(t):
        raise ValueError(f"time must be finite, got {t!r}")
    sectors = []
    for g in (h.g0, h.g1):
        xi = -2j * g * t
        r = abs(xi)
        theta = -cmath.phase(-xi) if r > 0.0 else 0.0
        sectors.append(SectorParams(r=r, theta=theta, lam=0.0))
    return sectors[0], sectors[1]
