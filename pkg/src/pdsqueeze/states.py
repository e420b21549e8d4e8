"""Parameter containers for parity-sector squeezing and the states built from them."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


def normalize_angle(angle: float) -> float:
    """Fold an angle into (-pi, pi]."""
    if not math.isfinite(angle):
        raise ValueError(f"angle must be finite, got {angle!r}")
    folded = math.remainder(angle, math.tau)
    if folded <= -math.pi:
        folded += math.tau
    return folded


@dataclass(frozen=True)
class SectorParams:
    """Squeeze magnitude r and the two phase angles of one parity sector.

    Angles are folded into (-pi, pi] at construction. The squeeze argument of
    the underlying transformation is xi = -r exp(-i theta).
    """

    r: float
    theta: float = 0.0
    lam: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.r) and self.r >= 0.0):
            raise ValueError(f"squeeze magnitude must be finite and >= 0, got {self.r!r}")
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "theta", normalize_angle(self.theta))
        object.__setattr__(self, "lam", normalize_angle(self.lam))


@dataclass(frozen=True)
class BogoliubovCoeffs:
    """Hyperbolic coefficients (mu, nu) of a sector transformation, |mu|^2 - |nu|^2 = 1."""

    mu: complex
    nu: complex

    @property
    def defect(self) -> float:
        """Departure of |mu|^2 - |nu|^2 from 1."""
        return abs(abs(self.mu) ** 2 - abs(self.nu) ** 2 - 1.0)


def bogoliubov_coeffs(p: SectorParams) -> BogoliubovCoeffs:
    """mu = cosh r e^{-i lam}, nu = sinh r e^{-i(theta + lam)} for one sector."""
    mu = math.cosh(p.r) * cmath.exp(-1j * p.lam)
    nu = math.sinh(p.r) * cmath.exp(-1j * (p.theta + p.lam))
    return BogoliubovCoeffs(mu=mu, nu=nu)


@dataclass(frozen=True)
class PDState:
    """A parity-dependent squeezed state: coherent amplitude plus two sector transforms.

    The even Fock subspace is transformed with sector0, the odd one with sector1.
    """

    beta: complex
    sector0: SectorParams
    sector1: SectorParams

    def __post_init__(self):
        beta = complex(self.beta)
        if not (math.isfinite(beta.real) and math.isfinite(beta.imag)):
            raise ValueError(f"coherent amplitude must be finite, got {self.beta!r}")
        object.__setattr__(self, "beta", beta)

    def sector(self, j: int) -> SectorParams:
        if j == 0:
            return self.sector0
        if j == 1:
            return self.sector1
        raise ValueError(f"sector index must be 0 or 1, got {j!r}")

    def psi(self, j: int) -> float:
        """Combined phase arg(beta) + lam_j + theta_j/2 of sector j.

        For beta = 0 the coherent phase is taken as 0 by convention.
        """
        p = self.sector(j)
        return cmath.phase(self.beta) + p.lam + 0.5 * p.theta

    def rotated(self, angle: float) -> "PDState":
        """The state seen in a phase-space frame rotated by `angle`.

        Rotating by -pi/2 maps the momentum quadrature onto position, which is
        how momentum moments are evaluated from the position closed forms.
        """
        return PDState(
            beta=self.beta * cmath.exp(1j * angle),
            sector0=SectorParams(self.sector0.r, self.sector0.theta - 2.0 * angle, self.sector0.lam),
            sector1=SectorParams(self.sector1.r, self.sector1.theta - 2.0 * angle, self.sector1.lam),
        )
