"""Closed-form quantities of parity-dependent squeezed states.

Everything here is a pure function of the state parameters: Fock amplitudes,
the photon-number distribution and its moments, the position wavefunction
and quadrature moments, overlaps, and the Husimi and Wigner functions.

Branch handling: the prefactors 1/sqrt(mu_j) and 1/sqrt(mu_j - nu_j) are
two-valued. The continuous branch is fixed by splitting off the sector
rotation angle explicitly, e.g. 1/sqrt(mu) = exp(i lam/2)/sqrt(cosh r) and
1/sqrt(mu - nu) = exp(i lam/2)/sqrt(cosh r - sinh r e^{-i theta}), where the
remaining square roots act on arguments with positive real part and are
therefore principal and smooth. All multi-term sums are assembled with a
common extracted exponent so that widely displaced sectors (|beta| e^{r}
scale) neither overflow nor lose the cross-term cancellations.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InternalConsistencyError, UnsupportedParametersError
from .specfun import hermite_scaled, hermite_scaled_range
from .states import BogoliubovCoeffs, PDState, SectorParams, bogoliubov_coeffs

# Below this squeeze magnitude the number-basis formulas switch to their
# coherent-amplitude limit: the Hermite-function route stays accurate for any
# r > 0 in the scaled representation, so the switch only guards the exact
# r = 0 singularity (and its immediate floating-point neighborhood).
COHERENT_BRANCH_EPS = 1e-12

_LOG_HALF = math.log(0.5)
_QUARTER_LOG_PI = 0.25 * math.log(math.pi)
_SQRT2 = math.sqrt(2.0)

__all__ = [
    "COHERENT_BRANCH_EPS",
    "MomentSet",
    "QuadratureMoments",
    "SectorPairCoeffs",
    "characteristic_function",
    "coherent_overlap",
    "fock_amplitude",
    "fock_amplitude_range",
    "overlap",
    "pair_coeffs",
    "photon_distribution",
    "photon_distribution_range",
    "photon_moments",
    "position_moments",
    "position_wavefunction",
    "q_function",
    "quadrature_moments",
    "truncation_cutoff",
    "wigner",
]


def truncation_cutoff(s: PDState) -> int:
    """Fock cutoff large enough for series checks on this state.

    ceil(e^{2 max(r0, r1)} (|beta|^2 + 6|beta| + 20)): squeezing inflates the
    occupied range by e^{2r} scale factors on top of the coherent support.
    """
    ab = abs(s.beta)
    r = max(s.sector0.r, s.sector1.r)
    return math.ceil(math.exp(2.0 * r) * (ab * ab + 6.0 * ab + 20.0))


# ---------------------------------------------------------------------------
# number-basis quantities
# ---------------------------------------------------------------------------


def _sector_amplitude_parts(s: PDState, j: int):
    """Sector-j pieces of the number-state decomposition, rotation split off.

    Returns (log_prefactor, log_w, hermite_argument, coherent_branch) where
    the amplitude at n (of parity j) is
    exp(log_prefactor + n log_w - lgamma(n+1)/2) * H_n(hermite_argument),
    or the coherent-limit form when coherent_branch is True.
    """
    p = s.sector(j)
    beta_rot = s.beta * cmath.exp(1j * p.lam)
    base = 1j * p.lam / 2.0 - 0.5 * abs(s.beta) ** 2
    if p.r < COHERENT_BRANCH_EPS:
        return base, beta_rot, None, True
    ch = math.cosh(p.r)
    nu0 = math.sinh(p.r) * cmath.exp(-1j * p.theta)
    w = cmath.sqrt(nu0 / (2.0 * ch))
    z = beta_rot * w / nu0
    log_pref = base - 0.5 * math.log(ch) + nu0.conjugate() * beta_rot * beta_rot / (2.0 * ch)
    return log_pref, cmath.log(w), z, False


def fock_amplitude(s: PDState, n: int) -> complex:
    """Number-basis amplitude <n|s>, using the sector of parity n mod 2."""
    if n != int(n) or n < 0:
        raise ValueError(f"photon number must be a nonnegative integer, got {n!r}")
    n = int(n)
    pref, arg1, z, coherent = _sector_amplitude_parts(s, n % 2)
    if coherent:
        beta_rot = arg1
        if beta_rot == 0:
            return cmath.exp(pref) if n == 0 else 0.0j
        log_amp = pref + n * cmath.log(beta_rot) - 0.5 * math.lgamma(n + 1)
        return cmath.exp(log_amp)
    h = hermite_scaled(n, z)
    if h.is_zero:
        return 0.0j
    log_amp = pref + n * arg1 - 0.5 * math.lgamma(n + 1)
    magnitude = math.exp(log_amp.real + h.log_magnitude)
    return magnitude * cmath.exp(1j * log_amp.imag) * h.phase


def fock_amplitude_range(s: PDState, n_max: int) -> np.ndarray:
    """Amplitudes <n|s> for n = 0..n_max in one pass per parity sector."""
    if n_max != int(n_max) or n_max < 0:
        raise ValueError(f"cutoff must be a nonnegative integer, got {n_max!r}")
    n_max = int(n_max)
    out = np.zeros(n_max + 1, dtype=complex)
    lgam = np.array([math.lgamma(n + 1) for n in range(n_max + 1)])
    for j in (0, 1):
        ns = np.arange(j, n_max + 1, 2)
        if ns.size == 0:
            continue
        pref, arg1, z, coherent = _sector_amplitude_parts(s, j)
        if coherent:
            beta_rot = arg1
            if beta_rot == 0:
                if j == 0:
                    out[0] = cmath.exp(pref)
                continue
            log_amp = pref + ns * cmath.log(beta_rot) - 0.5 * lgam[ns]
            out[ns] = np.exp(log_amp)
            continue
        herm = hermite_scaled_range(n_max, z)
        log_w = arg1
        for n in ns:
            h = herm[n]
            if h.is_zero:
                continue
            log_amp = pref + n * log_w - 0.5 * lgam[n]
            out[n] = math.exp(log_amp.real + h.log_magnitude) * cmath.exp(1j * log_amp.imag) * h.phase
    return out


def _sector_distribution_parts(s: PDState, j: int):
    """Sector-j pieces of the photon-number distribution."""
    p = s.sector(j)
    ab = abs(s.beta)
    if p.r < COHERENT_BRANCH_EPS:
        return -ab * ab, None, None, True
    psi = s.psi(j)
    tanh_r = math.tanh(p.r)
    base = -ab * ab + ab * ab * tanh_r * math.cos(2.0 * psi)
    log_ratio = math.log(tanh_r) - math.log(2.0)
    zeta = ab * cmath.exp(1j * psi) / math.sqrt(math.sinh(2.0 * p.r))
    return base - math.log(math.cosh(p.r)), log_ratio, zeta, False


def photon_distribution(s: PDState, n: int) -> float:
    """Probability P(n) of detecting n photons."""
    if n != int(n) or n < 0:
        raise ValueError(f"photon number must be a nonnegative integer, got {n!r}")
    n = int(n)
    base, log_ratio, zeta, coherent = _sector_distribution_parts(s, n % 2)
    ab = abs(s.beta)
    if coherent:
        if ab == 0.0:
            return math.exp(base) if n == 0 else 0.0
        return math.exp(base + 2.0 * n * math.log(ab) - math.lgamma(n + 1))
    h = hermite_scaled(n, zeta)
    if h.is_zero:
        return 0.0
    log_p = base + n * log_ratio - math.lgamma(n + 1) + 2.0 * h.log_magnitude
    return math.exp(log_p) if log_p > -745.0 else 0.0


def photon_distribution_range(s: PDState, n_max: int) -> np.ndarray:
    """P(n) for n = 0..n_max in one pass per parity sector."""
    if n_max != int(n_max) or n_max < 0:
        raise ValueError(f"cutoff must be a nonnegative integer, got {n_max!r}")
    n_max = int(n_max)
    out = np.zeros(n_max + 1)
    ab = abs(s.beta)
    lgam = np.array([math.lgamma(n + 1) for n in range(n_max + 1)])
    with np.errstate(under="ignore"):
        for j in (0, 1):
            ns = np.arange(j, n_max + 1, 2)
            if ns.size == 0:
                continue
            base, log_ratio, zeta, coherent = _sector_distribution_parts(s, j)
            if coherent:
                if ab == 0.0:
                    if j == 0:
                        out[0] = math.exp(base)
                    continue
                out[ns] = np.exp(base + 2.0 * ns * math.log(ab) - lgam[ns])
                continue
            herm = hermite_scaled_range(n_max, zeta)
            log_h = np.array([herm[n].log_magnitude for n in ns])
            out[ns] = np.exp(base + ns * log_ratio - lgam[ns] + 2.0 * log_h)
    return out


def characteristic_function(s: PDState, z: float) -> float:
    """F(z) = sum_n z^n P(n), evaluated in closed form for 0 <= z <= 1."""
    if not (0.0 <= z <= 1.0):
        raise ValueError(f"argument must lie in [0, 1], got {z!r}")
    ab2 = abs(s.beta) ** 2
    total = 0.0
    for j in (0, 1):
        p = s.sector(j)
        tau2 = 1.0 / (math.cosh(p.r) ** 2 - (z * math.sinh(p.r)) ** 2)
        tau = math.sqrt(tau2)
        c2 = math.cos(2.0 * s.psi(j))
        envelope = math.exp(ab2 * (1.0 - tau2 * z * z) * math.tanh(p.r) * c2 - ab2)
        hyper = math.exp(z * tau2 * ab2) + (-1.0) ** j * math.exp(-z * tau2 * ab2)
        total += 0.5 * tau * hyper * envelope
    return total


class MomentSet(NamedTuple):
    """First and second factorial moments of the photon number, with intermediates.

    g2 is None exactly when the state is the vacuum (mean photon number zero),
    where the correlation function is a 0/0 form.
    """

    mean_n: float
    second_factorial: float
    g2: float | None
    a_plus: tuple[float, float]
    a_minus: tuple[float, float]
    b_plus: tuple[float, float]
    b_minus: tuple[float, float]


def photon_moments(s: PDState) -> MomentSet:
    """<N>, <a^dag^2 a^2> and g2 from the sector-wise closed forms."""
    ab2 = abs(s.beta) ** 2
    a_plus, a_minus, b_plus, b_minus = [], [], [], []
    for j in (0, 1):
        p = s.sector(j)
        sh2 = math.sinh(p.r) ** 2
        c2r = math.cosh(2.0 * p.r)
        s2r = math.sinh(2.0 * p.r)
        cpsi = math.cos(2.0 * s.psi(j))
        a_plus.append(sh2 + ab2 * c2r - ab2 * s2r * cpsi)
        a_minus.append(sh2 - ab2 * c2r - ab2 * s2r * cpsi)
        b_common = sh2 * c2r - ab2 * s2r * (1.0 + 4.0 * sh2) * cpsi
        b_plus.append(b_common + 2.0 * ab2 * sh2 * (1.0 + 2.0 * c2r))
        b_minus.append(b_common - 2.0 * ab2 * sh2 * (1.0 + 2.0 * c2r))
    damp = math.exp(-2.0 * ab2)
    mean = 0.5 * ((a_plus[0] + damp * a_minus[0]) + (a_plus[1] - damp * a_minus[1]))
    second = 0.5 * (
        (a_plus[0] ** 2 + b_plus[0] + damp * (a_minus[0] ** 2 + b_minus[0]))
        + (a_plus[1] ** 2 + b_plus[1] - damp * (a_minus[1] ** 2 + b_minus[1]))
    )
    mean = max(mean, 0.0)
    second = max(second, 0.0)
    g2 = None if mean == 0.0 else second / (mean * mean)
    return MomentSet(
        mean_n=mean,
        second_factorial=second,
        g2=g2,
        a_plus=(a_plus[0], a_plus[1]),
        a_minus=(a_minus[0], a_minus[1]),
        b_plus=(b_plus[0], b_plus[1]),
        b_minus=(b_minus[0], b_minus[1]),
    )


# ---------------------------------------------------------------------------
# position representation and quadrature moments
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _WaveSector:
    """One sector of the position wavefunction N [e^{kx} + sign e^{-kx}] e^{-w x^2/2}."""

    log_pref: complex  # log of the sector prefactor N_j (branch fixed)
    w: complex  # Gaussian width coefficient (mu + nu)/(mu - nu)
    k: complex  # exponential displacement coefficient sqrt(2) beta/(mu - nu)
    sign: float  # (-1)^j
    log_m: complex  # branch-fixed log(mu - nu)


def _wave_sectors(s: PDState) -> tuple[_WaveSector, _WaveSector]:
    ab2 = abs(s.beta) ** 2
    sectors = []
    for j in (0, 1):
        p = s.sector(j)
        inner = math.cosh(p.r) - math.sinh(p.r) * cmath.exp(-1j * p.theta)  # Re > 0
        log_m = cmath.log(inner) - 1j * p.lam
        bog = bogoliubov_coeffs(p)
        m = bog.mu - bog.nu
        w = (bog.mu + bog.nu) / m
        k = _SQRT2 * s.beta / m
        log_pref = (
            _LOG_HALF
            - _QUARTER_LOG_PI
            - 0.5 * ab2
            - 0.5 * log_m
            - (m.conjugate() / m) * s.beta * s.beta / 2.0
        )
        sectors.append(_WaveSector(log_pref=log_pref, w=w, k=k, sign=(-1.0) ** j, log_m=log_m))
    return sectors[0], sectors[1]


def _masked_exp_sum(exponents, coeffs):
    """sum_i coeff_i exp(exponent_i) with a common extracted real exponent.

    `exponents` are complex arrays broadcast to a common shape; returns the
    complex sum. Stable against intermediate overflow as long as the true
    result is representable.
    """
    stack = np.stack(np.broadcast_arrays(*exponents))
    reals = stack.real
    peak = np.max(reals, axis=0)
    peak = np.where(np.isfinite(peak), peak, 0.0)
    total = 0.0
    with np.errstate(under="ignore"):
        for exponent, coeff in zip(stack, coeffs):
            total = total + coeff * np.exp(exponent - peak)
        return total * np.exp(peak)


def position_wavefunction(s: PDState, x):
    """Wavefunction <x|s>; accepts a scalar or an array of positions."""
    xs = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xs)):
        raise ValueError("position must be finite")
    sec = _wave_sectors(s)
    exponents, coeffs = [], []
    for ws in sec:
        base = ws.log_pref - ws.w * xs * xs / 2.0
        exponents.append(base + ws.k * xs)
        coeffs.append(1.0)
        exponents.append(base - ws.k * xs)
        coeffs.append(ws.sign)
    value = _masked_exp_sum(exponents, coeffs)
    if np.isscalar(x) or np.ndim(x) == 0:
        return complex(value)
    return value


def position_moments(s: PDState) -> tuple[complex, complex, complex]:
    """(<1>, <x>, <x^2>) of the position operator from sector-pair Gaussian integrals.

    The norm <1> is returned as a built-in cross check; it equals 1 for every
    valid state.
    """
    sec = _wave_sectors(s)
    exponents = []
    weights = []  # (sign, poly0, poly1, poly2)
    for sj in sec:
        for sl in sec:
            c = sj.w.conjugate() + sl.w  # Re > 0 for all sector pairs
            base = (
                sj.log_pref.conjugate()
                + sl.log_pref
                + 0.5 * math.log(2.0 * math.pi)
                - 0.5 * cmath.log(c)
            )
            for sig in (1.0, -1.0):
                for tau in (1.0, -1.0):
                    b = sig * sj.k.conjugate() + tau * sl.k
                    sign = (sj.sign if sig < 0 else 1.0) * (sl.sign if tau < 0 else 1.0)
                    ratio = b / c
                    exponents.append(base + b * b / (2.0 * c))
                    weights.append((sign, 1.0, ratio, 1.0 / c + ratio * ratio))
    exps = np.array(exponents)
    peak = float(np.max(exps.real))
    moments = np.zeros(3, dtype=complex)
    for exponent, (sign, p0, p1, p2) in zip(exps, weights):
        factor = sign * cmath.exp(exponent - peak)
        moments += factor * np.array([p0, p1, p2])
    moments *= math.exp(peak)
    return complex(moments[0]), complex(moments[1]), complex(moments[2])


class QuadratureMoments(NamedTuple):
    mean_x: float
    mean_x2: float
    var_x: float
    mean_p: float
    mean_p2: float
    var_p: float
    uncertainty_product: float


def quadrature_moments(s: PDState) -> QuadratureMoments:
    """First and second moments of both quadratures and their uncertainty product.

    Position moments come from the closed-form Gaussian integrals; momentum
    moments reuse them on the state rotated by -pi/2, which maps the momentum
    quadrature onto position.
    """
    _, mx, mx2 = position_moments(s)
    _, mp, mp2 = position_moments(s.rotated(-math.pi / 2.0))
    mean_x, mean_x2 = mx.real, mx2.real
    mean_p, mean_p2 = mp.real, mp2.real
    var_x = mean_x2 - mean_x * mean_x
    var_p = mean_p2 - mean_p * mean_p
    return QuadratureMoments(
        mean_x=mean_x,
        mean_x2=mean_x2,
        var_x=var_x,
        mean_p=mean_p,
        mean_p2=mean_p2,
        var_p=var_p,
        uncertainty_product=var_x * var_p,
    )


# ---------------------------------------------------------------------------
# overlaps and phase-space functions
# ---------------------------------------------------------------------------


def overlap(a: PDState, b: PDState) -> complex:
    """<a|b> for two states sharing the same sector transformations."""
    if a.sector0 != b.sector0 or a.sector1 != b.sector1:
        raise UnsupportedParametersError(
            "overlap requires identical squeeze parameters on both states"
        )
    alpha, beta = a.beta, b.beta
    return cmath.exp(-0.5 * abs(alpha) ** 2 - 0.5 * abs(beta) ** 2 + alpha.conjugate() * beta)


def coherent_overlap(s: PDState, alpha):
    """<alpha|s> against a coherent state; accepts a scalar or array alpha."""
    al = np.conjugate(np.asarray(alpha, dtype=complex))
    if not np.all(np.isfinite(al)):
        raise ValueError("coherent amplitude must be finite")
    ab2 = abs(s.beta) ** 2
    exponents, coeffs = [], []
    for j in (0, 1):
        p = s.sector(j)
        bog = bogoliubov_coeffs(p)
        mu, nu = bog.mu, bog.nu
        pref = (
            _LOG_HALF
            + 1j * p.lam / 2.0
            - 0.5 * math.log(math.cosh(p.r))
            - 0.5 * (np.abs(al) ** 2 + ab2)
            + nu.conjugate() * s.beta * s.beta / (2.0 * mu)
            - nu * al * al / (2.0 * mu)
        )
        exponents.append(pref + al * s.beta / mu)
        coeffs.append(1.0)
        exponents.append(pref - al * s.beta / mu)
        coeffs.append((-1.0) ** j)
    value = _masked_exp_sum(exponents, coeffs)
    if np.isscalar(alpha) or np.ndim(alpha) == 0:
        return complex(value)
    return value


def q_function(s: PDState, alpha):
    """Husimi function Q(alpha) = |<alpha|s>|^2 / pi; scalar or array alpha."""
    amp = coherent_overlap(s, alpha)
    value = np.abs(amp) ** 2 / math.pi
    if np.isscalar(alpha) or np.ndim(alpha) == 0:
        return float(value)
    return value


@dataclass(frozen=True)
class SectorPairCoeffs:
    """Pair coefficients entering the quadrature-moment and Wigner closed forms."""

    omega: complex
    v_plus: complex
    v_minus: complex
    z_coef: complex
    t_coef: complex
    r_coef: complex
    k_coef: complex
    l_coef: complex


def pair_coeffs(s: PDState, j: int, l: int) -> SectorPairCoeffs:
    """Coefficients for the (j, l) sector pair of the Gaussian-integral forms."""
    bj = bogoliubov_coeffs(s.sector(j))
    bl = bogoliubov_coeffs(s.sector(l))
    mj = bj.mu - bj.nu
    ml_c = bl.mu.conjugate() - bl.nu.conjugate()
    beta = s.beta
    wj = (bj.mu + bj.nu) / mj
    wl_c = (bl.mu.conjugate() + bl.nu.conjugate()) / ml_c
    return SectorPairCoeffs(
        omega=1.0 / (bj.mu * bl.mu.conjugate() - bj.nu * bl.nu.conjugate()),
        v_plus=beta.conjugate() * mj + beta * ml_c,
        v_minus=beta.conjugate() * mj - beta * ml_c,
        z_coef=(mj.conjugate() / mj) * beta * beta / 2.0
        + (ml_c.conjugate() / ml_c) * beta.conjugate() * beta.conjugate() / 2.0,
        t_coef=wj + wl_c,
        r_coef=-wj + wl_c,
        k_coef=_SQRT2 * beta / mj + _SQRT2 * beta.conjugate() / ml_c,
        l_coef=-_SQRT2 * beta / mj + _SQRT2 * beta.conjugate() / ml_c,
    )


def wigner(s: PDState, x, p):
    """Wigner function W(x, p); accepts scalars or broadcastable arrays.

    The closed form is a sixteen-term sum of Gaussians in (x, p); its
    imaginary parts cancel pairwise. A residue above 1e-8 signals a branch or
    transcription fault and raises rather than being silently discarded.
    """
    xs = np.asarray(x, dtype=float)
    ps = np.asarray(p, dtype=float)
    if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ps))):
        raise ValueError("phase-space point must be finite")
    sec = _wave_sectors(s)
    exponents, coeffs = [], []
    for sj in sec:  # ket sector, wavefunction at x + s
        for sl in sec:  # bra sector, conjugated wavefunction at x - s
            t_c = sj.w + sl.w.conjugate()
            r_c = -sj.w + sl.w.conjugate()
            base = (
                sj.log_pref
                + sl.log_pref.conjugate()
                + 0.5 * math.log(2.0 * math.pi)
                - 0.5 * cmath.log(t_c)
                - math.log(math.pi)
                - t_c * xs * xs / 2.0
            )
            for sig in (1.0, -1.0):
                for tau in (1.0, -1.0):
                    shift = sig * sj.k - tau * sl.k.conjugate()
                    slope = sig * sj.k + tau * sl.k.conjugate()
                    sign = (sj.sign if sig < 0 else 1.0) * (sl.sign if tau < 0 else 1.0)
                    d = r_c * xs + shift - 2.0j * ps
                    exponents.append(base + d * d / (2.0 * t_c) + slope * xs)
                    coeffs.append(sign)
    value = _masked_exp_sum(exponents, coeffs)
    residue = float(np.max(np.abs(np.imag(value))))
    if residue > 1e-8:
        raise InternalConsistencyError(
            f"Wigner imaginary residue {residue:.3e} exceeds 1e-8"
        )
    result = np.real(value)
    if np.isscalar(x) and np.isscalar(p):
        return float(result)
    return result
