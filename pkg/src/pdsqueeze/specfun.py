"""Numerically stable special functions backing the closed-form state formulas.

Hermite polynomials of complex argument are carried in a scaled form
(log-magnitude plus unit-modulus phase): naive evaluation overflows double
precision near n ~ 150 already for moderate arguments, while photon numbers
in the hundreds are routine here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

LOG_ZERO = float("-inf")

_QUARTER_LOG_PI = 0.25 * math.log(math.pi)
_LOG_2 = math.log(2.0)


@dataclass(frozen=True)
class ScaledComplex:
    """Complex value stored as exp(log_magnitude) * phase with |phase| = 1.

    An exact zero is flagged by log_magnitude = -inf (phase fixed to 1), so
    that downstream products can treat it as an absorbing zero.
    """

    log_magnitude: float
    phase: complex

    @classmethod
    def from_complex(cls, value: complex) -> "ScaledComplex":
        value = complex(value)
        if value == 0:
            return cls(LOG_ZERO, 1.0 + 0.0j)
        mag = abs(value)
        return cls(math.log(mag), value / mag)

    @property
    def is_zero(self) -> bool:
        return self.log_magnitude == LOG_ZERO

    def reconstruct(self) -> complex:
        """Return the plain complex value; raises OverflowError out of double range."""
        if self.is_zero:
            return 0.0 + 0.0j
        return math.exp(self.log_magnitude) * self.phase


def _require_finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"argument must be finite, got {z!r}")
    return z


def _require_index(n: int) -> int:
    if n != int(n) or n < 0:
        raise ValueError(f"order must be a nonnegative integer, got {n!r}")
    return int(n)


def hermite_scaled_range(n_max: int, z: complex) -> list[ScaledComplex]:
    """All Hermite values H_0(z) .. H_n_max(z) from one pass of the recurrence.

    The running pair is renormalized every step and the log-magnitude
    accumulated separately, which keeps orders of a few thousand representable
    for any finite argument.
    """
    n_max = _require_index(n_max)
    z = _require_finite(z)
    out = [ScaledComplex(0.0, 1.0 + 0.0j)]
    if n_max == 0:
        return out
    log_scale = 0.0
    h_prev = 1.0 + 0.0j
    h_curr = 2.0 * z
    out.append(_pack(h_curr, log_scale))
    for k in range(1, n_max):
        h_next = 2.0 * z * h_curr - 2.0 * k * h_prev
        mag = abs(h_next)
        if mag > 0.0:
            h_prev = h_curr / mag
            h_curr = h_next / mag
            log_scale += math.log(mag)
        else:
            # a genuine zero of H_{k+1}; keep the scale so the recurrence continues
            h_prev = h_curr
            h_curr = 0.0 + 0.0j
        out.append(_pack(h_curr, log_scale))
    return out


def _pack(h: complex, log_scale: float) -> ScaledComplex:
    if h == 0:
        return ScaledComplex(LOG_ZERO, 1.0 + 0.0j)
    mag = abs(h)
    return ScaledComplex(log_scale + math.log(mag), h / mag)


def hermite_scaled(n: int, z: complex) -> ScaledComplex:
    """H_n(z) for complex z in overflow-safe scaled form."""
    n = _require_index(n)
    z = _require_finite(z)
    if n == 0:
        return ScaledComplex(0.0, 1.0 + 0.0j)
    log_scale = 0.0
    h_prev = 1.0 + 0.0j
    h_curr = 2.0 * z
    for k in range(1, n):
        h_next = 2.0 * z * h_curr - 2.0 * k * h_prev
        mag = abs(h_next)
        if mag > 0.0:
            h_prev = h_curr / mag
            h_curr = h_next / mag
            log_scale += math.log(mag)
        else:
            h_prev = h_curr
            h_curr = 0.0 + 0.0j
    return _pack(h_curr, log_scale)


def log_factorial(n: int) -> float:
    """ln(n!) via the log-gamma function."""
    n = _require_index(n)
    return math.lgamma(n + 1)


def oscillator_eigenfunction(n: int, x: float) -> float:
    """Value of the n-th normalized harmonic-oscillator eigenfunction at x.

    phi_n(x) = pi^{-1/4} (2^n n!)^{-1/2} H_n(x) exp(-x^2/2); underflows return 0.
    """
    n = _require_index(n)
    if not math.isfinite(x):
        raise ValueError(f"position must be finite, got {x!r}")
    h = hermite_scaled(n, complex(x))
    if h.is_zero:
        return 0.0
    log_phi = (
        h.log_magnitude
        - 0.5 * (n * _LOG_2 + math.lgamma(n + 1))
        - _QUARTER_LOG_PI
        - 0.5 * x * x
    )
    if log_phi < -745.0:
        return 0.0
    return h.phase.real * math.exp(log_phi)


def eigenfunction_matrix(n_max: int, xs: np.ndarray) -> np.ndarray:
    """Matrix phi[n, i] of oscillator eigenfunctions n = 0..n_max at points xs.

    Vectorized over the sample points; used for reconstructing wavefunctions
    from Fock-basis amplitudes.
    """
    n_max = _require_index(n_max)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if not np.all(np.isfinite(xs)):
        raise ValueError("sample points must be finite")
    out = np.empty((n_max + 1, xs.size))
    base = -_QUARTER_LOG_PI - 0.5 * xs * xs
    with np.errstate(under="ignore"):
        out[0] = np.exp(base)
        if n_max == 0:
            return out
        log_scale = np.zeros_like(xs)
        h_prev = np.ones_like(xs)
        h_curr = 2.0 * xs
        out[1] = h_curr * np.exp(base - 0.5 * (_LOG_2 + math.lgamma(2)))
        for k in range(1, n_max):
            h_next = 2.0 * xs * h_curr - 2.0 * k * h_prev
            mag = np.abs(h_next)
            scale = np.where(mag > 0.0, mag, 1.0)
            h_prev = h_curr / scale
            h_curr = h_next / scale
            log_scale = log_scale + np.log(scale)
            log_norm = -0.5 * ((k + 1) * _LOG_2 + math.lgamma(k + 2))
            out[k + 1] = h_curr * np.exp(base + log_scale + log_norm)
    return out
