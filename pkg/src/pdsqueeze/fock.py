"""Brute-force oracle on a truncated Fock space.

Every operator of the sector-squeezing construction is built as a dense
matrix and every statistical quantity is computed numerically, providing
ground truth for the closed forms. Conventions:

* matrix exponentials are evaluated at twice the requested dimension and
  cropped, which confines truncation corruption to outside the returned block;
* operator identities are asserted on the interior block (indices below
  3*dim/4) since the top rows and columns carry truncation artifacts;
* phase-space points map to coherent labels via alpha = (x + i p)/sqrt(2),
  and Wigner values are normalized so that the vacuum peaks at 1/pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.sparse import diags
from scipy.sparse.linalg import expm_multiply

from .errors import TruncationError
from .specfun import eigenfunction_matrix
from .states import PDState, SectorParams

DEFAULT_LEAK_TOL = 1e-10


@dataclass(frozen=True)
class FockVector:
    """State vector on a truncated Fock space, with its measured leakage."""

    dim: int
    amplitudes: np.ndarray
    leakage: float = 0.0

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense operator on the truncated space, tagged with its role.

    For unitary roles, `leakage` records the worst interior-column unitarity
    defect. It is small only where the operator's spreading stays inside the
    padded build space (e^{2r} times the occupation well below the dimension);
    state-level norm leakage is the binding accuracy proxy.
    """

    dim: int
    entries: np.ndarray
    role: str
    leakage: float = 0.0


def interior(dim: int) -> slice:
    """Indices on which operator identities are trusted."""
    return slice(0, (3 * dim) // 4)


def ladder_matrices(dim: int) -> tuple[OperatorMatrix, OperatorMatrix]:
    """Annihilation and creation matrices, a|n> = sqrt(n)|n-1>."""
    if dim < 2:
        raise ValueError(f"dimension must be at least 2, got {dim}")
    a = np.zeros((dim, dim), dtype=complex)
    ns = np.arange(1, dim)
    a[ns - 1, ns] = np.sqrt(ns)
    return (
        OperatorMatrix(dim, a, "annihilation"),
        OperatorMatrix(dim, a.conj().T, "creation"),
    )


def number_matrix(dim: int) -> OperatorMatrix:
    return OperatorMatrix(dim, np.diag(np.arange(dim, dtype=complex)), "number")


def projector_and_parity(dim: int) -> tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]:
    """Even/odd projectors and the parity operator P = Pi0 - Pi1."""
    if dim < 2:
        raise ValueError(f"dimension must be at least 2, got {dim}")
    signs = (-1.0) ** np.arange(dim)
    pi0 = np.diag(((1.0 + signs) / 2.0).astype(complex))
    pi1 = np.diag(((1.0 - signs) / 2.0).astype(complex))
    return (
        OperatorMatrix(dim, pi0, "projector_even"),
        OperatorMatrix(dim, pi1, "projector_odd"),
        OperatorMatrix(dim, pi0 - pi1, "parity"),
    )


def su11_generators(dim: int) -> tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]:
    """K0 = (a a^dag + a^dag a)/4, K+ = a^dag^2/2, K- = a^2/2.

    The ladder entries of K+- are evaluated as single square roots of exact
    integer products; forming them as floating matrix products would compound
    rounding past the 1e-12 identity budget already at dimension 128.
    """
    if dim < 4:
        raise ValueError(f"dimension must be at least 4, got {dim}")
    a, ad = ladder_matrices(dim)
    k0 = (a.entries @ ad.entries + ad.entries @ a.entries) / 4.0
    ns = np.arange(2, dim)
    km = np.zeros((dim, dim), dtype=complex)
    km[ns - 2, ns] = np.sqrt(ns * (ns - 1.0)) / 2.0
    kp = km.conj().T.copy()
    return (
        OperatorMatrix(dim, k0, "k0"),
        OperatorMatrix(dim, kp, "k_plus"),
        OperatorMatrix(dim, km, "k_minus"),
    )


def _unitarity_leakage(u: np.ndarray, dim: int) -> float:
    cols = u[:, interior(dim)]
    return float(np.max(np.abs(np.sum(np.abs(cols) ** 2, axis=0) - 1.0)))


def _squeeze_block(dim: int, p: SectorParams) -> np.ndarray:
    """Squeeze matrix built at padded dimension 2*dim and cropped.

    The generator xi K+ - xi* K- couples n to n +/- 2 only, so its exponential
    is evaluated exactly per parity chain: a diagonal phase gauge turns each
    chain into a real symmetric tridiagonal matrix whose spectral
    decomposition gives a unitary to machine precision (better conditioned
    than a Pade exponential of a generator with norm ~ r * dim).
    """
    pad = 2 * dim
    xi = -p.r * np.exp(-1j * p.theta)
    full = np.zeros((pad, pad), dtype=complex)
    for parity in (0, 1):
        ns = np.arange(parity, pad, 2)
        m = ns.size
        if m == 1:
            block = np.array([[1.0 + 0.0j]])
        else:
            # generator entries (xi/2) sqrt((n+1)(n+2)) along the chain
            coup = 0.5 * xi * np.sqrt((ns[:-1] + 1.0) * (ns[:-1] + 2.0))
            mags = np.abs(coup)
            # i * coupling phases, gauged onto a diagonal unitary
            phases = np.where(mags > 0.0, 1j * coup / np.where(mags > 0.0, mags, 1.0), 1.0)
            gauge = np.ones(m, dtype=complex)
            for k in range(m - 1):
                gauge[k + 1] = gauge[k] / phases[k]
            w, q = eigh_tridiagonal(np.zeros(m), mags)
            core = (q * np.exp(-1j * w)) @ q.T
            block = np.conj(gauge)[:, None] * core * gauge[None, :]
        full[np.ix_(ns, ns)] = block
    rot = np.exp(1j * p.lam * (np.arange(pad) + 0.5))
    full = full * rot[None, :]
    return full[:dim, :dim]


def squeeze_matrix(
    dim: int, p: SectorParams, leak_tol: float | None = None
) -> OperatorMatrix:
    """Ordinary squeezing operator exp(xi K+ - xi* K-) exp(2i lam K0).

    The recorded leakage is the interior-column unitarity defect; pass
    `leak_tol` to turn it into a hard gate (only meaningful while
    e^{2r} * 3 dim/4 stays well inside the padded build space).
    """
    if dim < 4:
        raise ValueError(f"dimension must be at least 4, got {dim}")
    u = _squeeze_block(dim, p)
    leak = _unitarity_leakage(u, dim)
    if leak_tol is not None and leak > leak_tol:
        raise TruncationError(
            f"squeeze matrix at dim {dim} is not unitary on the interior block", leak
        )
    return OperatorMatrix(dim, u, "squeeze", leak)


def pd_squeeze_matrix(
    dim: int,
    s0: SectorParams,
    s1: SectorParams,
    leak_tol: float | None = None,
) -> OperatorMatrix:
    """Parity-dependent squeezing operator S(0) Pi0 + S(1) Pi1."""
    if dim < 4:
        raise ValueError(f"dimension must be at least 4, got {dim}")
    u0 = _squeeze_block(dim, s0)
    u1 = _squeeze_block(dim, s1)
    pi0, pi1, _ = projector_and_parity(dim)
    u = u0 @ pi0.entries + u1 @ pi1.entries
    leak = _unitarity_leakage(u, dim)
    if leak_tol is not None and leak > leak_tol:
        raise TruncationError(
            f"sector squeeze matrix at dim {dim} is not unitary on the interior block", leak
        )
    return OperatorMatrix(dim, u, "pd_squeeze", leak)


def coherent_vector(dim: int, beta: complex, leak_tol: float = 1e-12) -> FockVector:
    """Coherent state amplitudes e^{-|beta|^2/2} beta^n / sqrt(n!)."""
    if dim < 2:
        raise ValueError(f"dimension must be at least 2, got {dim}")
    beta = complex(beta)
    amp = np.zeros(dim, dtype=complex)
    if beta == 0:
        amp[0] = 1.0
    else:
        ns = np.arange(dim)
        lgam = np.array([math.lgamma(n + 1) for n in range(dim)])
        log_amp = -0.5 * abs(beta) ** 2 + ns * np.log(beta) - 0.5 * lgam
        with np.errstate(under="ignore"):
            amp = np.exp(log_amp)
    leak = max(0.0, 1.0 - float(np.sum(np.abs(amp) ** 2)))
    if leak > leak_tol:
        raise TruncationError(
            f"coherent state |beta|={abs(beta):.3f} does not fit in dim {dim}", leak
        )
    return FockVector(dim, amp, leak)


def prepare_state(dim: int, s: PDState, leak_tol: float = DEFAULT_LEAK_TOL) -> FockVector:
    """Sector-squeezed coherent state as a truncated Fock vector.

    Truncation is gated on the prepared vector's norm defect, the accuracy
    proxy for the whole construction.
    """
    coh = coherent_vector(dim, s.beta, leak_tol=min(leak_tol, 1e-12))
    u = pd_squeeze_matrix(dim, s.sector0, s.sector1)
    amp = u.entries @ coh.amplitudes
    leak = max(0.0, 1.0 - float(np.sum(np.abs(amp) ** 2)))
    if leak > leak_tol:
        raise TruncationError(f"prepared state does not fit in dim {dim}", leak)
    return FockVector(dim, amp, leak)


def expectation(op: OperatorMatrix, v: FockVector) -> complex:
    """<v|op|v>."""
    if op.dim != v.dim:
        raise ValueError(f"dimension mismatch: operator {op.dim}, vector {v.dim}")
    return complex(np.vdot(v.amplitudes, op.entries @ v.amplitudes))


@dataclass(frozen=True)
class QuasiparticleReport:
    """Numerical checks of the dressed annihilation operator b = U a U^dag."""

    dim: int
    commutator_residual: float
    eigen_residual: float
    var_xb: float
    var_pb: float


def quasiparticle_checks(
    dim: int, s: PDState, leak_tol: float = DEFAULT_LEAK_TOL
) -> QuasiparticleReport:
    """Eigen-relation and dressed-quadrature variances of the prepared state."""
    v = prepare_state(dim, s, leak_tol=leak_tol)
    u = pd_squeeze_matrix(dim, s.sector0, s.sector1).entries
    a, _ = ladder_matrices(dim)
    b = u @ a.entries @ u.conj().T
    bd = b.conj().T
    inner = interior(dim)
    comm = (b @ bd - bd @ b - np.eye(dim))[inner, inner]
    commutator_residual = float(np.max(np.abs(comm)))
    eigen_residual = float(np.linalg.norm(b @ v.amplitudes - s.beta * v.amplitudes))
    xb = OperatorMatrix(dim, (b + bd) / math.sqrt(2.0), "quasiparticle")
    pb = OperatorMatrix(dim, 1j * (bd - b) / math.sqrt(2.0), "quasiparticle")
    xb2 = OperatorMatrix(dim, xb.entries @ xb.entries, "quasiparticle")
    pb2 = OperatorMatrix(dim, pb.entries @ pb.entries, "quasiparticle")
    var_xb = expectation(xb2, v).real - expectation(xb, v).real ** 2
    var_pb = expectation(pb2, v).real - expectation(pb, v).real ** 2
    return QuasiparticleReport(
        dim=dim,
        commutator_residual=commutator_residual,
        eigen_residual=eigen_residual,
        var_xb=var_xb,
        var_pb=var_pb,
    )


def wigner_displaced_parity(v: FockVector, alpha: complex, leak_tol: float = 1e-8) -> float:
    """W at the phase-space point alpha = (x + i p)/sqrt(2) via displaced parity.

    The inverse displacement is applied inside a doubled space, where it is
    exactly unitary; occupation of the top quarter of that space is the
    corruption proxy and is gated. Normalized so that integral W dx dp = 1
    (vacuum value 1/pi at the origin).
    """
    alpha = complex(alpha)
    pad = 2 * v.dim
    padded = np.zeros(pad, dtype=complex)
    padded[: v.dim] = v.amplitudes
    ns = np.sqrt(np.arange(1, pad))
    # generator of D(alpha)^dag = D(-alpha): -alpha a^dag + conj(alpha) a
    gen = diags([np.conj(alpha) * ns, -alpha * ns], offsets=[1, -1], format="csc")
    moved = expm_multiply(gen, padded)
    guard = float(np.sum(np.abs(moved[pad - pad // 4 :]) ** 2))
    if guard > leak_tol:
        raise TruncationError(
            f"displacement by |alpha|={abs(alpha):.3f} escapes the padded space", guard
        )
    signs = (-1.0) ** np.arange(pad)
    return float(np.sum(signs * np.abs(moved) ** 2) / math.pi)


def wavefunction_from_vector(v: FockVector, x):
    """Position wavefunction sum_n c_n phi_n(x); scalar or array x."""
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    phi = eigenfunction_matrix(v.dim - 1, xs)
    values = v.amplitudes @ phi
    if np.isscalar(x) or np.ndim(x) == 0:
        return complex(values[0])
    return values


def operator_identity_report(dim: int) -> dict[str, float]:
    """Max-abs interior residuals of the projector, parity, and algebra identities."""
    a, ad = ladder_matrices(dim)
    pi0, pi1, par = projector_and_parity(dim)
    k0, kp, km = su11_generators(dim)
    eye = np.eye(dim)
    inner = interior(dim)

    def max_abs(mat: np.ndarray) -> float:
        return float(np.max(np.abs(mat[inner, inner])))

    comm_kk = km.entries @ kp.entries - kp.entries @ km.entries - 2.0 * k0.entries
    comm_0p = k0.entries @ kp.entries - kp.entries @ k0.entries - kp.entries
    comm_0m = k0.entries @ km.entries - km.entries @ k0.entries + km.entries
    casimir = (
        k0.entries @ k0.entries
        - (kp.entries @ km.entries + km.entries @ kp.entries) / 2.0
        + (3.0 / 16.0) * eye
    )
    report = {
        "projector_sum": max_abs(pi0.entries + pi1.entries - eye),
        "projector_idempotent": max(
            max_abs(pi0.entries @ pi0.entries - pi0.entries),
            max_abs(pi1.entries @ pi1.entries - pi1.entries),
        ),
        "projector_orthogonal": max_abs(pi0.entries @ pi1.entries),
        "parity_square": max_abs(par.entries @ par.entries - eye),
        "parity_anticommute": max_abs(par.entries @ a.entries + a.entries @ par.entries),
        "su11_commutator": max_abs(comm_kk),
        "su11_raising": max(max_abs(comm_0p), max_abs(comm_0m)),
        "casimir": max_abs(casimir),
    }
    sq = squeeze_matrix(dim, SectorParams(r=0.4, theta=0.7, lam=-0.3))
    report["squeeze_projector_commute"] = max(
        max_abs(sq.entries @ pi0.entries - pi0.entries @ sq.entries),
        max_abs(sq.entries @ pi1.entries - pi1.entries @ sq.entries),
    )
    return report
