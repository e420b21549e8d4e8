import math

import numpy as np
import pytest

from pdsqueeze.specfun import (
    ScaledComplex,
    eigenfunction_matrix,
    hermite_scaled,
    hermite_scaled_range,
    log_factorial,
    oscillator_eigenfunction,
)

# frozen 60-digit recurrence references
H200_REAL_LOGMAG = 498.8083322834446809423325985105595789
H200_COMPLEX_LOGMAG = 524.3038629051463874241619015926888676
H200_COMPLEX_PHASE = -0.7649982249619015929454959403778727896 + 0.6440323872330799192310404960764837494j


def test_low_order_values():
    assert hermite_scaled(0, 2.7 - 1.1j).reconstruct() == 1.0
    assert hermite_scaled(1, 3.0).reconstruct() == pytest.approx(6.0, rel=1e-15)
    assert hermite_scaled(3, 2.0).reconstruct() == pytest.approx(40.0, rel=1e-14)


def test_high_order_against_extended_precision():
    h = hermite_scaled(200, 1.5)
    assert h.log_magnitude == pytest.approx(H200_REAL_LOGMAG, abs=1e-10)
    assert h.phase == pytest.approx(1.0 + 0.0j, abs=1e-12)

    hc = hermite_scaled(200, 0.8 - 1.3j)
    assert hc.log_magnitude == pytest.approx(H200_COMPLEX_LOGMAG, abs=1e-10)
    assert abs(hc.phase - H200_COMPLEX_PHASE) < 1e-10


def test_scaled_form_reaches_large_order():
    h = hermite_scaled(2000, 0.4 + 2.2j)
    assert math.isfinite(h.log_magnitude)
    assert abs(abs(h.phase) - 1.0) < 1e-12


def test_recurrence_consistency():
    rng = np.random.default_rng(3)
    for _ in range(25):
        n = int(rng.integers(2, 500))
        z = complex(rng.uniform(-50, 50), rng.uniform(-50, 50))
        seq = hermite_scaled_range(n + 1, z)
        peak = max(s.log_magnitude for s in seq[n - 1 : n + 2])
        nxt = math.exp(seq[n + 1].log_magnitude - peak) * seq[n + 1].phase
        mid = math.exp(seq[n].log_magnitude - peak) * seq[n].phase
        prev = math.exp(seq[n - 1].log_magnitude - peak) * seq[n - 1].phase
        assert abs(nxt - (2 * z * mid - 2 * n * prev)) <= 1e-10 * abs(nxt)


def test_parity_is_exact_in_phase():
    rng = np.random.default_rng(4)
    for _ in range(10):
        n = int(rng.integers(1, 300))
        z = complex(rng.uniform(-8, 8), rng.uniform(-8, 8))
        h1 = hermite_scaled(n, z)
        h2 = hermite_scaled(n, -z)
        assert h2.log_magnitude == h1.log_magnitude
        assert h2.phase == (-1) ** n * h1.phase


def test_zero_argument_sentinel():
    assert hermite_scaled(7, 0.0).is_zero
    assert hermite_scaled(7, 0.0).reconstruct() == 0.0
    h6 = hermite_scaled(6, 0.0)
    # H_6(0) = -120
    assert h6.reconstruct() == pytest.approx(-120.0, rel=1e-13)


def test_domain_errors():
    with pytest.raises(ValueError):
        hermite_scaled(-1, 1.0)
    with pytest.raises(ValueError):
        hermite_scaled(3, complex(float("inf"), 0.0))
    with pytest.raises(ValueError):
        oscillator_eigenfunction(2, float("nan"))


def test_log_factorial():
    assert log_factorial(0) == 0.0
    assert log_factorial(1) == 0.0
    assert log_factorial(10) == pytest.approx(math.log(3628800), rel=1e-14)


def test_eigenfunction_values():
    assert oscillator_eigenfunction(0, 0.0) == pytest.approx(math.pi ** -0.25, rel=1e-14)
    assert oscillator_eigenfunction(1, 0.0) == 0.0
    assert oscillator_eigenfunction(0, 50.0) == 0.0  # underflow maps to zero


def test_eigenfunction_parity():
    for n in (0, 1, 4, 9, 30):
        for x in (0.3, 1.7, 4.2):
            assert oscillator_eigenfunction(n, -x) == (-1) ** n * oscillator_eigenfunction(n, x)


def test_eigenfunction_orthonormality_by_quadrature():
    nodes, weights = np.polynomial.legendre.leggauss(1500)
    xs = 20.0 * nodes
    ws = 20.0 * weights
    phi = eigenfunction_matrix(60, xs)
    gram = (phi * ws) @ phi.T
    assert np.max(np.abs(gram - np.eye(61))) < 1e-8


def test_eigenfunction_matrix_matches_scalar():
    xs = np.array([-3.1, -0.4, 0.0, 1.2, 2.9])
    phi = eigenfunction_matrix(25, xs)
    for n in (0, 1, 7, 25):
        for i, x in enumerate(xs):
            assert phi[n, i] == pytest.approx(oscillator_eigenfunction(n, float(x)), abs=1e-14)


def test_scaled_complex_round_trip():
    v = 3.7e-5 - 2.2e-5j
    sc = ScaledComplex.from_complex(v)
    assert sc.reconstruct() == pytest.approx(v, rel=1e-15)
    assert ScaledComplex.from_complex(0).is_zero
