import math

import numpy as np
import pytest

from pdsqueeze import PDState, SectorParams
from pdsqueeze import fock


def random_state(rng, beta_max=3.0, r_max=1.2) -> PDState:
    return PDState(
        beta=rng.uniform(0, beta_max) * np.exp(1j * rng.uniform(-math.pi, math.pi)),
        sector0=SectorParams(
            rng.uniform(0, r_max), rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi)
        ),
        sector1=SectorParams(
            rng.uniform(0, r_max), rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi)
        ),
    )


@pytest.fixture(scope="session")
def oracle_ops_256():
    dim = 256
    a, ad = fock.ladder_matrices(dim)
    x = (a.entries + ad.entries) / math.sqrt(2.0)
    p = 1j * (ad.entries - a.entries) / math.sqrt(2.0)
    return {
        "dim": dim,
        "a": a,
        "ad": ad,
        "n": fock.number_matrix(dim),
        "n2": fock.OperatorMatrix(dim, ad.entries @ ad.entries @ a.entries @ a.entries, "number"),
        "x": fock.OperatorMatrix(dim, x, "number"),
        "x2": fock.OperatorMatrix(dim, x @ x, "number"),
        "p": fock.OperatorMatrix(dim, p, "number"),
        "p2": fock.OperatorMatrix(dim, p @ p, "number"),
    }
