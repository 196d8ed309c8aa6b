import numpy as np
import pytest

from movers.gas import GasModel
from movers.schemes import SwitchParams


@pytest.fixture(scope="session")
def gas():
    return GasModel()


@pytest.fixture(scope="session")
def sw():
    return SwitchParams()


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)


def random_primitives(rng, n, dim=1, rho_range=(0.05, 10.0),
                      p_range=(0.01, 1500.0), u_range=(-25.0, 25.0)):
    """Batch of valid random primitive states, component-first (2+dim, n)."""
    w = np.empty((2 + dim, n))
    w[0] = rng.uniform(*rho_range, n)
    for k in range(dim):
        w[1 + k] = rng.uniform(*u_range, n)
    w[-1] = rng.uniform(*p_range, n)
    return w
