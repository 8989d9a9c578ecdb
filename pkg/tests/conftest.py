import os
import sys

import numpy as np
import pytest

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
os.environ.setdefault("ALPHADIV_LOG_TO_FILE", "False")

from app.core.density.sample import Sample
from app.core.divergence.alpha_divergence import DivergenceOrder
from app.core.divergence.models import GaussianModel


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: Monte Carlo acceptance runs (minutes)")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def half():
    return DivergenceOrder(alpha=0.5)


@pytest.fixture
def std_normal():
    return GaussianModel(mean=0.0, variance=1.0)


@pytest.fixture
def normal_var2():
    return GaussianModel(mean=0.0, variance=2.0)


@pytest.fixture
def normal_sample(rng):
    return Sample(rng.normal(0.0, 1.0, size=500), seed=20240601, dgp="N(0,1)")


@pytest.fixture(autouse=True)
def _clear_seed_env(monkeypatch):
    monkeypatch.delenv("ALPHADIV_SEED", raising=False)
