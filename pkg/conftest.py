"""Shared fixtures; puts the repository root on sys.path like the scripts do."""
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import EXAMPLE_SIGMA1  # noqa: E402
from model import zeta_model  # noqa: E402


@pytest.fixture(scope="session")
def zeta04():
    return zeta_model(EXAMPLE_SIGMA1)


@pytest.fixture(scope="session")
def zeta0():
    return zeta_model(0.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
