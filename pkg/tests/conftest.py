import numpy as np
import pytest

from spinbath import _kernels


@pytest.fixture(scope="session", autouse=True)
def _compiled_kernels():
    # compile the hot kernels once up front so individual tests time only
    # their own work
    _kernels.warmup()


@pytest.fixture
def rng():
    return np.random.default_rng(20260815)
