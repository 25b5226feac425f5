import random

import pytest

from graphdegen import kernels


@pytest.fixture(params=[b.BACKEND for b in kernels.backends()])
def kernel_lane(request):
    """Run a test once per importable kernel backend."""
    for b in kernels.backends():
        if b.BACKEND == request.param:
            return b
    raise RuntimeError("backend vanished")


@pytest.fixture
def rng():
    return random.Random(12345)
