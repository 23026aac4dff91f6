import importlib

import numpy as np
import pytest

from ga_grover import _pykernels

try:
    _compiled = importlib.import_module("ga_grover._kernels")
except ImportError:
    _compiled = None

BACKENDS = [_pykernels] + ([_compiled] if _compiled is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda k: k.BACKEND)
def kernels(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)
