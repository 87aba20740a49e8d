import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from soclelab.field import GF, QQ

settings.register_profile(
    "soclelab", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("soclelab")


@pytest.fixture
def F17():
    return GF(17)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=[QQ, GF(2), GF(17), GF(1_048_583)], ids=["QQ", "GF2", "GF17", "GFbig"])
def any_field(request):
    return request.param
