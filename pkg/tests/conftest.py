import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.census.census import Census

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("acceptance", max_examples=10000, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def census4():
    return Census(4)


@pytest.fixture(scope="session")
def census5():
    return Census(5, jobs=int(os.environ.get("MIXED_DGS_JOBS", "1")))
