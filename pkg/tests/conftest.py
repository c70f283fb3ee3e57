import os
import random

import pytest
from hypothesis import HealthCheck, settings

from autoseq.field import make_field

# Documented default; `pytest --seed N` or AUTOSEQ_SEED=N overrides it.
DEFAULT_SEED = 2024

settings.register_profile(
    "autoseq",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("autoseq")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=None, help=f"seed for randomized tests (default {DEFAULT_SEED})")


def resolve_seed(config) -> int:
    env = os.environ.get("AUTOSEQ_SEED")
    if env:
        return int(env)
    opt = config.getoption("--seed")
    return DEFAULT_SEED if opt is None else opt


def pytest_report_header(config):
    return f"autoseq seed: {resolve_seed(config)}"


@pytest.fixture(scope="session")
def seed(request) -> int:
    return resolve_seed(request.config)


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F4():
    return make_field(2, 2, [1, 1, 1])


@pytest.fixture(scope="session")
def F5():
    return make_field(5)


@pytest.fixture(scope="session")
def w(F4):
    """omega, with omega^2 = omega + 1."""
    return F4("0,1")
