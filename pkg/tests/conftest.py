import random

import pytest

import qslope


@pytest.fixture
def rng():
    return random.Random(20261017)


@pytest.fixture(scope="session")
def catalog():
    return {label: qslope.catalog_get(label) for label in qslope.catalog_list()}


@pytest.fixture
def sweep_config():
    return qslope.EngineConfig(engine=qslope.Engine.SWEEP)


@pytest.fixture
def statesum_config():
    return qslope.EngineConfig(engine=qslope.Engine.STATESUM)
