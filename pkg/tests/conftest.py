from __future__ import annotations

import pytest

from gupblab.scenarios import ScenarioConfig, load_family


@pytest.fixture(scope="session")
def config() -> ScenarioConfig:
    return ScenarioConfig(seed=0, workers=2)


@pytest.fixture(scope="session")
def quartic13_connected(config):
    graphs, _ = load_family(13, 4, "connected", config)
    return graphs


@pytest.fixture(scope="session")
def quartic14_connected(config):
    graphs, _ = load_family(14, 4, "connected", config)
    return graphs


@pytest.fixture(scope="session")
def cubic14_connected(config):
    graphs, _ = load_family(14, 3, "connected", config)
    return graphs
