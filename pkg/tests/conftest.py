# content of conftest.py

import json
import os
from pathlib import Path

import pytest

RESOURCES_DIR = Path(__file__).parent / "resources"


def pytest_sessionstart(session):
    """
    Called after the Session object has been created and
    before performing collection and entering the run test loop.
    """
    os.environ.setdefault("LOG_LEVEL", "WARNING")


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow tests"
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: exhaustive oracle sweeps and long scaling runs"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def pytest_generate_tests(metafunc):
    option_value = metafunc.config.option.runslow
    if "runslow" in metafunc.fixturenames and option_value is not None:
        metafunc.parametrize("runslow", [option_value])


@pytest.fixture(scope="session")
def worked_examples():
    with open(RESOURCES_DIR / "worked_examples.json", encoding="utf-8") as f:
        return json.load(f)

