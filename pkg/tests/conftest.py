import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_addoption(parser):
    parser.addoption("--longrun", action="store_true", default=False,
                     help="run multi-day searches")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--longrun"):
        return
    skip = pytest.mark.skip(reason="needs --longrun")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)
