import os

import pytest

RUN_SLOW = os.environ.get("FULLGRAPH_RUN_SLOW", "") not in ("", "0")


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: multi-minute searches; run with FULLGRAPH_RUN_SLOW=1"
    )


def pytest_collection_modifyitems(config, items):
    if RUN_SLOW:
        return
    skip = pytest.mark.skip(reason="set FULLGRAPH_RUN_SLOW=1 to run the long suite")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
