import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import helpers  # noqa: E402


@pytest.fixture(scope="session")
def connected7():
    """Connected graphs with up to 7 vertices, one per isomorphism class."""
    return helpers.connected_graphs_upto(7)


@pytest.fixture(scope="session")
def connected6():
    return helpers.connected_graphs_upto(6)


@pytest.fixture(scope="session")
def all6():
    """All graphs with up to 6 vertices, one per isomorphism class."""
    return helpers.all_graphs_upto(6)
