import os
import tempfile

# config.py creates its directories at import; keep them out of the user's home
os.environ.setdefault("METRICDIM_HOME", tempfile.mkdtemp(prefix="metricdim-test-"))

import pytest  # noqa: E402

from src.catalog import catalog_graph  # noqa: E402
from src.graph import Graph  # noqa: E402


@pytest.fixture
def triangle() -> Graph:
    return catalog_graph("cycle", [3])


@pytest.fixture
def p11() -> Graph:
    return catalog_graph("path", [11])


@pytest.fixture
def p2() -> Graph:
    return catalog_graph("path", [2])


@pytest.fixture
def c4() -> Graph:
    return catalog_graph("cycle", [4])
