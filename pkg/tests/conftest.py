import pytest

from kingchain import from_edge_list

T4A_EDGES = [(0, 1), (1, 2), (2, 0), (3, 0), (1, 3), (2, 3)]


def pytest_addoption(parser):
    parser.addoption(
        "--long",
        action="store_true",
        default=False,
        help="run the long exhaustive suites (order 7)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def t4a():
    """Strong 4-tournament whose kings are exactly 0, 1, 2."""
    return from_edge_list(4, T4A_EDGES)


@pytest.fixture
def three_cycle():
    return from_edge_list(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def transitive_triangle():
    return from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
