import pytest

from trimoduli.trigraph import build_graph

_GRAPHS = {}


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False,
                     help="run the a(9) reproduction")
    parser.addoption("--longrun", action="store_true", default=False,
                     help="run the a(10) reproduction (hours)")


def pytest_collection_modifyitems(config, items):
    for item in items:
        for marker in ("extended", "longrun"):
            if marker in item.keywords and not config.getoption(f"--{marker}"):
                item.add_marker(pytest.mark.skip(reason=f"needs --{marker}"))


def _graph_of(n):
    if n not in _GRAPHS:
        _GRAPHS[n] = build_graph(n)
    return _GRAPHS[n]


@pytest.fixture(scope="session")
def graph_of():
    """Memoized T(n) builder shared by the whole session."""
    return _graph_of
