import networkx as nx
import pytest
from hypothesis import settings

from tokenpowers.fixtures import small_corpus
from tokenpowers.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(G.vertices())
    H.add_edges_from(G.edges)
    return H


@pytest.fixture(scope="session")
def corpus():
    return small_corpus(7, seed=0)


@pytest.fixture(scope="session")
def corpus6():
    return small_corpus(6, seed=0)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
