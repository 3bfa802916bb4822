import itertools

import networkx as nx
import pytest

from source.graph_core import Graph, catalog
from source.utils.atlas import to_networkx


@pytest.fixture
def C6() -> Graph:
    return catalog('C6')


@pytest.fixture
def P4() -> Graph:
    return catalog('P4')


@pytest.fixture
def graph_F() -> Graph:
    return catalog('graph_F')


@pytest.fixture
def prism_star() -> Graph:
    return catalog('prism3_star')


def nx_reconfiguration_graph(G: Graph, ell: int) -> nx.Graph:
    '''R_ell(G) built the slow way, as an independent check.'''
    g = to_networkx(G)
    states = {
        colors for colors in itertools.product(range(1, ell + 1), repeat=G.n)
        if all(colors[u] != colors[v] for u, v in g.edges)
    }
    R = nx.Graph()
    R.add_nodes_from(states)
    for a in states:
        for v in range(G.n):
            for c in range(a[v] + 1, ell + 1):
                b = a[:v] + (c,) + a[v + 1:]
                if b in states:
                    R.add_edge(a, b)
    return R
