import functools
import itertools

import networkx as nx
import numpy as np
import pytest

from source.errors import InvalidGraphError
from source.graph_core import (
    Graph,
    bipartition,
    build_graph,
    catalog,
    catalog_entry,
    catalog_names,
    clique_number,
    co_components,
    combine,
    components,
    contains_induced,
    cycle_order,
    dominated_pairs,
    find_dominated_pair,
    find_isomorphism,
    find_tight_clique_cutset,
    is_bipartite,
    is_complete_multipartite,
    is_connected,
    is_family_free,
    is_isomorphic,
    is_path_graph,
    join_all,
    recognize_kll_minus_matching,
    resolve_name,
)
from source.utils.atlas import atlas_graphs, to_networkx


def test_build_graph_rejects_bad_edges():
    with pytest.raises(InvalidGraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(InvalidGraphError):
        build_graph(3, [(1, 1)])


def test_basic_queries():
    G = catalog('paw')
    assert (G.n, G.m) == (4, 4)
    assert G.degrees() == [3, 2, 2, 1]
    assert G.has_edge(0, 3) and not G.has_edge(1, 3)
    assert G.is_independent([1, 3])
    assert not catalog('K4').is_independent([0, 1])
    assert build_graph(0, []).is_complete()


def test_adjacency_matrix_round_trip():
    G = catalog('house')
    matrix = G.adjacency_matrix()
    assert np.array_equal(matrix, matrix.T)
    assert Graph.from_adjacency_matrix(matrix) == G


def test_induced_subgraph_relabels_by_rank():
    G = catalog('C5')
    H = G.induced_subgraph([4, 0, 1])
    assert H.edges() == [(0, 1), (0, 2)]
    assert G.remove_vertex(2).edges() == [(0, 1), (0, 3), (2, 3)]


@pytest.mark.parametrize('name, n, m', [
    ('P7', 7, 6),
    ('C6', 6, 6),
    ('K4', 4, 6),
    ('K3,3', 6, 9),
    ('4K1', 4, 0),
    ('co-diamond', 4, 1),
    ('graph_F', 8, 12),
    ('prism3', 6, 9),
    ('prism3_star', 9, 18),
    ('frozen_gadget', 16, 100),
])
def test_catalog_sizes(name, n, m):
    G = catalog(name)
    assert (G.n, G.m) == (n, m)


def test_catalog_parameters():
    assert catalog('cycle', 5) == catalog('C5')
    assert catalog('complete_multipartite', 2, 2, 2).m == 12
    assert resolve_name('K3,3') == ('complete_bipartite', (3, 3))
    assert {'graph_F', 'prism3_star', 'k_ll_minus_matching'} <= set(catalog_names())
    with pytest.raises(ValueError, match='is not supported'):
        catalog('no-such-graph')


def test_catalog_complements():
    pairs = [('co-diamond', 'diamond'), ('co-claw', 'claw'), ('co-banner', 'banner'),
             ('co-fork', 'fork'), ('P3+P1', 'paw'), ('4K1', 'K4')]
    for name, other in pairs:
        assert is_isomorphic(combine('complement', catalog(name)), catalog(other)), name


def test_named_graphs_match_networkx():
    assert nx.is_isomorphic(to_networkx(catalog('prism3')), nx.circular_ladder_graph(3))
    assert nx.is_isomorphic(to_networkx(catalog('C6')), nx.cycle_graph(6))


def test_graph_F_is_cubic_triangle_free():
    G = catalog('graph_F')
    assert set(G.degrees()) == {3}
    assert is_family_free(G, ['triangle', '4K1'])


def test_frozen_gadget_entry_carries_colorings():
    entry = catalog_entry('frozen_gadget')
    assert set(entry.colorings) == {'proper7', 'frozen8'}
    assert catalog('figure4_graph') == entry.graph
    assert entry.label(3) == '3'
    assert catalog_entry('graph_F').label(0) == 'z'


def test_combine_and_join_all():
    K2 = catalog('K2')
    assert combine('disjoint_union', K2, K2) == catalog('2K2')
    assert is_isomorphic(combine('join', K2, K2), catalog('K4'))
    assert is_isomorphic(join_all([catalog('2K1')] * 3), catalog('complete_multipartite', 2, 2, 2))
    with pytest.raises(ValueError):
        combine('product', K2, K2)


def test_components_and_co_components():
    G = combine('disjoint_union', catalog('P3'), catalog('K2'))
    assert components(G) == [(0, 1, 2), (3, 4)]
    assert not is_connected(G)
    assert co_components(catalog('C4')) == [(0, 2), (1, 3)]
    assert len(co_components(catalog('P4'))) == 1


def test_bipartition_puts_smallest_vertex_first():
    assert bipartition(catalog('C6')) == ((0, 2, 4), (1, 3, 5))
    assert bipartition(catalog('C5')) is None
    assert is_bipartite(catalog('K3,3')) and not is_bipartite(catalog('C5'))


def test_cycle_and_path_queries():
    assert cycle_order(catalog('C5')) == [0, 1, 2, 3, 4]
    assert cycle_order(combine('disjoint_union', catalog('C3'), catalog('C3'))) is None
    assert is_path_graph(catalog('P7'))
    assert not is_path_graph(catalog('C4'))


def test_dominated_pairs():
    P4 = catalog('P4')
    assert find_dominated_pair(P4) == (0, 2)
    assert set(dominated_pairs(P4)) == {(0, 2), (3, 1)}
    assert find_dominated_pair(catalog('C5')) is None


def test_cliques():
    assert clique_number(catalog('frozen_gadget')) >= 4
    assert clique_number(catalog('C5')) == 2
    assert clique_number(catalog('K4')) == 4


def test_tight_clique_cutset():
    found = find_tight_clique_cutset(catalog('paw'))
    assert found is not None
    clique, block = found
    assert clique == (0,)
    assert set(block) <= {1, 2, 3}
    assert find_tight_clique_cutset(catalog('C5')) is None


def test_complete_multipartite():
    assert is_complete_multipartite(catalog('complete_multipartite', 1, 2, 3))
    assert not is_complete_multipartite(catalog('P4'))


@pytest.mark.parametrize('ell', [1, 2, 3, 4, 5])
def test_recognize_kll_minus_matching(ell):
    assert recognize_kll_minus_matching(catalog('k_ll_minus_matching', ell)) == ell


def test_recognize_kll_minus_matching_examples():
    assert recognize_kll_minus_matching(catalog('C6')) == 3
    assert recognize_kll_minus_matching(catalog('P4')) is None
    assert recognize_kll_minus_matching(catalog('C8')) is None


def test_contains_induced_returns_embedding():
    G = catalog('C6')
    embedding = contains_induced(G, catalog('P4'))
    assert embedding is not None
    a, b, c, d = embedding.mapping
    assert G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(c, d)
    assert not G.has_edge(a, c) and not G.has_edge(b, d) and not G.has_edge(a, d)
    assert contains_induced(G, catalog('triangle')) is None


def test_paw_contains_itself_with_identity():
    paw = catalog('paw')
    assert contains_induced(paw, paw).mapping == (0, 1, 2, 3)


def test_is_family_free_reports_first_pattern():
    check = is_family_free(catalog('C5'), ['triangle', 'P4', 'claw'])
    assert not check
    assert check.pattern == 'P4'
    assert is_family_free(catalog('C5'), ['triangle', 'claw'])


def test_find_isomorphism_against_networkx():
    G = catalog('prism3')
    relabel = [3, 5, 0, 2, 4, 1]
    H = build_graph(6, [(relabel[u], relabel[v]) for u, v in G.edges()])
    embedding = find_isomorphism(H, G)
    assert embedding is not None
    assert all(H.has_edge(embedding.mapping[u], embedding.mapping[v]) for u, v in G.edges())
    assert find_isomorphism(catalog('C6'), catalog('prism3')) is None
    assert is_isomorphic(catalog('K3,3'), catalog('complete_bipartite', 3, 3))


SMALL_PATTERNS = [
    'K1', 'K2', 'P3', 'triangle', '4K1', 'K4', 'C4', '2K2', 'P4', 'P3+P1', 'claw', 'co-claw', 'diamond',
    'co-diamond', 'paw', 'P5', 'C5', 'house', 'banner', 'co-banner', 'fork', 'co-fork',
]


@functools.cache
def _small_graphs() -> tuple[tuple[Graph, nx.Graph], ...]:
    return tuple((G, to_networkx(G)) for G in atlas_graphs(1, 7))


def _naive_contains(g: nx.Graph, h: nx.Graph) -> bool:
    return any(
        nx.is_isomorphic(g.subgraph(subset), h)
        for subset in itertools.combinations(g.nodes, h.number_of_nodes())
        if nx.faster_could_be_isomorphic(g.subgraph(subset), h)
    )


@pytest.mark.parametrize('name', SMALL_PATTERNS)
def test_contains_induced_agrees_with_subset_search(name):
    H = catalog(name)
    h = to_networkx(H)
    for G, g in _small_graphs():
        embedding = contains_induced(G, H)
        assert (embedding is not None) == _naive_contains(g, h), (name, G.edges())
        if embedding is not None:
            image = embedding.mapping
            assert len(set(image)) == H.n
            for p, q in itertools.combinations(range(H.n), 2):
                assert H.has_edge(p, q) == G.has_edge(image[p], image[q])
