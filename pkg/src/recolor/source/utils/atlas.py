from typing import Iterator

import networkx as nx

from source.graph_core import Graph, build_graph


def from_networkx(g: nx.Graph) -> Graph:
    '''Relabels nodes by sorted order.'''
    index = {node: i for i, node in enumerate(sorted(g.nodes))}
    return build_graph(len(index), [(index[u], index[v]) for u, v in g.edges])


def to_networkx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def atlas_graphs(n_min: int = 1, n_max: int = 7, connected: bool = False) -> Iterator[Graph]:
    '''Every graph on n_min..n_max vertices, one per isomorphism class (n_max <= 7).'''
    if n_max > 7:
        raise ValueError(f'the graph atlas stops at 7 vertices, got n_max={n_max}')
    for g in nx.graph_atlas_g():
        if not n_min <= g.number_of_nodes() <= n_max:
            continue
        if connected and (g.number_of_nodes() == 0 or not nx.is_connected(g)):
            continue
        yield from_networkx(g)


def connected_bipartite_graphs(n: int) -> Iterator[Graph]:
    '''Connected bipartite graphs on n vertices, one per isomorphism class.'''
    buckets: dict[str, list[nx.Graph]] = {}
    for left in range(1, n // 2 + 1):
        pairs = [(u, v) for u in range(left) for v in range(left, n)]
        for mask in range(1 << len(pairs)):
            if bin(mask).count('1') < n - 1:
                continue
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(pair for i, pair in enumerate(pairs) if mask >> i & 1)
            if not nx.is_connected(g):
                continue
            key = nx.weisfeiler_lehman_graph_hash(g)
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(g, h) for h in bucket):
                continue
            bucket.append(g)
            yield from_networkx(g)
