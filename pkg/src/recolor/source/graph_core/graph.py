from typing import Iterable, Optional
from dataclasses import dataclass

import numpy as np

from source.errors import InvalidGraphError


@dataclass(frozen=True)
class Graph:
    '''
    Simple undirected graph on vertices 0..n-1.

    Instances are immutable; adjacency is stored as one frozenset per vertex
    and is validated to be loop-free and symmetric on construction.
    '''
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f'vertex count must be non-negative, got {self.n}')
        if len(self.adj) != self.n:
            raise InvalidGraphError(f'adjacency has {len(self.adj)} rows for {self.n} vertices')
        for v, neighbors in enumerate(self.adj):
            if v in neighbors:
                raise InvalidGraphError(f'self-loop at vertex {v}')
            for u in neighbors:
                if not 0 <= u < self.n:
                    raise InvalidGraphError(f'neighbor {u} of vertex {v} is out of range')
                if v not in self.adj[u]:
                    raise InvalidGraphError(f'adjacency is not symmetric for ({v}, {u})')

    @property
    def m(self) -> int:
        return sum(len(neighbors) for neighbors in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(neighbors) for neighbors in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_complete(self) -> bool:
        return all(len(neighbors) == self.n - 1 for neighbors in self.adj)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vertices = list(vertices)
        return all(self.adj[u].isdisjoint(vertices) for u in vertices)

    def induced_subgraph(self, vertices: Iterable[int]) -> 'Graph':
        # vertices are relabelled by their rank in sorted order
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(frozenset(index[u] for u in self.adj[v] if u in index) for v in keep)
        return Graph(len(keep), adj)

    def remove_vertex(self, v: int) -> 'Graph':
        return self.induced_subgraph(u for u in range(self.n) if u != v)

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            matrix[u, v] = 1
            matrix[v, u] = 1
        return matrix

    @classmethod
    def from_adjacency_matrix(cls, matrix: np.ndarray) -> 'Graph':
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidGraphError(f'adjacency matrix must be square, got shape {matrix.shape}')
        if np.any(np.diag(matrix)):
            raise InvalidGraphError('adjacency matrix has a non-zero diagonal')
        n = matrix.shape[0]
        adj = tuple(frozenset(np.flatnonzero(matrix[v]).tolist()) for v in range(n))
        return cls(n, adj)

    def __repr__(self) -> str:
        return f'Graph(n={self.n}, m={self.m})'


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InvalidGraphError(f'vertex count must be non-negative, got {n}')
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f'edge ({u}, {v}) has an endpoint outside 0..{n - 1}')
        if u == v:
            raise InvalidGraphError(f'self-loop at vertex {u}')
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(neighbors) for neighbors in adj))


def combine(mode: str, g1: Graph, g2: Optional[Graph] = None) -> Graph:
    if mode == 'complement':
        if g2 is not None:
            raise ValueError('complement takes a single graph')
        matrix = 1 - g1.adjacency_matrix()
        np.fill_diagonal(matrix, 0)
        return Graph.from_adjacency_matrix(matrix)

    if mode not in ('disjoint_union', 'join'):
        raise ValueError(f'{mode} is not supported.')
    if g2 is None:
        raise ValueError(f'{mode} needs two graphs')

    offset = g1.n
    edges = g1.edges() + [(u + offset, v + offset) for u, v in g2.edges()]
    if mode == 'join':
        edges += [(u, v + offset) for u in range(g1.n) for v in range(g2.n)]
    return build_graph(g1.n + g2.n, edges)


def join_all(graphs: list[Graph]) -> Graph:
    result = graphs[0]
    for graph in graphs[1:]:
        result = combine('join', result, graph)
    return result
