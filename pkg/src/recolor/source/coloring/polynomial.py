from functools import lru_cache

import numpy as np

from source.graph_core import Graph


def _falling_factorial(n: int) -> np.ndarray:
    '''Coefficients of x(x-1)...(x-n+1), lowest degree first.'''
    coefficients = np.array([1], dtype=np.int64)
    for i in range(n):
        coefficients = np.convolve(coefficients, np.array([-i, 1], dtype=np.int64))
    return coefficients


def _pad(coefficients: np.ndarray, size: int) -> np.ndarray:
    return np.pad(coefficients, (0, size - len(coefficients)))


@lru_cache(maxsize=None)
def _deletion_contraction(n: int, edges: frozenset[tuple[int, int]]) -> tuple[int, ...]:
    if len(edges) == 0:
        return tuple([0] * n + [1])
    if len(edges) == n * (n - 1) // 2:
        return tuple(int(x) for x in _falling_factorial(n))

    u, v = min(edges)
    deleted = _deletion_contraction(n, edges - {(u, v)})

    # merge v into u, then shift labels above v down by one
    def relabel(w: int) -> int:
        w = u if w == v else w
        return w - 1 if w > v else w

    contracted_edges = set()
    for a, b in edges:
        if (a, b) == (u, v):
            continue
        a, b = relabel(a), relabel(b)
        if a != b:
            contracted_edges.add((min(a, b), max(a, b)))
    contracted = _deletion_contraction(n - 1, frozenset(contracted_edges))

    size = n + 1
    result = _pad(np.array(deleted, dtype=np.int64), size) - _pad(np.array(contracted, dtype=np.int64), size)
    return tuple(int(x) for x in result)


def chromatic_polynomial(G: Graph) -> np.ndarray:
    '''Coefficients of P(G, x), lowest degree first; meant for small graphs.'''
    return np.array(_deletion_contraction(G.n, frozenset(G.edges())), dtype=np.int64)


def evaluate_chromatic_polynomial(G: Graph, ell: int) -> int:
    total = 0
    for coefficient in reversed(_deletion_contraction(G.n, frozenset(G.edges()))):
        total = total * ell + int(coefficient)
    return total
