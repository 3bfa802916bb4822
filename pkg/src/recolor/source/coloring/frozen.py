from typing import Optional, Sequence, Union

from source.errors import ColoringError
from source.graph_core import Graph
from source.coloring.coloring import Coloring, is_proper


def is_frozen(G: Graph, c: Union[Coloring, Sequence[int]], ell: Optional[int] = None) -> bool:
    '''Every vertex sees all ell colours in its closed neighbourhood.'''
    if not is_proper(G, c):
        raise ColoringError('frozen check needs a proper coloring')
    if ell is None:
        ell = c.ell if isinstance(c, Coloring) else max(c, default=1)
    colors = list(c)
    for v in range(G.n):
        seen = {colors[v]} | {colors[u] for u in G.adj[v]}
        if len(seen) < ell:
            return False
    return True


def find_frozen_coloring(G: Graph, ell: int) -> Optional[Coloring]:
    if ell < 1:
        raise ColoringError(f'palette size must be positive, got {ell}')
    n = G.n
    if n == 0:
        return Coloring((), ell)
    # a closed neighbourhood must be able to hold all ell colours
    if G.min_degree() < ell - 1:
        return None

    colors = [0] * n
    closed = [G.adj[v] | {v} for v in range(n)]

    def feasible(v: int) -> list[int]:
        forbidden = {colors[u] for u in G.adj[v]}
        return [c for c in range(1, ell + 1) if c not in forbidden]

    def still_possible(w: int) -> bool:
        present = {colors[u] for u in closed[w] if colors[u]}
        free = sum(1 for u in closed[w] if colors[u] == 0)
        return ell - len(present) <= free

    def backtrack(colored: int, max_used: int) -> bool:
        if colored == n:
            return True
        best, options = -1, None
        for v in range(n):
            if colors[v]:
                continue
            candidates = feasible(v)
            if len(candidates) == 0:
                return False
            if options is None or (len(candidates), -G.degree(v)) < (len(options), -G.degree(best)):
                best, options = v, candidates
        v = best
        for c in options:
            if c > max_used + 1:
                break
            colors[v] = c
            if all(still_possible(w) for w in closed[v]) and backtrack(colored + 1, max(max_used, c)):
                return True
        colors[v] = 0
        return False

    if backtrack(0, 0):
        return Coloring(tuple(colors), ell)
    return None
