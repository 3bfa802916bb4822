from typing import Optional

from source.graph_core import Graph, components, co_components, clique_number


def greedy_coloring(G: Graph) -> list[int]:
    '''DSATUR: colour the most saturated vertex next with its smallest free colour.'''
    colors = [0] * G.n
    seen: list[set[int]] = [set() for _ in range(G.n)]
    for _ in range(G.n):
        v = max(
            (u for u in range(G.n) if colors[u] == 0),
            key=lambda u: (len(seen[u]), G.degree(u), -u),
        )
        c = 1
        while c in seen[v]:
            c += 1
        colors[v] = c
        for u in G.adj[v]:
            seen[u].add(c)
    return colors


def find_coloring(G: Graph, k: int) -> Optional[list[int]]:
    '''A proper colouring with colours 1..k, or None when G is not k-colourable.'''
    n = G.n
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [0] * n

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            saturation = len({colors[u] for u in G.adj[v] if colors[u]})
            key = (saturation, G.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def backtrack(colored: int, max_used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        forbidden = {colors[u] for u in G.adj[v]}
        # a fresh colour is interchangeable with any other fresh colour
        for c in range(1, min(k, max_used + 1) + 1):
            if c in forbidden:
                continue
            colors[v] = c
            if backtrack(colored + 1, max(max_used, c)):
                return True
        colors[v] = 0
        return False

    if backtrack(0, 0):
        return colors
    return None


def _solve(G: Graph) -> list[int]:
    if G.n == 0:
        return []

    blocks = components(G)
    if len(blocks) > 1:
        colors = [0] * G.n
        for block in blocks:
            for v, c in zip(block, _solve(G.induced_subgraph(block))):
                colors[v] = c
        return colors

    # chi(join) is the sum over the co-components
    co_blocks = co_components(G)
    if len(co_blocks) > 1:
        colors = [0] * G.n
        offset = 0
        for block in co_blocks:
            part = _solve(G.induced_subgraph(block))
            for v, c in zip(block, part):
                colors[v] = c + offset
            offset += max(part)
        return colors

    upper = greedy_coloring(G)
    for k in range(clique_number(G), max(upper)):
        colors = find_coloring(G, k)
        if colors is not None:
            return colors
    return upper


def optimal_coloring(G: Graph) -> list[int]:
    '''A chi(G)-colouring using exactly the colours 1..chi(G).'''
    colors = _solve(G)
    # renumber by first appearance so that the palette is 1..chi without gaps
    order: dict[int, int] = {}
    for c in colors:
        order.setdefault(c, len(order) + 1)
    return [order[c] for c in colors]


def chromatic_number(G: Graph) -> int:
    return len(set(_solve(G)))
