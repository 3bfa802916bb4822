from typing import Iterator, Optional
from collections import deque

from source.graph_core.graph import Graph


def components(G: Graph) -> list[tuple[int, ...]]:
    '''Connected components as sorted vertex tuples, ordered by smallest vertex.'''
    seen = [False] * G.n
    blocks = []
    for root in range(G.n):
        if seen[root]:
            continue
        seen[root] = True
        block = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    block.append(u)
                    queue.append(u)
        blocks.append(tuple(sorted(block)))
    return blocks


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def co_components(G: Graph) -> list[tuple[int, ...]]:
    '''Components of the complement; more than one block means G is a join.'''
    unvisited = set(range(G.n))
    blocks = []
    while unvisited:
        root = min(unvisited)
        unvisited.remove(root)
        block = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            non_neighbors = [u for u in unvisited if u not in G.adj[v]]
            for u in non_neighbors:
                unvisited.remove(u)
                block.append(u)
                queue.append(u)
        blocks.append(tuple(sorted(block)))
    return blocks


def bipartition(G: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    '''
    Two sides of a proper 2-colouring, or None when G has an odd cycle.
    In every component the smallest vertex goes to the first side.
    '''
    side = [-1] * G.n
    for root in range(G.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    first = tuple(v for v in range(G.n) if side[v] == 0)
    second = tuple(v for v in range(G.n) if side[v] == 1)
    return first, second


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def cycle_order(G: Graph) -> Optional[list[int]]:
    '''Vertices in cyclic order starting 0, then its smaller neighbour, if G is a chordless cycle.'''
    if G.n < 3 or any(d != 2 for d in G.degrees()) or not is_connected(G):
        return None
    order = [0, min(G.adj[0])]
    while len(order) < G.n:
        previous, current = order[-2], order[-1]
        (following,) = G.adj[current] - {previous}
        order.append(following)
    return order


def is_path_graph(G: Graph) -> bool:
    if G.n == 0 or not is_connected(G):
        return False
    return G.m == G.n - 1 and G.max_degree() <= 2


def find_dominated_pair(G: Graph) -> Optional[tuple[int, int]]:
    for u in range(G.n):
        for v in range(G.n):
            if u == v or v in G.adj[u]:
                continue
            if G.adj[u] <= G.adj[v]:
                return u, v
    return None


def dominated_pairs(G: Graph) -> Iterator[tuple[int, int]]:
    for u in range(G.n):
        for v in range(G.n):
            if u != v and v not in G.adj[u] and G.adj[u] <= G.adj[v]:
                yield u, v


def cliques(G: Graph) -> Iterator[tuple[int, ...]]:
    '''Every non-empty clique once, as an increasing tuple.'''
    def grow(clique: list[int], candidates: list[int]):
        for i, v in enumerate(candidates):
            extended = clique + [v]
            yield tuple(extended)
            yield from grow(extended, [u for u in candidates[i + 1:] if u in G.adj[v]])

    yield from grow([], list(range(G.n)))


def max_clique(G: Graph) -> tuple[int, ...]:
    best: list[int] = []

    def expand(clique: list[int], candidates: list[int]):
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        for i, v in enumerate(candidates):
            if len(clique) + len(candidates) - i <= len(best):
                return
            expand(clique + [v], [u for u in candidates[i + 1:] if u in G.adj[v]])

    # high degree first finds a large clique early
    expand([], sorted(range(G.n), key=lambda v: (-G.degree(v), v)))
    return tuple(sorted(best))


def clique_number(G: Graph) -> int:
    return len(max_clique(G))


def triangles(G: Graph) -> Iterator[tuple[int, int, int]]:
    for u, v in G.edges():
        for w in sorted(G.adj[u] & G.adj[v]):
            if w > v:
                yield u, v, w


def find_tight_clique_cutset(G: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    '''
    A clique Q whose removal disconnects G, together with a component H of G-Q
    that is complete to Q. Smaller cliques are tried first.
    '''
    all_cliques = sorted(cliques(G), key=lambda q: (len(q), q))
    for clique in all_cliques:
        rest = [v for v in range(G.n) if v not in clique]
        if len(rest) == 0:
            continue
        sub = G.induced_subgraph(rest)
        blocks = components(sub)
        if len(blocks) < 2:
            continue
        for block in blocks:
            original = [rest[i] for i in block]
            if all(set(clique) <= G.adj[v] for v in original):
                return clique, tuple(original)
    return None


def is_complete_multipartite(G: Graph) -> bool:
    # non-adjacency must be an equivalence relation
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if v not in G.adj[u] and G.adj[u] != G.adj[v]:
                return False
    return True


def recognize_kll_minus_matching(G: Graph) -> Optional[int]:
    '''Returns ell when G is K_{ell,ell} minus a perfect matching.'''
    if G.n == 0 or G.n % 2 == 1:
        return None
    ell = G.n // 2
    if any(d != ell - 1 for d in G.degrees()):
        return None
    if ell == 1:
        return 1
    if ell == 2:
        # 2K2 is the only 1-regular graph on four vertices
        return 2

    sides = bipartition(G)
    if sides is None or not is_connected(G):
        return None
    left, right = sides
    if len(left) != ell or len(right) != ell:
        return None
    partner = {}
    for a in left:
        missing = [b for b in right if b not in G.adj[a]]
        if len(missing) != 1:
            return None
        partner[a] = missing[0]
    if len(set(partner.values())) != ell:
        return None
    return ell
