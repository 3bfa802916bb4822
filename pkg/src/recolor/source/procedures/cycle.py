from source.errors import BoundViolationError, ColoringError, PreconditionError
from source.graph_core import catalog
from source.coloring import Coloring, is_proper
from source.reconfig import PathBuilder, RecoloringPath


def cycle_target(n: int) -> tuple[int, ...]:
    '''1, 2, 3 repeating around C_n; the last vertex takes 2 when n = 1 mod 3.'''
    colors = [i % 3 + 1 for i in range(n)]
    if n % 3 == 1:
        colors[-1] = 2
    return tuple(colors)


def _anchor(n: int, a: Coloring, target: tuple[int, ...]) -> tuple[int, int]:
    # the closing vertex must not hold the anchor's target colour, or it would be evacuated twice
    for s in range(n):
        for direction in (1, -1):
            closing = (s - direction) % n
            if a[closing] != target[s]:
                return s, direction
    raise PreconditionError('no anchor for the cycle sweep')


def cycle_recolor(n: int, a: Coloring, ell: int) -> RecoloringPath:
    '''
    Recolours C_n (vertex i adjacent to i+1 mod n) from a to cycle_target(n),
    recolouring every vertex at most twice.

    The sweep fixes an anchor, then walks around the cycle setting each vertex
    to its target colour. Before a vertex is set, the next vertex is evacuated
    to a fourth colour if it holds that target colour.
    '''
    if ell < 4:
        raise PreconditionError(f'cycle recoloring needs at least 4 colors, got {ell}')
    if n < 3:
        raise PreconditionError(f'a cycle has at least 3 vertices, got {n}')
    G = catalog('cycle', n)
    if a.n != n or not is_proper(G, a):
        raise ColoringError('coloring is not a proper coloring of the cycle')

    target = cycle_target(n)
    s, direction = _anchor(n, a, target)
    order = [(s + direction * k) % n for k in range(n)]
    builder = PathBuilder(a, ell)

    def evacuate(u: int, avoid: int):
        if builder.color(u) != avoid:
            return
        blocked = {avoid} | {builder.color(w) for w in G.adj[u]}
        builder.recolor(u, min(c for c in range(1, ell + 1) if c not in blocked))

    evacuate(order[1], target[s])
    evacuate(order[-1], target[s])
    builder.recolor(s, target[s])
    for k in range(1, n - 1):
        v = order[k]
        evacuate(order[k + 1], target[v])
        builder.recolor(v, target[v])
    builder.recolor(order[-1], target[order[-1]])

    path = builder.build()
    if path.max_count() > 2:
        raise BoundViolationError(f'cycle sweep recolored a vertex {path.max_count()} times')
    return path
