from source.errors import ColoringError, PreconditionError
from source.graph_core import Graph
from source.coloring import Coloring, is_proper
from source.reconfig import PathBuilder, RecoloringPath


def _others(G: Graph, removed: int) -> list[int]:
    # G.remove_vertex(removed) keeps this order
    return [w for w in range(G.n) if w != removed]


def _check_restriction(a: Coloring, others: list[int], subpath: RecoloringPath, which: str):
    if tuple(a[w] for w in others) != subpath.start.colors:
        raise PreconditionError(f'subpath does not start at the restriction of {which}')


def lift_dominated(G: Graph, u: int, v: int, a: Coloring, subpath: RecoloringPath) -> RecoloringPath:
    '''
    Lifts a path on G-u to G when u is dominated by v: u first copies the colour
    of v, then copies it again every time v is recoloured.
    '''
    if u == v or G.has_edge(u, v) or not G.adj[u] <= G.adj[v]:
        raise PreconditionError(f'vertex {u} is not dominated by vertex {v}')
    if not is_proper(G, a):
        raise ColoringError('coloring is not proper')
    others = _others(G, u)
    _check_restriction(a, others, subpath, 'a')

    builder = PathBuilder(a, max(a.ell, subpath.ell))
    builder.recolor(u, a[v])
    for w_local, c in subpath.steps:
        w = others[w_local]
        builder.recolor(w, c)
        if w == v:
            builder.recolor(u, c)
    return builder.build()


def lift_low_degree(G: Graph, v: int, subpath: RecoloringPath, a: Coloring, b: Coloring) -> RecoloringPath:
    '''
    Lifts a path on G-v from a to b. Whenever a neighbour is about to take the
    colour v currently holds, v first moves to a colour r missing from its
    neighbourhood; v takes its colour in b at the end.
    '''
    ell = max(a.ell, b.ell, subpath.ell)
    if G.degree(v) > ell - 2:
        raise PreconditionError(f'vertex {v} has degree {G.degree(v)} > {ell - 2}')
    for name, c in (('a', a), ('b', b)):
        if not is_proper(G, c):
            raise ColoringError(f'coloring {name} is not proper')
    others = _others(G, v)
    _check_restriction(a, others, subpath, 'a')
    if tuple(b[w] for w in others) != subpath.end.colors:
        raise PreconditionError('subpath does not end at the restriction of b')

    builder = PathBuilder(a, ell)
    for w_local, c in subpath.steps:
        w = others[w_local]
        if w in G.adj[v] and c == builder.color(v):
            blocked = {builder.color(x) for x in G.adj[v]} | {c}
            r = min(color for color in range(1, ell + 1) if color not in blocked)
            builder.recolor(v, r)
        builder.recolor(w, c)
    builder.recolor(v, b[v])
    return builder.build()
