from source.errors import (
    BoundViolationError,
    ClassMembershipError,
    ColoringError,
    FrozenObstructionError,
    PreconditionError,
)
from source.graph_core import Graph, bipartition, is_connected, is_family_free, recognize_kll_minus_matching
from source.coloring import Coloring, is_proper
from source.reconfig import PathBuilder, RecoloringPath
from source.procedures.renaming import renaming_walk


def check_bipartite_codiamond(G: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    '''Sides of a connected bipartite co-diamond-free graph; raises otherwise.'''
    if not is_connected(G):
        raise PreconditionError('graph is not connected')
    sides = bipartition(G)
    if sides is None:
        raise ClassMembershipError('graph is not bipartite')
    check = is_family_free(G, ['co-diamond'])
    if not check:
        raise ClassMembershipError('graph contains an induced co-diamond', check.pattern, check.embedding)
    return sides


def bipartite_target(G: Graph) -> tuple[int, ...]:
    '''The 2-colouring with the side of vertex 0 on colour 1.'''
    first, _ = bipartition(G)
    return tuple(1 if v in first else 2 for v in range(G.n))


def bipartite_codiamond_recolor(G: Graph, a: Coloring, ell: int) -> RecoloringPath:
    '''
    Floods a connected bipartite (triangle, co-diamond)-free graph into a
    2-colouring, recolouring every vertex at most twice.

    A colour i missing from one side lets the other side take i, after which
    the first side takes a single colour j != i. When every colour shows on
    both sides, every colour class is a single vertex; a vertex of colour i
    non-adjacent to the vertex of colour j on the other side moves to j,
    which empties colour i on its side. Without such a pair the graph is
    K_{ell,ell} minus a perfect matching.
    '''
    if not is_proper(G, a):
        raise ColoringError('coloring is not proper')
    sides = check_bipartite_codiamond(G)
    if ell < 3 and G.m > 0:
        raise PreconditionError(f'bipartite flooding needs at least 3 colors, got {ell}')
    if ell >= 3 and recognize_kll_minus_matching(G) == ell:
        raise FrozenObstructionError(f'graph is K_{{{ell},{ell}}} minus a perfect matching', ell)

    builder = PathBuilder(a, ell)

    def missing():
        for i in range(1, ell + 1):
            for k in (0, 1):
                if all(builder.color(v) != i for v in sides[k]):
                    return i, k
        return None

    found = missing()
    if found is None:
        owner = [{builder.color(v): v for v in side} for side in sides]
        if any(len(owner[k]) != len(sides[k]) for k in (0, 1)):
            raise ClassMembershipError('a color class on one side has two vertices, so the graph has a co-diamond')
        unlock = None
        for i in range(1, ell + 1):
            for j in range(1, ell + 1):
                if i != j and owner[1][j] not in G.adj[owner[0][i]]:
                    unlock = (i, j)
                    break
            if unlock is not None:
                break
        if unlock is None:
            raise FrozenObstructionError(f'graph is K_{{{ell},{ell}}} minus a perfect matching', ell)
        i, j = unlock
        builder.recolor(owner[0][i], j)
        found = (i, 0)

    i, k = found
    builder.recolor_all(sides[1 - k], i)
    j = 1 if i != 1 else 2
    builder.recolor_all(sides[k], j)

    path = builder.build()
    if path.max_count() > 2:
        raise BoundViolationError(f'bipartite flood recolored a vertex {path.max_count()} times')
    return path


def bipartite_codiamond_to_target(G: Graph, a: Coloring, ell: int) -> RecoloringPath:
    '''Flood into a 2-colouring, then rename onto bipartite_target.'''
    head = bipartite_codiamond_recolor(G, a, ell)
    target = Coloring(bipartite_target(G), ell)
    if G.n == 0:
        return head
    return head.then(renaming_walk(G, head.end, target, ell))


def bipartite_codiamond_connect(G: Graph, a: Coloring, b: Coloring, ell: int) -> RecoloringPath:
    '''Joins two colourings through their 2-colourings, in at most 6n steps.'''
    forward = bipartite_codiamond_recolor(G, a, ell)
    backward = bipartite_codiamond_recolor(G, b, ell)
    middle = renaming_walk(G, forward.end, backward.end, ell)
    path = forward.then(middle).then(backward.reversed())
    if len(path) > 6 * G.n:
        raise BoundViolationError(f'connecting path has {len(path)} steps, more than 6n = {6 * G.n}')
    return path
