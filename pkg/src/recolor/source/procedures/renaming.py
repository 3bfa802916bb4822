from source.errors import BoundViolationError, ColoringError, PreconditionError
from source.graph_core import Graph
from source.coloring import Coloring, ColorPartition, is_proper
from source.reconfig import PathBuilder, RecoloringPath


def renaming_walk(G: Graph, a: Coloring, b: Coloring, ell: int) -> RecoloringPath:
    '''
    Renames the colour classes of a into the colours b gives them, recolouring
    every vertex at most twice.

    Classes move as whole blocks. A class moves onto its target colour once no
    other class holds that colour. When every pending target is held, the
    holders form cycles; one holder of the cycle with the smallest target is
    parked on a colour no class uses, which unblocks the cycle.
    '''
    for name, c in (('a', a), ('b', b)):
        if not is_proper(G, c):
            raise ColoringError(f'coloring {name} is not proper')
    partition = ColorPartition.of(a)
    if partition != ColorPartition.of(b):
        raise ColoringError('colorings do not induce the same color classes')
    if ell < len(partition) + 1:
        raise PreconditionError(f'renaming {len(partition)} classes needs at least {len(partition) + 1} colors, got {ell}')

    blocks = partition.sorted_classes()
    current = [a[block[0]] for block in blocks]
    target = [b[block[0]] for block in blocks]
    builder = PathBuilder(a, ell)

    def move(i: int, color: int):
        builder.recolor_all(blocks[i], color)
        current[i] = color

    while True:
        pending = [i for i in range(len(blocks)) if current[i] != target[i]]
        if len(pending) == 0:
            break
        occupied = set(current)
        movable = [i for i in pending if target[i] not in occupied]
        if movable:
            i = min(movable, key=lambda i: target[i])
            move(i, target[i])
            continue
        blocked = min(pending, key=lambda i: target[i])
        holder = current.index(target[blocked])
        spare = min(c for c in range(1, ell + 1) if c not in occupied)
        move(holder, spare)

    path = builder.build()
    if path.max_count() > 2:
        raise BoundViolationError(f'renaming walk recolored a vertex {path.max_count()} times')
    return path
